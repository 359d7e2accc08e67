#pragma once

#include "suchain/lie.hpp"

#include <memory>

namespace suchain {

enum class Case { regular, irregular };

// one phase space T*(G/A): algebra, reductive split, W and eps
struct MagneticSystem {
  std::shared_ptr<const LieAlgebra> alg;
  Subalgebra sub;
  VectorQ W;  // components
  Eigen::VectorXd W_d;
  double eps = 0.0;
  Q3 eps_exact;
  Case tag = Case::regular;
};

// Chevalley basis, W = (H1+H2)/2, A = T
MagneticSystem regular_system(double eps);
// Gell-Mann basis, i*W = diag(-1,-1,2), A = S(U(2)xU(1))
MagneticSystem irregular_system(double eps);

const char* case_name(Case c);

}  // namespace suchain
