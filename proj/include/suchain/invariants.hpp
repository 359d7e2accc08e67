#pragma once

#include "suchain/lie.hpp"
#include "suchain/poly.hpp"
#include "suchain/system.hpp"

#include <string>
#include <vector>

namespace suchain {

struct InvariantBasis {
  Subalgebra sub;
  int degree = 0;
  bool m_only = false;
  std::vector<Polynomial> basis;
};

struct Generator {
  std::string name;
  Polynomial poly;
  int degree = 0;
};

struct GeneratorSet {
  std::vector<Generator> generators;
  VarNames names;                    // generator names as polynomial variables
  std::vector<Polynomial> relations; // over names
};

// all monomials of a given degree in the allowed variables, largest first
std::vector<Exponents> monomials(const std::vector<int>& allowed, int degree);

// L_j p = {x_j, p}
Polynomial derivation(const LieAlgebra& alg, int j, const Polynomial& p);

InvariantBasis invariant_space(const LieAlgebra& alg, const Subalgebra& sub, int degree, bool restrict_to_m);
GeneratorSet indecomposable_generators(const LieAlgebra& alg, const Subalgebra& sub, int max_degree,
                                       bool restrict_to_m);
// substitute generator polynomials into a polynomial over the generator names
Polynomial expand(const GeneratorSet& gs, const Polynomial& rel);
std::string report(const GeneratorSet& gs);

struct Casimirs {
  Polynomial c2, c3;
};
// C2 = -1/2 tr(z^2), C3 = i tr(z^3) on the anti-Hermitian element z
Casimirs casimirs_su3(const LieAlgebra& alg);

// variables of the algebra plus a trailing symbolic eps
VarNames eps_vars(const LieAlgebra& alg);
// Res_W C (X) = C(X - eps W), X in m; symbolic eps (last variable of eps_vars)
Polynomial restrict_shift(const Polynomial& c, const MagneticSystem& sys);
// same with eps bound to a value
Polynomial restrict_shift(const Polynomial& c, const MagneticSystem& sys, const Q3& eps);

// rank of the Jacobian of the family at a point (SVD threshold 1e-10)
int independence_rank(const std::vector<Polynomial>& polys, const Eigen::VectorXd& point);
Eigen::MatrixXd jacobian(const std::vector<Polynomial>& polys, const Eigen::VectorXd& point);

// dim g - rank(sum_l C_ij^l x_l)
int casimir_count(const LieAlgebra& alg, const Eigen::VectorXd& point);

}  // namespace suchain
