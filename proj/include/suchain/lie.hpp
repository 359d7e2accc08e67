#pragma once

#include "suchain/poly.hpp"
#include "suchain/scalar.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace suchain {

using ExactMatrix = std::vector<CQ3>;  // row-major, rep_dim x rep_dim

// Chevalley-type root data for su(3); matrices in the defining representation
struct RootData {
  std::vector<std::pair<int, int>> positions;  // alpha_k <-> matrix entry (i,j), i<j
  std::vector<Eigen::MatrixXcd> e_pos;         // E_{alpha_k}
  std::vector<Eigen::MatrixXcd> e_neg;         // E_{-alpha_k}
  std::vector<Eigen::MatrixXcd> coroots;       // H_{alpha_k} = i(e_ii - e_jj), in su(3)
  Eigen::MatrixXd cartan;                      // alpha_k(H_{alpha_l}) / i for simple k,l
};

struct LieAlgebra {
  std::string name;
  int dim = 0;
  std::vector<std::string> labels;
  VarNames vars;
  std::vector<Q3> structure;  // C_ij^k at (i*dim + j)*dim + k
  MatrixQ bform;
  Q3 trace_factor;  // B(X,Y) = -trace_factor * tr(XY)
  int rep_dim = 0;
  std::vector<ExactMatrix> rep_exact;
  std::vector<Eigen::MatrixXcd> rep;
  std::string rescaling;
  std::optional<RootData> roots;

  // derived numeric data
  Eigen::MatrixXd bform_d, bform_inv_d;
  std::vector<Polynomial> ad_linear;  // sum_k C_ij^k x_k at i*dim + j

  const Q3& C(int i, int j, int k) const { return structure[(i * dim + j) * dim + k]; }
};

struct Subalgebra {
  std::vector<int> a_indices;
  std::vector<int> m_indices;
};

LieAlgebra build_su3_gellmann();
LieAlgebra build_su3_chevalley();
LieAlgebra build_su2();

// invariant checks, each exact
bool check_antisymmetry(const LieAlgebra& alg);
bool check_jacobi(const LieAlgebra& alg);
bool check_ad_invariance(const LieAlgebra& alg);
bool check_rep_closure(const LieAlgebra& alg);
bool check_subalgebra(const LieAlgebra& alg, const Subalgebra& sub);

// numeric views
Eigen::MatrixXcd to_matrix(const LieAlgebra& alg, const Eigen::VectorXd& comps);
Eigen::VectorXd pairings(const LieAlgebra& alg, const Eigen::MatrixXcd& m);
Eigen::VectorXd components(const LieAlgebra& alg, const Eigen::MatrixXcd& m);
double bform(const LieAlgebra& alg, const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
Eigen::VectorXd bracket(const LieAlgebra& alg, const Eigen::VectorXd& x, const Eigen::VectorXd& y);
Eigen::MatrixXcd project(const LieAlgebra& alg, const std::vector<int>& idx, const Eigen::MatrixXcd& m);

// exact views
MatrixQ ad_matrix(const LieAlgebra& alg, const VectorQ& w);
VectorQ bracket(const LieAlgebra& alg, const VectorQ& x, const VectorQ& y);
Q3 bform(const LieAlgebra& alg, const VectorQ& x, const VectorQ& y);

// group
bool is_special_unitary(const Eigen::MatrixXcd& g, double tol = 1e-12);
Eigen::VectorXd adjoint_group(const LieAlgebra& alg, const Eigen::MatrixXcd& g, const Eigen::VectorXd& x);
Eigen::MatrixXcd exp_map(const LieAlgebra& alg, const Eigen::VectorXd& x);
Eigen::MatrixXcd exp_skew(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd reproject_special_unitary(const Eigen::MatrixXcd& g);

// centralizer of W; throws if W = 0 or the kernel is not spanned by basis elements
Subalgebra centralizer_of(const LieAlgebra& alg, const VectorQ& w);
Subalgebra centralizer_of(const LieAlgebra& alg, const Eigen::VectorXd& w, double tol = 1e-10);

struct Regularity {
  bool regular = true;
  std::vector<std::pair<int, int>> vanishing_roots;  // eigenvalue index pairs with equal values
};
Regularity regularity(const LieAlgebra& alg, const Eigen::VectorXd& w, double tol = 1e-10);

// text serialization of an algebra spec
std::string serialize(const LieAlgebra& alg);

}  // namespace suchain
