#pragma once

#include "suchain/magnetic.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace suchain {

struct Check {
  std::string name;
  std::string expected;
  std::string observed;
  double tolerance = 0.0;  // 0 for exact checks
  bool pass = false;
  bool informational = false;  // reported, never fails the run
};

struct CertificateReport {
  std::string case_tag;
  std::vector<Check> checks;
  int sample_count = 0;
  std::uint64_t seed = 0;

  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const CertificateReport& other);
  bool pass() const;
  std::string json() const;
};

std::string fmt_double(double x);

struct BracketEntry {
  std::string left, right;
  Polynomial computed;   // over x, y, eps
  Polynomial expected;   // closed form expanded over x, y, eps
  Polynomial rewritten;  // computed, in generator names and eps
  Polynomial expected_generators;
  bool match = false;
};

struct BracketTable {
  std::vector<std::string> generator_names;
  VarNames names;  // generator names plus eps
  std::vector<Q3> couplings;  // c_k / eps
  std::vector<BracketEntry> entries;
  bool pass() const;
  std::string text() const;
  std::string json() const;
};

// c_k = eps B(W, H_alpha_k); returns the factor multiplying eps
std::vector<Q3> couplings(const MagneticSystem& sys);

BracketTable bracket_table_regular(const MagneticSystem& sys);
// eps set to a fixed value in every entry (0 gives the unmagnetized table)
BracketTable specialize_eps(const BracketTable& t, const Q3& eps);
// {P_i, P_j} = sum_k C_ij^k P_k as text
std::string moment_table(const LieAlgebra& alg);

// u1 u2 u3 - (v + shift)^2 - w^2 expanded in the slice coordinates
Polynomial cubic_relation_residual(const LieAlgebra& alg, const Q3& v_shift = Q3(0));

struct PhiRelation {
  double invariant_residual = 0.0;  // C3(P) - 3 eps (C2(P) - eps^2)
  double printed_residual = 0.0;    // C3(P) - 3 eps (2 eps^2 + P4^2 + P5^2 - 2 P6^2 - 2 P7^2)
  int samples = 0;
};
PhiRelation phi_relation_irregular(const MagneticSystem& sys, int samples, std::mt19937_64& rng,
                                   double coefficient = 3.0);

// R0 elements: regular P*C2, P*C3; irregular pi*R
std::vector<IntegralFunction> center_elements(const MagneticSystem& sys);
CertificateReport center_check(const MagneticSystem& sys, int samples, std::mt19937_64& rng);

// analytic Jacobian of a function family on the 2|m| basis tangent vectors
Eigen::MatrixXd phase_jacobian(const MagneticSystem& sys, const std::vector<IntegralFunction>& fs,
                               const PhasePoint& pt);
int jacobian_rank_pi1(const MagneticSystem& sys, const PhasePoint& pt);

// A_ij = B([e_{j+3}, X], e_i) with X = -sum x_j e_j over m, as polynomials
std::vector<std::vector<Polynomial>> a_matrix(const MagneticSystem& sys);
// 3x3 column minors, columns (123), (124), (134), (234)
std::vector<Polynomial> a_matrix_minors(const MagneticSystem& sys);
std::vector<Polynomial> expected_minors(const MagneticSystem& sys);
int a_matrix_rank(const MagneticSystem& sys, const Eigen::VectorXd& x);

struct Dimensions {
  int n = 0, r = 0, s = 0, rho = 0, trdeg_f1 = 0, trdeg_f2 = 0, trdeg_a = 0, trdeg_center = 0, phase_dim = 0;
};
Dimensions measure_dimensions(const MagneticSystem& sys, const PhasePoint& pt);
CertificateReport dimension_report(const MagneticSystem& sys, int samples, std::mt19937_64& rng);

}  // namespace suchain
