#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "suchain/lie.hpp"
#include "suchain/linalg.hpp"

#include <cmath>
#include <random>

using namespace suchain;
using cd = std::complex<double>;

namespace {

Eigen::VectorXd random_vec(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::VectorXd v(n);
  for (int k = 0; k < n; ++k) v(k) = u(rng);
  return v;
}

VectorQ unit_q(int n, int k, const Q3& c = Q3(1)) {
  VectorQ v = VectorQ::Constant(n, Q3(0));
  v(k) = c;
  return v;
}

}  // namespace

TEST_CASE("builders satisfy the algebra axioms exactly") {
  for (const LieAlgebra& g : {build_su3_gellmann(), build_su3_chevalley(), build_su2()}) {
    CAPTURE(g.name);
    CHECK(check_antisymmetry(g));
    CHECK(check_jacobi(g));
    CHECK(check_ad_invariance(g));
    CHECK(check_rep_closure(g));
    CHECK(static_cast<int>(g.labels.size()) == g.dim);
  }
}

TEST_CASE("structure constants agree with the matrix oracle") {
  LieAlgebra g = build_su3_gellmann();
  auto c = oracle::structure(oracle::anti_hermitian(oracle::gellmann()));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) CHECK(g.C(i, j, k).to_double() == doctest::Approx(c[(i * 8 + j) * 8 + k]).epsilon(1e-12));
  // [e1,e2] = 2 e3 and the sqrt3 constants of e8
  CHECK(g.C(0, 1, 2) == Q3(2));
  CHECK(g.C(3, 4, 7) == Q3::sqrt3());
  CHECK(g.C(5, 6, 7) == Q3::sqrt3());
  CHECK(g.C(0, 2, 1) == Q3(-2));

  LieAlgebra ch = build_su3_chevalley();
  auto cc = oracle::structure(ch.rep);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k)
        CHECK(ch.C(i, j, k).to_double() == doctest::Approx(cc[(i * 8 + j) * 8 + k]).epsilon(1e-12));
}

TEST_CASE("bilinear forms") {
  LieAlgebra g = build_su3_gellmann();
  CHECK(g.bform == MatrixQ::Identity(8, 8));
  LieAlgebra ch = build_su3_chevalley();
  CHECK(ch.bform == MatrixQ::Identity(8, 8) * Q3(2));
  // B(X,Y) = -tr(XY) directly on matrices
  std::mt19937_64 rng(3);
  Eigen::VectorXd x = random_vec(rng, 8), y = random_vec(rng, 8);
  double tr = -(to_matrix(ch, x) * to_matrix(ch, y)).trace().real();
  CHECK(bform(ch, to_matrix(ch, x), to_matrix(ch, y)) == doctest::Approx(tr));
}

TEST_CASE("root data of the Chevalley basis") {
  LieAlgebra ch = build_su3_chevalley();
  REQUIRE(ch.roots);
  const auto& rd = *ch.roots;
  for (std::size_t k = 0; k < 3; ++k) {
    // B(E_a, E_-a) = -tr(E_a E_-a) = 1
    CHECK((-(rd.e_pos[k] * rd.e_neg[k]).trace()).real() == doctest::Approx(1.0));
    // [E_a, E_-a] = i H_a
    Eigen::MatrixXcd c = rd.e_pos[k] * rd.e_neg[k] - rd.e_neg[k] * rd.e_pos[k];
    CHECK((c - cd(0, 1) * rd.coroots[k]).norm() == doctest::Approx(0.0));
  }
  Eigen::Matrix2d want;
  want << 2, -1, -1, 2;
  CHECK((rd.cartan - want).norm() == doctest::Approx(0.0));
  CHECK(ch.labels == std::vector<std::string>{"h1", "h2", "x1", "x2", "x3", "y1", "y2", "y3"});
}

TEST_CASE("adjoint action and exponential") {
  LieAlgebra g = build_su3_gellmann();
  std::mt19937_64 rng(4);
  for (int t = 0; t < 5; ++t) {
    Eigen::VectorXd a = random_vec(rng, 8), x = random_vec(rng, 8), y = random_vec(rng, 8);
    Eigen::MatrixXcd u = exp_map(g, a);
    CHECK(is_special_unitary(u, 1e-12));
    // Ad is a Lie algebra automorphism and preserves B
    Eigen::VectorXd lhs = adjoint_group(g, u, bracket(g, x, y));
    Eigen::VectorXd rhs = bracket(g, adjoint_group(g, u, x), adjoint_group(g, u, y));
    CHECK((lhs - rhs).norm() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(adjoint_group(g, u, x).dot(adjoint_group(g, u, y)) == doctest::Approx(x.dot(y)));
    // exp against a truncated series
    Eigen::MatrixXcd m = to_matrix(g, 0.3 * a), s = Eigen::MatrixXcd::Identity(3, 3), term = s;
    for (int k = 1; k < 30; ++k) {
      term = term * m / static_cast<double>(k);
      s += term;
    }
    CHECK((exp_map(g, 0.3 * a) - s).norm() < 1e-12);
  }
  LieAlgebra ch = build_su3_chevalley();
  Eigen::VectorXd h1 = Eigen::VectorXd::Unit(8, 0) * (2 * M_PI);
  CHECK((exp_map(ch, h1) - Eigen::MatrixXcd::Identity(3, 3)).norm() < 1e-12);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(3, 3) * 2.0;
  CHECK_THROWS(adjoint_group(g, bad, random_vec(rng, 8)));
  // reprojection fixes a perturbed unitary
  Eigen::MatrixXcd u = exp_map(g, random_vec(rng, 8));
  u(0, 1) += 1e-6;
  CHECK(is_special_unitary(reproject_special_unitary(u), 1e-12));
}

TEST_CASE("centralizers") {
  LieAlgebra g = build_su3_gellmann();
  // i W = diag(2,-1,-1) up to scale: S(U(1) x U(2)) acting on coordinates 2,3
  Eigen::MatrixXcd w = cd(0, -1) * Eigen::Vector3cd(2, -1, -1).asDiagonal().toDenseMatrix();
  Subalgebra s = centralizer_of(g, components(g, Eigen::MatrixXcd(w)));
  CHECK(s.a_indices == std::vector<int>{2, 5, 6, 7});
  CHECK(check_subalgebra(g, s));
  // exact W = -sqrt3 e8
  Subalgebra irr = centralizer_of(g, unit_q(8, 7, Q3::sqrt3(-1)));
  CHECK(irr.a_indices == std::vector<int>{0, 1, 2, 7});
  CHECK(irr.m_indices == std::vector<int>{3, 4, 5, 6});
  CHECK(check_subalgebra(g, irr));

  LieAlgebra ch = build_su3_chevalley();
  VectorQ wr = VectorQ::Constant(8, Q3(0));
  wr(0) = Q3::frac(1, 2);
  wr(1) = Q3::frac(1, 2);
  Subalgebra t = centralizer_of(ch, wr);
  CHECK(t.a_indices == std::vector<int>{0, 1});
  CHECK(regularity(ch, Eigen::Vector<double, 8>(0.5, 0.5, 0, 0, 0, 0, 0, 0)).regular);
  // H2 alone is irregular with a 4-dimensional centralizer
  Subalgebra t2 = centralizer_of(ch, unit_q(8, 1));
  CHECK(t2.a_indices.size() == 4);
  auto reg = regularity(ch, Eigen::VectorXd::Unit(8, 1));
  CHECK_FALSE(reg.regular);
  CHECK(reg.vanishing_roots.size() == 1);

  CHECK_THROWS(centralizer_of(g, VectorQ(VectorQ::Constant(8, Q3(0)))));
  CHECK_THROWS(centralizer_of(g, Eigen::VectorXd(Eigen::VectorXd::Zero(8))));
  // a generic element: kernel is a torus not aligned with the basis
  std::mt19937_64 rng(6);
  CHECK_THROWS(centralizer_of(g, random_vec(rng, 8)));
}

TEST_CASE("rank-nullity on random ad maps") {
  LieAlgebra g = build_su3_gellmann();
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int t = 0; t < 5; ++t) {
    VectorQ w(8);
    for (int k = 0; k < 8; ++k) w(k) = Q3(c(rng));
    MatrixQ ad = ad_matrix(g, w);
    auto ns = nullspace(ad);
    CHECK(rank(ad) + static_cast<int>(ns.size()) == 8);
    for (const auto& v : ns) CHECK(VectorQ(ad * v) == VectorQ::Constant(8, Q3(0)));
  }
}

TEST_CASE("su2 torus split") {
  LieAlgebra g = build_su2();
  Subalgebra s = centralizer_of(g, unit_q(3, 0));
  CHECK(s.a_indices == std::vector<int>{0});
  CHECK(s.m_indices == std::vector<int>{1, 2});
  CHECK(g.C(0, 1, 2) == Q3(2));
}

TEST_CASE("serialization") {
  LieAlgebra g = build_su3_chevalley();
  std::string s = serialize(g);
  CHECK(s.rfind("algebra su3-chevalley\n", 0) == 0);
  CHECK(s.find("labels h1 h2 x1 x2 x3 y1 y2 y3") != std::string::npos);
  CHECK(serialize(build_su3_chevalley()) == s);
}
