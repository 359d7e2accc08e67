#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "suchain/lie.hpp"
#include "suchain/poisson.hpp"
#include "suchain/invariants.hpp"

#include <random>

using namespace suchain;

TEST_CASE("Q(sqrt3) field operations") {
  Q3 a(mpq_class(1, 2), mpq_class(3)), b(mpq_class(-2), mpq_class(1, 5));
  CHECK((a * b).to_double() == doctest::Approx(a.to_double() * b.to_double()).epsilon(1e-15));
  CHECK((a / b).to_double() == doctest::Approx(a.to_double() / b.to_double()).epsilon(1e-15));
  CHECK((a * a.inverse()) == Q3(1));
  CHECK(Q3::sqrt3() * Q3::sqrt3() == Q3(3));
  CHECK((a + b - a) == b);
  CHECK(Q3::sqrt3(-1).sign() < 0);
  CHECK(Q3(mpq_class(7, 4), mpq_class(-1)).sign() > 0);  // 7/4 > sqrt3
  CHECK_THROWS(Q3(0).inverse());
}

TEST_CASE("Q(sqrt3) text round trip") {
  for (const Q3& q : {Q3(0), Q3::frac(-3, 7), Q3(mpq_class(1, 2), mpq_class(-5, 3)), Q3::sqrt3()}) {
    CHECK(Q3::parse(q.str()) == q);
  }
  CHECK(Q3(mpq_class(1, 2), mpq_class(1, 3)).str() == "(1/2)+(1/3)√3");
}

namespace {

VarNames xyz() { return make_vars({"x", "y", "z"}); }

Polynomial random_poly(VarNames v, std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, deg);
  Polynomial p(v);
  for (int t = 0; t < 5; ++t) {
    Exponents ex{};
    int left = deg;
    for (int i = 0; i < static_cast<int>(v->size()); ++i) {
      int k = std::min(left, e(rng));
      ex[i] = static_cast<std::uint8_t>(k);
      left -= k;
    }
    p.add_term(ex, Q3(mpq_class(c(rng)), mpq_class(c(rng), 2)));
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial ring axioms on random inputs") {
  std::mt19937_64 rng(1);
  auto v = xyz();
  for (int t = 0; t < 20; ++t) {
    Polynomial a = random_poly(v, rng, 3), b = random_poly(v, rng, 3), c = random_poly(v, rng, 2);
    CHECK((a * b) == (b * a));
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("canonical text round trip is exact") {
  std::mt19937_64 rng(2);
  auto v = xyz();
  for (int t = 0; t < 20; ++t) {
    Polynomial p = random_poly(v, rng, 4);
    std::string s = p.str();
    Polynomial q = Polynomial::parse(s, v);
    CHECK(q == p);
    CHECK(q.str() == s);
  }
  CHECK(Polynomial(v).str() == "0");
  Polynomial x = Polynomial::variable(v, 0), y = Polynomial::variable(v, 1);
  CHECK((x * x * y * Q3(2) + Polynomial::constant(v, Q3::frac(-1, 3))).str() == "2 * x^2 y + -1/3");
}

TEST_CASE("evaluate") {
  auto v = xyz();
  Polynomial x = Polynomial::variable(v, 0), y = Polynomial::variable(v, 1);
  VectorQ pt(3);
  pt << Q3(1), Q3(2), Q3(0);
  CHECK((x + y).evaluate(pt) == Q3(3));
  CHECK(Polynomial(v).evaluate(pt) == Q3(0));
  CHECK((x + y).evaluate(Eigen::VectorXd(Eigen::Vector3d(1, 2, 0))) == doctest::Approx(3.0));
  CHECK_THROWS((x + y).evaluate(Eigen::VectorXd(Eigen::Vector2d(1, 2))));
}

TEST_CASE("homogeneous components") {
  auto v = xyz();
  Polynomial x = Polynomial::variable(v, 0);
  auto hc = homogeneous_components(x * x + x);
  REQUIRE(hc.size() == 2);
  CHECK(hc[0].first == 2);
  CHECK(hc[0].second == x * x);
  CHECK(hc[1].first == 1);
  CHECK(hc[1].second == x);
  CHECK(homogeneous_components(Polynomial(v)).empty());
  auto c3 = casimirs_su3(build_su3_gellmann()).c3;
  auto h3 = homogeneous_components(c3);
  REQUIRE(h3.size() == 1);
  CHECK(h3[0].first == 3);
}

TEST_CASE("degree cap") {
  auto v = xyz();
  Polynomial x = Polynomial::variable(v, 0);
  CHECK_NOTHROW(x.pow(8));
  CHECK_THROWS_AS(x.pow(9), std::length_error);
}

TEST_CASE("Lie-Poisson bracket on coordinates") {
  LieAlgebra g = build_su3_gellmann();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Polynomial want(g.vars);
      for (int k = 0; k < 8; ++k) want += coordinate(g, k) * g.C(i, j, k);
      CHECK(lie_poisson_bracket(coordinate(g, i), coordinate(g, j), g) == want);
    }
  Polynomial p = coordinate(g, 0) * coordinate(g, 3) + coordinate(g, 7).pow(2);
  CHECK(lie_poisson_bracket(p, p, g).is_zero());
  CHECK_THROWS(lie_poisson_bracket(Polynomial::variable(xyz(), 0), p, g));
}

TEST_CASE("Jacobi identity of the bracket on su(3) coordinates") {
  LieAlgebra g = build_su3_gellmann();
  auto x = [&](int i) { return coordinate(g, i); };
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      for (int c = 0; c < 8; ++c) {
        Polynomial j = lie_poisson_bracket(x(a), lie_poisson_bracket(x(b), x(c), g), g) +
                       lie_poisson_bracket(x(b), lie_poisson_bracket(x(c), x(a), g), g) +
                       lie_poisson_bracket(x(c), lie_poisson_bracket(x(a), x(b), g), g);
        CHECK(j.is_zero());
      }
}

TEST_CASE("Leibniz rule and grading") {
  LieAlgebra g = build_su3_chevalley();
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    Polynomial p = random_poly(g.vars, rng, 2), q = random_poly(g.vars, rng, 2), r = random_poly(g.vars, rng, 3);
    CHECK(lie_poisson_bracket(p * q, r, g) == p * lie_poisson_bracket(q, r, g) + q * lie_poisson_bracket(p, r, g));
    for (const auto& [dp, hp] : homogeneous_components(p))
      for (const auto& [dr, hr] : homogeneous_components(r)) {
        Polynomial b = lie_poisson_bracket(hp, hr, g);
        if (!b.is_zero()) CHECK(b.degree() <= dp + dr - 1);
      }
  }
}

TEST_CASE("B-gradient") {
  LieAlgebra g = build_su3_gellmann();
  // linear coordinate: constant unit vector
  auto gr = b_gradient(coordinate(g, 4), g);
  for (int k = 0; k < 8; ++k) CHECK(gr[k] == Polynomial::constant(g.vars, Q3(k == 4 ? 1 : 0)));
  // C2 = B(Y,Y) on the orthonormal basis: gradient 2Y
  auto c = casimirs_su3(g);
  auto g2 = b_gradient(c.c2, g);
  for (int k = 0; k < 8; ++k) CHECK(g2[k] == coordinate(g, k) * Q3(2));
  // product rule
  Polynomial p = coordinate(g, 1) * coordinate(g, 2), q = coordinate(g, 7) + coordinate(g, 0).pow(2);
  auto gp = b_gradient(p * q, g), a = b_gradient(p, g), b = b_gradient(q, g);
  for (int k = 0; k < 8; ++k) CHECK(gp[k] == a[k] * q + b[k] * p);
}

TEST_CASE("gradient of C3 against finite differences of the trace formula") {
  LieAlgebra g = build_su3_gellmann();
  auto c3 = casimirs_su3(g).c3;
  auto gr = b_gradient(c3, g);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  auto c3_trace = [&](const Eigen::VectorXd& comps) {
    Eigen::MatrixXcd z = to_matrix(g, comps);
    return (std::complex<double>(0, 1) * (z * z * z).trace()).real();
  };
  for (int t = 0; t < 5; ++t) {
    Eigen::VectorXd y(8);
    for (int k = 0; k < 8; ++k) y(k) = u(rng);
    Eigen::VectorXd grad = evaluate(gr, y);  // orthonormal basis: pairings = components
    for (int k = 0; k < 8; ++k) {
      Eigen::VectorXd e = Eigen::VectorXd::Unit(8, k) * 1e-6;
      double fd = (c3_trace(y + e) - c3_trace(y - e)) / 2e-6;
      CHECK(grad(k) == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("C2 evaluation matches the trace formula") {
  LieAlgebra g = build_su3_chevalley();
  auto c2 = casimirs_su3(g).c2;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 10; ++t) {
    Eigen::VectorXd comps(8);
    for (int k = 0; k < 8; ++k) comps(k) = u(rng);
    Eigen::MatrixXcd z = to_matrix(g, comps);
    double want = -0.5 * (z * z).trace().real();
    CHECK(c2.evaluate(pairings(g, z)) == doctest::Approx(want).epsilon(1e-12));
  }
}
