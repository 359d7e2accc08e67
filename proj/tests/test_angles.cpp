#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "suchain/angles.hpp"

#include <random>

using namespace suchain;

namespace {

// distance on the circle of circumference p
double circ(double a, double p = 2 * M_PI) {
  double r = std::fmod(std::abs(a), p);
  return std::min(r, p - r);
}

}  // namespace

TEST_CASE("positive real root coordinates have zero phases") {
  auto sys = regular_system(0.2);
  // X = -(X_1 + X_2 + X_3) puts 1 in each lower entry of xi
  PhasePoint p{Eigen::MatrixXcd::Identity(3, 3), Eigen::VectorXd::Zero(6)};
  p.X.head(3).setConstant(-1.0);
  Eigen::Vector3cd z = root_coordinates(sys, p);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(z(k) - 1.0) < 1e-14);
  Eigen::Vector3d th = root_phases(sys, p);
  for (int k = 0; k < 3; ++k) CHECK(circ(th(k)) < 1e-14);
  Eigen::Vector2d phi = torus_angles(sys, p);
  CHECK(circ(phi(0)) < 1e-14);
  CHECK(circ(phi(1)) < 1e-14);
  p.X(0) = 0.0;
  CHECK_THROWS(root_phases(sys, p));
}

TEST_CASE("Theta and its left inverse") {
  auto sys = regular_system(0.2);
  Eigen::Matrix<double, 3, 2> th = theta_matrix(sys);
  Eigen::Matrix<double, 3, 2> want;
  want << 2, -1, -1, 2, 1, 1;
  CHECK((th - want).norm() == doctest::Approx(0.0));
  CHECK((left_inverse_l() * th - Eigen::Matrix2d::Identity()).norm() < 1e-15);
}

TEST_CASE("root phases are torus equivariant") {
  auto sys = regular_system(0.2);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (int t = 0; t < 10; ++t) {
    PhasePoint p = random_point(sys, rng);
    Eigen::Vector2d s(u(rng), u(rng));
    PhasePoint q = right_torus_action(sys, p, s);
    Eigen::Vector3cd z0 = root_coordinates(sys, p), z1 = root_coordinates(sys, q);
    Eigen::Vector3d shift = -theta_matrix(sys) * s;
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(std::abs(z1(k)) - std::abs(z0(k))) < 1e-12);
      CHECK(circ(std::arg(z1(k) / z0(k)) - shift(k)) < 1e-12);
    }
    // the torus angles move by sigma, up to their 2pi/3 branch
    Eigen::Vector2d d = torus_angles(sys, q) - torus_angles(sys, p);
    CHECK(circ(d(0) - s(0), 2 * M_PI / 3) < 1e-12);
    CHECK(circ(d(1) - s(1), 2 * M_PI / 3) < 1e-12);
  }
}

TEST_CASE("a full turn of a coroot is the identity") {
  auto sys = regular_system(0.2);
  std::mt19937_64 rng(2);
  PhasePoint p = random_point(sys, rng);
  for (int l = 0; l < 2; ++l) {
    PhasePoint q = right_torus_action(sys, p, Eigen::Vector2d::Unit(l) * (2 * M_PI));
    CHECK((q.g - p.g).norm() < 1e-12);
  }
}

TEST_CASE("actions commute and the irregular angle is conjugate to R") {
  std::mt19937_64 rng(3);
  auto reg = regular_system(0.2);
  for (int t = 0; t < 3; ++t) {
    Canonicity c = canonicity(reg, random_point(reg, rng));
    CHECK(c.j_j.cwiseAbs().maxCoeff() < 1e-10);
    CHECK((c.phi_tilde_j - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-5);
  }
  auto irr = irregular_system(0.2);
  for (int t = 0; t < 3; ++t) {
    Canonicity c = canonicity(irr, random_point(irr, rng));
    CHECK(std::abs(c.u_dot_omega - 1.0) < 1e-10);
  }
}

TEST_CASE("rescaled angles Poisson commute" * doctest::may_fail()) {
  std::mt19937_64 rng(4);
  auto reg = regular_system(0.2);
  Canonicity c = canonicity(reg, random_point(reg, rng));
  CHECK(std::abs(c.phi_tilde_bracket) < 1e-5);
}

TEST_CASE("angle chart") {
  std::mt19937_64 rng(5);
  auto reg = regular_system(0.2);
  AngleChart a = angle_chart(reg, random_point(reg, rng));
  CHECK(a.omega.rows() == 2);
  CHECK(a.omega.cols() == 2);
  for (int k = 0; k < 3; ++k) CHECK((a.theta(k) >= 0 && a.theta(k) < 2 * M_PI));
}
