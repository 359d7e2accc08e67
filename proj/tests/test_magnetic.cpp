#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "suchain/invariants.hpp"
#include "suchain/magnetic.hpp"
#include "suchain/poisson.hpp"

#include <json.hpp>

#include <random>
#include <sstream>

using namespace suchain;

namespace {

Eigen::VectorXd random_vec(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::VectorXd v(n);
  for (int k = 0; k < n; ++k) v(k) = u(rng);
  return v;
}

std::vector<MagneticSystem> systems() { return {regular_system(0.3), irregular_system(0.3)}; }

}  // namespace

TEST_CASE("moment map at the identity, irregular case") {
  auto sys = irregular_system(0.25);
  PhasePoint p{Eigen::MatrixXcd::Identity(3, 3), Eigen::Vector4d(0.1, -0.2, 0.3, 0.4)};
  Eigen::VectorXd want(8);
  want << 0, 0, 0, 0.1, -0.2, 0.3, 0.4, std::sqrt(3.0) * 0.25;
  CHECK((moment_map(sys, p) - want).norm() == doctest::Approx(0.0));
}

TEST_CASE("moment map is left equivariant") {
  std::mt19937_64 rng(1);
  for (const auto& sys : systems()) {
    PhasePoint p = random_point(sys, rng);
    Eigen::MatrixXcd h = random_special_unitary(rng);
    PhasePoint q{h * p.g, p.X};
    Eigen::VectorXd lhs = moment_map(sys, q), rhs = adjoint_group(*sys.alg, h, moment_map(sys, p));
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("slice generators are A-invariant") {
  std::mt19937_64 rng(2);
  for (const auto& sys : systems()) {
    const LieAlgebra& g = *sys.alg;
    PhasePoint p = random_point(sys, rng);
    // a in A acts by (g a^-1, Ad(a) X)
    Eigen::VectorXd av = Eigen::VectorXd::Zero(g.dim);
    for (int k : sys.sub.a_indices) av(k) = random_vec(rng, 1)(0);
    Eigen::MatrixXcd a = exp_map(g, av);
    PhasePoint q{p.g * a.adjoint(), restrict_m(sys, adjoint_group(g, a, embed_m(sys, p.X)))};
    for (const auto& f : slice_generators(sys)) {
      CAPTURE(f.name());
      CHECK(f.invariant());
      CHECK(f.value(sys, q) == doctest::Approx(f.value(sys, p)).epsilon(1e-12));
    }
    CHECK((moment_map(sys, q) - moment_map(sys, p)).norm() < 1e-12);
  }
}

TEST_CASE("magnetic form against finite differences of the moment map") {
  std::mt19937_64 rng(3);
  for (const auto& sys : systems()) {
    const LieAlgebra& g = *sys.alg;
    PhasePoint p = random_point(sys, rng);
    Eigen::VectorXd eta = random_vec(rng, g.dim);
    auto f = [&](const PhasePoint& q) { return moment_map(sys, q).dot(g.bform_d * eta); };
    Eigen::VectorXd df = numeric_differential(sys, p, f);
    TangentVector xf = hvf_moment(sys, p, eta);
    const int n = static_cast<int>(df.size());
    for (int k = 0; k < n; ++k) CHECK(magform(sys, basis_tangent(sys, k), xf) == doctest::Approx(df(k)).epsilon(1e-6));
    Eigen::MatrixXd om = magform_matrix(sys, p);
    CHECK((om + om.transpose()).norm() < 1e-14);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(om);
    CHECK(lu.rank() == n);
  }
}

TEST_CASE("analytic fields and differentials match numeric ones") {
  std::mt19937_64 rng(4);
  for (const auto& sys : systems()) {
    PhasePoint p = random_point(sys, rng);
    auto fs = monitored_integrals(sys);
    for (const auto& f : fs) {
      CAPTURE(f.name());
      auto val = [&](const PhasePoint& q) { return f.value(sys, q); };
      Eigen::VectorXd numeric = numeric_hvf(sys, p, val);
      Eigen::VectorXd analytic = to_coefficients(f.field(sys, p));
      CHECK((numeric - analytic).norm() < 1e-6 * std::max(1.0, analytic.norm()));
      Eigen::VectorXd df = numeric_differential(sys, p, val);
      for (int k = 0; k < df.size(); ++k)
        CHECK(f.differential(sys, p, basis_tangent(sys, k)) == doctest::Approx(df(k)).epsilon(1e-6));
    }
  }
}

TEST_CASE("slice-bracket formula agrees with the twisted bracket") {
  std::mt19937_64 rng(5);
  auto sys = regular_system(0.4);
  auto gens = slice_generators(sys);
  PhasePoint p = random_point(sys, rng);
  Eigen::VectorXd mu = coords(*sys.alg, slice_map(sys, p));
  Eigen::VectorXd mu_eps(9);
  mu_eps << mu, sys.eps;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      double sym = slice_bracket(sys, gens[i].poly(), gens[j].poly()).evaluate(mu_eps);
      CHECK(twisted_bracket(sys, gens[i], gens[j], p) == doctest::Approx(sym).epsilon(1e-9));
    }
}

TEST_CASE("moment and slice functions Poisson commute") {
  std::mt19937_64 rng(6);
  for (const auto& sys : systems()) {
    PhasePoint p = random_point(sys, rng);
    for (const auto& a : moment_coordinates(sys))
      for (const auto& b : slice_generators(sys)) CHECK(std::abs(twisted_bracket(sys, a, b, p)) < 1e-10);
  }
}

TEST_CASE("flow agrees with the closed form") {
  std::mt19937_64 rng(7);
  for (const auto& sys : systems()) {
    PhasePoint p = random_point(sys, rng);
    const double t = 2.0;
    FlowTrajectory tr = integrate_flow(sys, p, t, 1e-3, 100);
    REQUIRE(tr.points.size() == 21);
    const auto& end = tr.points.back();
    // X(t) = Ad(exp(-t eps W)) X0, g(t) = g0 exp(t(X0 - eps W)) exp(t eps W)
    CHECK((end.X - lax_solution(sys, p.X, t)).norm() < 1e-10);
    Eigen::VectorXd x0 = embed_m(sys, p.X);
    Eigen::MatrixXcd gt =
        p.g * exp_map(*sys.alg, t * (x0 - sys.eps * sys.W_d)) * exp_map(*sys.alg, t * sys.eps * sys.W_d);
    CHECK((end.g - gt).norm() < 1e-9);
    CHECK(hamiltonian(sys, end) == doctest::Approx(hamiltonian(sys, p)).epsilon(1e-12));
    for (const auto& e : conservation_report(sys, tr, monitored_integrals(sys))) {
      CAPTURE(e.function);
      CHECK(e.pass);
    }
  }
}

TEST_CASE("a non-invariant slice function drifts") {
  std::mt19937_64 rng(8);
  auto sys = irregular_system(0.5);
  PhasePoint p = random_point(sys, rng);
  auto f = IntegralFunction::slice(sys, Polynomial::variable(sys.alg->vars, 3), "x4");
  CHECK_FALSE(f.invariant());
  FlowTrajectory tr = integrate_flow(sys, p, 5.0, 1e-3, 50);
  auto rep = conservation_report(sys, tr, {f});
  CHECK_FALSE(rep[0].pass);
  CHECK(rep[0].max_drift > 1e-3);
}

TEST_CASE("eps must be nonzero") {
  CHECK_THROWS(regular_system(0.0));
  CHECK_THROWS(irregular_system(0.0));
}

TEST_CASE("CSV and JSON exports") {
  std::mt19937_64 rng(9);
  auto sys = irregular_system(0.2);
  PhasePoint p = random_point(sys, rng);
  FlowTrajectory tr = integrate_flow(sys, p, 0.1, 1e-2, 5);
  auto fs = monitored_integrals(sys);
  std::string csv = trajectory_csv(sys, tr, fs);
  std::istringstream is(csv);
  std::string header;
  std::getline(is, header);
  CHECK(header.rfind("t,g11_re,g11_im,g12_re", 0) == 0);
  CHECK(header.find(",X_x4,X_x5,X_x6,X_x7,") != std::string::npos);
  CHECK(header.find(",R") != std::string::npos);
  std::size_t cols = std::count(header.begin(), header.end(), ',') + 1;
  CHECK(cols == 1 + 18 + 4 + fs.size());
  std::string line;
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    CHECK(static_cast<std::size_t>(std::count(line.begin(), line.end(), ',') + 1) == cols);
  }
  CHECK(rows == static_cast<int>(tr.points.size()));

  auto j = nlohmann::json::parse(conservation_json(conservation_report(sys, tr, fs)));
  REQUIRE(j.is_array());
  CHECK(j.size() == fs.size());
  CHECK(j[0].contains("function"));
  CHECK(j[0].contains("max_drift"));
  CHECK(j[0]["pass"].get<bool>());
}
