#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "suchain/chain.hpp"
#include "suchain/invariants.hpp"

#include <json.hpp>

#include <random>

using namespace suchain;

TEST_CASE("bracket table without the field closes on the cone") {
  auto sys = regular_system(0.1);
  BracketTable t = specialize_eps(bracket_table_regular(sys), Q3(0));
  CHECK(t.entries.size() == 10);
  for (const auto& e : t.entries) {
    CAPTURE(e.left + "," + e.right);
    CHECK(e.match);
  }
}

TEST_CASE("bracket table entries that do not involve u3") {
  auto sys = regular_system(0.1);
  BracketTable t = bracket_table_regular(sys);
  auto c = couplings(sys);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == Q3(1));
  CHECK(c[1] + c[2] == Q3::sqrt3());
  for (const auto& e : t.entries) {
    if (e.left == "u3" || e.right == "u3") continue;
    CAPTURE(e.left + "," + e.right);
    CHECK(e.match);
  }
  CHECK(nlohmann::json::parse(t.json())["entries"].size() == 10);
  CHECK(t.text().find("{v,w}") != std::string::npos);
}

TEST_CASE("bracket table including u3" * doctest::may_fail()) {
  BracketTable t = bracket_table_regular(regular_system(0.1));
  CHECK(t.pass());
}

TEST_CASE("cubic relation and its negative control") {
  LieAlgebra ch = build_su3_chevalley();
  CHECK(cubic_relation_residual(ch).is_zero());
  CHECK_FALSE(cubic_relation_residual(ch, Q3::frac(1, 10)).is_zero());
}

TEST_CASE("invariant phi relation and its negative control") {
  auto sys = irregular_system(0.3);
  std::mt19937_64 rng(1);
  PhiRelation r = phi_relation_irregular(sys, 10, rng);
  CHECK(r.samples == 10);
  CHECK(r.invariant_residual < 1e-12);
  std::mt19937_64 rng2(1);
  PhiRelation bad = phi_relation_irregular(sys, 10, rng2, 2.0);
  CHECK(bad.invariant_residual > 1e-3);
}

TEST_CASE("centre elements Poisson commute with everything monitored") {
  std::mt19937_64 rng(2);
  for (const auto& sys : {regular_system(0.2), irregular_system(0.2)}) {
    CertificateReport r = center_check(sys, 5, rng);
    CHECK(r.pass());
    CHECK(center_elements(sys).size() == (sys.tag == Case::regular ? 2u : 1u));
  }
}

TEST_CASE("rank of the integral family") {
  std::mt19937_64 rng(3);
  auto reg = regular_system(0.2), irr = irregular_system(0.2);
  for (int t = 0; t < 3; ++t) {
    CHECK(jacobian_rank_pi1(reg, random_point(reg, rng)) == 10);
    CHECK(jacobian_rank_pi1(irr, random_point(irr, rng)) == 7);
  }
}

TEST_CASE("minors of the A matrix") {
  auto sys = irregular_system(0.2);
  auto got = a_matrix_minors(sys), want = expected_minors(sys);
  REQUIRE(got.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(got[k] == want[k]);
  CHECK(a_matrix_rank(sys, Eigen::Vector4d(0.3, -0.1, 0.7, 0.2)) == 3);
  CHECK(a_matrix_rank(sys, Eigen::Vector4d::Zero()) == 0);
}

TEST_CASE("dimension ledger") {
  std::mt19937_64 rng(4);
  auto reg = regular_system(0.2);
  Dimensions d = measure_dimensions(reg, random_point(reg, rng));
  CHECK(d.trdeg_f1 == 8);
  CHECK(d.trdeg_a == 10);
  CHECK(d.phase_dim == 12);
  auto irr = irregular_system(0.2);
  Dimensions e = measure_dimensions(irr, random_point(irr, rng));
  CHECK(e.trdeg_f1 == 7);
  CHECK(e.trdeg_a == 7);
  CHECK(e.phase_dim == 8);
  CHECK(dimension_report(reg, 3, rng).pass());
  CHECK(dimension_report(irr, 3, rng).pass());
}

TEST_CASE("certificate JSON") {
  CertificateReport r;
  r.case_tag = "regular";
  r.seed = 7;
  r.add({"a", "0", "0", 0.0, true, false});
  r.add({"b", "0", "1", 0.0, false, true});
  CHECK(r.pass());
  auto j = nlohmann::json::parse(r.json());
  CHECK(j["case"] == "regular");
  CHECK(j["checks"].size() == 2);
  r.add({"c", "0", "1", 0.0, false, false});
  CHECK_FALSE(r.pass());
}
