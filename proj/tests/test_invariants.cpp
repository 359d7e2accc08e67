#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "suchain/invariants.hpp"
#include "suchain/poisson.hpp"

#include <random>

using namespace suchain;

namespace {

std::vector<int> iota(int n) {
  std::vector<int> v(n);
  for (int k = 0; k < n; ++k) v[k] = k;
  return v;
}

std::vector<double> oracle_structure(const LieAlgebra& g) {
  return oracle::structure(g.rep);
}

Eigen::VectorXd random_vec(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::VectorXd v(n);
  for (int k = 0; k < n; ++k) v(k) = u(rng);
  return v;
}

}  // namespace

TEST_CASE("monomial enumeration") {
  CHECK(monomials({0, 1, 2}, 2).size() == 6);
  CHECK(monomials({0, 1, 2, 3}, 3).size() == 20);
  CHECK(monomials({4}, 5).size() == 1);
  CHECK(monomials({0, 1}, 0).size() == 1);
}

TEST_CASE("invariant dimensions agree with the brute-force oracle") {
  struct Case {
    LieAlgebra g;
    Subalgebra s;
    bool m_only;
  };
  LieAlgebra gm = build_su3_gellmann(), ch = build_su3_chevalley(), su2 = build_su2();
  std::vector<Case> cases = {
      {gm, {iota(8), {}}, false},
      {gm, {{0, 1, 2, 7}, {3, 4, 5, 6}}, true},
      {gm, {{0, 1, 2, 7}, {3, 4, 5, 6}}, false},
      {ch, {{0, 1}, {2, 3, 4, 5, 6, 7}}, true},
      {ch, {{0, 1}, {2, 3, 4, 5, 6, 7}}, false},
      {su2, {{0}, {1, 2}}, false},
  };
  for (const auto& c : cases) {
    auto oc = oracle_structure(c.g);
    std::vector<int> vars = c.m_only ? c.s.m_indices : iota(c.g.dim);
    for (int d = 0; d <= 4; ++d) {
      CAPTURE(c.g.name);
      CAPTURE(d);
      int want = oracle::invariant_dim(oc, c.g.dim, c.s.a_indices, vars, d);
      auto b = invariant_space(c.g, c.s, d, c.m_only);
      CHECK(static_cast<int>(b.basis.size()) == want);
      for (const auto& p : b.basis)
        for (int a : c.s.a_indices) CHECK(derivation(c.g, a, p).is_zero());
    }
  }
}

TEST_CASE("known invariant counts") {
  LieAlgebra gm = build_su3_gellmann();
  Subalgebra all{iota(8), {}};
  CHECK(invariant_space(gm, all, 1, false).basis.empty());
  CHECK(invariant_space(gm, all, 2, false).basis.size() == 1);
  CHECK(invariant_space(gm, all, 3, false).basis.size() == 1);
  LieAlgebra ch = build_su3_chevalley();
  Subalgebra t{{0, 1}, {2, 3, 4, 5, 6, 7}};
  CHECK(invariant_space(ch, t, 2, true).basis.size() == 3);
  CHECK(invariant_space(ch, t, 3, true).basis.size() == 2);
}

TEST_CASE("generators and relations of the torus commutant on m") {
  LieAlgebra ch = build_su3_chevalley();
  Subalgebra t{{0, 1}, {2, 3, 4, 5, 6, 7}};
  GeneratorSet gs = indecomposable_generators(ch, t, 6, true);
  REQUIRE(gs.generators.size() == 5);
  CHECK(gs.generators[0].degree == 2);
  CHECK(gs.generators[3].degree == 3);
  CHECK(gs.generators[0].name == "a1");
  // one relation, in degree 6, and it holds after expansion
  REQUIRE(gs.relations.size() == 1);
  CHECK(expand(gs, gs.relations[0]).is_zero());
  // deterministic
  CHECK(report(indecomposable_generators(ch, t, 6, true)) == report(gs));
}

TEST_CASE("generators of the full algebra are two Casimirs") {
  LieAlgebra gm = build_su3_gellmann();
  GeneratorSet gs = indecomposable_generators(gm, {iota(8), {}}, 5, false);
  REQUIRE(gs.generators.size() == 2);
  CHECK(gs.generators[0].degree == 2);
  CHECK(gs.generators[1].degree == 3);
  CHECK(gs.relations.empty());
}

TEST_CASE("Casimirs are central") {
  for (const LieAlgebra& g : {build_su3_gellmann(), build_su3_chevalley()}) {
    auto c = casimirs_su3(g);
    for (int k = 0; k < 8; ++k) {
      CHECK(lie_poisson_bracket(coordinate(g, k), c.c2, g).is_zero());
      CHECK(lie_poisson_bracket(coordinate(g, k), c.c3, g).is_zero());
    }
    std::mt19937_64 rng(12);
    for (int t = 0; t < 10; ++t) CHECK(c.c2.evaluate(random_vec(rng, 8)) > 0);
    CHECK(casimir_count(g, random_vec(rng, 8)) == 2);
    CHECK(independence_rank({c.c2, c.c3}, random_vec(rng, 8)) == 2);
  }
}

TEST_CASE("independence rank of the torus commutant") {
  LieAlgebra ch = build_su3_chevalley();
  Subalgebra t{{0, 1}, {2, 3, 4, 5, 6, 7}};
  std::vector<Polynomial> polys;
  for (int d = 1; d <= 3; ++d)
    for (const auto& p : invariant_space(ch, t, d, false).basis) polys.push_back(p);
  std::mt19937_64 rng(13);
  CHECK(independence_rank(polys, random_vec(rng, 8)) == 6);
}

TEST_CASE("restriction with a shift") {
  auto irr = irregular_system(0.1);
  auto c = casimirs_su3(*irr.alg);
  Polynomial r = restrict_shift(c.c2, irr);
  VarNames v = eps_vars(*irr.alg);
  CHECK(v->back() == "eps");
  // C2(X - eps W) = |X|^2 + 3 eps^2 on the orthonormal basis
  Polynomial want(v);
  for (int k : irr.sub.m_indices) want += Polynomial::variable(v, k).pow(2);
  want += Polynomial::variable(v, 8).pow(2) * Q3(3);
  CHECK(r == want);
  // bound eps agrees with the symbolic one
  Q3 e = Q3::frac(2, 7);
  Polynomial bound = restrict_shift(c.c3, irr, e);
  Polynomial sym = restrict_shift(c.c3, irr);
  std::vector<Polynomial> subs;
  for (int k = 0; k < 8; ++k) subs.push_back(Polynomial::variable(v, k));
  subs.push_back(Polynomial::constant(v, e));
  CHECK(sym.substitute(subs) == bound.rebind(v));

  auto reg = regular_system(0.1);
  Polynomial r2 = restrict_shift(casimirs_su3(*reg.alg).c2, reg);
  for (const auto& [e2, coef] : r2.terms())
    for (int k : reg.sub.a_indices) CHECK(e2[k] == 0);
}
