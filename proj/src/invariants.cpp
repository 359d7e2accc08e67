#include "suchain/invariants.hpp"

#include "suchain/linalg.hpp"
#include "suchain/poisson.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace suchain {

std::vector<Exponents> monomials(const std::vector<int>& allowed, int degree) {
  std::vector<Exponents> out;
  Exponents e{};
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
    if (pos + 1 == allowed.size()) {
      e[allowed[pos]] = static_cast<std::uint8_t>(left);
      out.push_back(e);
      e[allowed[pos]] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[allowed[pos]] = static_cast<std::uint8_t>(k);
      rec(pos + 1, left - k);
    }
    e[allowed[pos]] = 0;
  };
  if (allowed.empty()) {
    if (degree == 0) out.push_back(e);
    return out;
  }
  rec(0, degree);
  return out;
}

Polynomial derivation(const LieAlgebra& alg, int j, const Polynomial& p) {
  return lie_poisson_bracket(coordinate(alg, j), p, alg);
}

InvariantBasis invariant_space(const LieAlgebra& alg, const Subalgebra& sub, int degree, bool restrict_to_m) {
  if (degree > kDegreeCap) throw std::length_error("invariant_space: degree above cap");
  std::vector<int> allowed;
  if (restrict_to_m) {
    allowed = sub.m_indices;
  } else {
    for (int i = 0; i < alg.dim; ++i) allowed.push_back(i);
  }
  auto mons = monomials(allowed, degree);
  std::map<Exponents, int, GrlexGreater> col;
  for (std::size_t c = 0; c < mons.size(); ++c) col[mons[c]] = static_cast<int>(c);

  // rows of the stacked operator matrix, keyed by (j, output monomial)
  std::map<std::pair<int, Exponents>, SparseRowQ> rows;
  for (std::size_t c = 0; c < mons.size(); ++c) {
    Polynomial m(alg.vars);
    m.add_term(mons[c], Q3(1));
    for (int j : sub.a_indices) {
      Polynomial lm = derivation(alg, j, m);
      for (const auto& [e, v] : lm.terms()) rows[{j, e}][static_cast<int>(c)] = v;
    }
  }
  EchelonQ ech(static_cast<int>(mons.size()));
  for (auto& [key, row] : rows) ech.add(row);

  InvariantBasis out;
  out.sub = sub;
  out.degree = degree;
  out.m_only = restrict_to_m;
  for (const auto& v : ech.nullspace()) {
    Polynomial p(alg.vars);
    for (std::size_t c = 0; c < mons.size(); ++c)
      if (!v(c).is_zero()) p.add_term(mons[c], v(c));
    out.basis.push_back(p);
  }
  return out;
}

namespace {

SparseRowQ coefficients(const Polynomial& p, const std::map<Exponents, int, GrlexGreater>& col) {
  SparseRowQ r;
  for (const auto& [e, c] : p.terms()) r[col.at(e)] = c;
  return r;
}

// exponent vectors over n generator variables with weighted degree d
void weighted(const std::vector<int>& w, int d, std::size_t pos, Exponents& e, std::vector<Exponents>& out) {
  if (pos == w.size()) {
    if (d == 0) out.push_back(e);
    return;
  }
  for (int k = d / w[pos]; k >= 0; --k) {
    e[pos] = static_cast<std::uint8_t>(k);
    weighted(w, d - k * w[pos], pos + 1, e, out);
  }
  e[pos] = 0;
}

Polynomial product(const std::vector<Generator>& gens, const Exponents& e, VarNames vars) {
  Polynomial p = Polynomial::constant(vars, Q3(1));
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (e[i]) p = p * gens[i].poly.pow(e[i]);
  return p;
}

}  // namespace

GeneratorSet indecomposable_generators(const LieAlgebra& alg, const Subalgebra& sub, int max_degree,
                                       bool restrict_to_m) {
  if (max_degree > kDegreeCap) throw std::length_error("indecomposable_generators: degree above cap");
  std::vector<int> allowed;
  if (restrict_to_m) {
    allowed = sub.m_indices;
  } else {
    for (int i = 0; i < alg.dim; ++i) allowed.push_back(i);
  }
  GeneratorSet gs;
  std::vector<int> rel_deg;
  std::vector<std::string> names;

  for (int d = 1; d <= max_degree; ++d) {
    auto mons = monomials(allowed, d);
    std::map<Exponents, int, GrlexGreater> col;
    for (std::size_t c = 0; c < mons.size(); ++c) col[mons[c]] = static_cast<int>(c);

    // products of lower-degree generators in weighted degree d
    std::vector<int> w;
    for (const auto& g : gs.generators) w.push_back(g.degree);
    std::vector<Exponents> prods;
    if (!w.empty()) {
      Exponents e{};
      weighted(w, d, 0, e, prods);
    }
    std::vector<Polynomial> prod_polys;
    for (const auto& e : prods) prod_polys.push_back(product(gs.generators, e, alg.vars));

    // relations: kernel of the map generator monomial -> polynomial
    if (!prods.empty()) {
      MatrixQ m = MatrixQ::Constant(static_cast<Eigen::Index>(mons.size()), static_cast<Eigen::Index>(prods.size()), Q3(0));
      for (std::size_t c = 0; c < prods.size(); ++c)
        for (const auto& [e, v] : prod_polys[c].terms()) m(col.at(e), static_cast<Eigen::Index>(c)) = v;
      auto ker = nullspace(m);
      if (!ker.empty()) {
        if (gs.generators.size() > static_cast<std::size_t>(kMaxVars))
          throw std::length_error("too many generators for relation polynomials");
        gs.names = make_vars(names);
        std::map<Exponents, int, GrlexGreater> pcol;
        for (std::size_t c = 0; c < prods.size(); ++c) pcol[prods[c]] = static_cast<int>(c);
        // multiples of lower relations by generator monomials
        EchelonQ old(static_cast<int>(prods.size()));
        for (std::size_t r = 0; r < gs.relations.size(); ++r) {
          std::vector<Exponents> mult;
          Exponents e{};
          weighted(w, d - rel_deg[r], 0, e, mult);
          for (const auto& me : mult) {
            Polynomial mono(gs.names);
            mono.add_term(me, Q3(1));
            old.add(coefficients(gs.relations[r].rebind(gs.names) * mono, pcol));
          }
        }
        for (const auto& v : ker) {
          SparseRowQ row;
          for (Eigen::Index c = 0; c < v.size(); ++c)
            if (!v(c).is_zero()) row[static_cast<int>(c)] = v(c);
          if (!old.add(row)) continue;
          Polynomial rel(gs.names);
          for (const auto& [c, val] : row) rel.add_term(prods[c], val);
          gs.relations.push_back(rel);
          rel_deg.push_back(d);
        }
      }
    }

    EchelonQ ech(static_cast<int>(mons.size()));
    for (const auto& p : prod_polys) ech.add(coefficients(p, col));
    for (const auto& p : invariant_space(alg, sub, d, restrict_to_m).basis) {
      if (!ech.add(coefficients(p, col))) continue;
      std::string name = "a" + std::to_string(gs.generators.size() + 1);
      gs.generators.push_back({name, p, d});
      names.push_back(name);
    }
  }
  gs.names = make_vars(names);
  for (auto& r : gs.relations) r = r.rebind(gs.names);
  return gs;
}

Polynomial expand(const GeneratorSet& gs, const Polynomial& rel) {
  std::vector<Polynomial> subs;
  for (const auto& g : gs.generators) subs.push_back(g.poly);
  return rel.substitute(subs);
}

std::string report(const GeneratorSet& gs) {
  std::ostringstream os;
  os << "generators " << gs.generators.size() << "\n";
  for (const auto& g : gs.generators) os << g.name << " degree " << g.degree << " : " << g.poly.str() << "\n";
  os << "relations " << gs.relations.size() << "\n";
  for (const auto& r : gs.relations) os << r.str() << " = 0\n";
  return os.str();
}

Casimirs casimirs_su3(const LieAlgebra& alg) {
  const int n = alg.rep_dim;
  // components c_k = x_k / B_kk; every build here has a diagonal form
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j)
      if (i != j && !alg.bform(i, j).is_zero()) throw std::logic_error("casimirs_su3: non-diagonal form");
  std::vector<Polynomial> comp;
  for (int k = 0; k < alg.dim; ++k) comp.push_back(coordinate(alg, k) * alg.bform(k, k).inverse());
  std::vector<CPoly> z(n * n, CPoly{Polynomial(alg.vars), Polynomial(alg.vars)});
  for (int k = 0; k < alg.dim; ++k)
    for (int e = 0; e < n * n; ++e) {
      const CQ3& m = alg.rep_exact[k][e];
      if (m.is_zero()) continue;
      z[e].re += comp[k] * m.re;
      z[e].im += comp[k] * m.im;
    }
  auto mul = [&](const std::vector<CPoly>& a, const std::vector<CPoly>& b) {
    std::vector<CPoly> r(n * n, CPoly{Polynomial(alg.vars), Polynomial(alg.vars)});
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) r[i * n + j] = r[i * n + j] + a[i * n + k] * b[k * n + j];
    return r;
  };
  auto trace = [&](const std::vector<CPoly>& a) {
    CPoly t{Polynomial(alg.vars), Polynomial(alg.vars)};
    for (int i = 0; i < n; ++i) t = t + a[i * n + i];
    return t;
  };
  auto z2 = mul(z, z);
  CPoly t2 = trace(z2);
  CPoly t3 = trace(mul(z2, z));
  if (!t2.im.is_zero() || !t3.re.is_zero()) throw std::logic_error("casimirs_su3: trace has wrong reality");
  return {t2.re * Q3::frac(-1, 2), -t3.im};
}

VarNames eps_vars(const LieAlgebra& alg) {
  auto names = alg.labels;
  names.push_back("eps");
  return make_vars(names);
}

namespace {

Polynomial shift(const Polynomial& c, const MagneticSystem& sys, VarNames vars, const Polynomial& eps) {
  const LieAlgebra& alg = *sys.alg;
  // pairings of W
  VectorQ mu = alg.bform * sys.W;
  std::vector<bool> in_m(alg.dim, false);
  for (int k : sys.sub.m_indices) in_m[k] = true;
  std::vector<Polynomial> subs;
  for (int k = 0; k < alg.dim; ++k) {
    if (in_m[k]) {
      subs.push_back(Polynomial::variable(vars, k));
    } else {
      subs.push_back(eps * (-mu(k)));
    }
  }
  for (int k = alg.dim; k < c.nvars(); ++k) subs.push_back(Polynomial::variable(vars, k));
  return c.substitute(subs);
}

}  // namespace

Polynomial restrict_shift(const Polynomial& c, const MagneticSystem& sys) {
  VarNames vars = eps_vars(*sys.alg);
  Polynomial src = c.nvars() == sys.alg->dim ? c.rebind(vars) : c;
  return shift(src, sys, vars, Polynomial::variable(vars, sys.alg->dim));
}

Polynomial restrict_shift(const Polynomial& c, const MagneticSystem& sys, const Q3& eps) {
  return shift(c, sys, c.vars(), Polynomial::constant(c.vars(), eps));
}

Eigen::MatrixXd jacobian(const std::vector<Polynomial>& polys, const Eigen::VectorXd& point) {
  const int n = static_cast<int>(point.size());
  Eigen::MatrixXd j(polys.size(), n);
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (int c = 0; c < n; ++c) j(r, c) = polys[r].derivative(c).evaluate(point);
  return j;
}

int independence_rank(const std::vector<Polynomial>& polys, const Eigen::VectorXd& point) {
  return numeric_rank(jacobian(polys, point), 1e-10);
}

int casimir_count(const LieAlgebra& alg, const Eigen::VectorXd& point) {
  Eigen::MatrixXd a(alg.dim, alg.dim);
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j) a(i, j) = alg.ad_linear[i * alg.dim + j].evaluate(point);
  return alg.dim - numeric_rank(a, 1e-10);
}

}  // namespace suchain
