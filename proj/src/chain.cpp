#include "suchain/chain.hpp"

#include "suchain/linalg.hpp"
#include "suchain/poisson.hpp"

#include <json.hpp>

#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace suchain {

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << std::scientific << x;
  return os.str();
}

void CertificateReport::append(const CertificateReport& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

bool CertificateReport::pass() const {
  for (const auto& c : checks)
    if (!c.informational && !c.pass) return false;
  return true;
}

std::string CertificateReport::json() const {
  nlohmann::ordered_json j;
  j["case"] = case_tag;
  j["seed"] = seed;
  j["sample_count"] = sample_count;
  j["pass"] = pass();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["expected"] = c.expected;
    e["observed"] = c.observed;
    e["tolerance"] = c.tolerance;
    e["pass"] = c.pass;
    if (c.informational) e["informational"] = true;
    arr.push_back(e);
  }
  j["checks"] = arr;
  return j.dump(2) + "\n";
}

// ---- bracket table

std::vector<Q3> couplings(const MagneticSystem& sys) {
  const LieAlgebra& alg = *sys.alg;
  if (!alg.roots) throw std::invalid_argument("couplings need root data");
  const int n = alg.rep_dim;
  std::vector<Q3> out;
  for (auto [i, j] : alg.roots->positions) {
    // H = i(e_ii - e_jj); tr(W H) = i (W_ii - W_jj)
    CQ3 wi(Q3(0)), wj(Q3(0));
    for (int l = 0; l < alg.dim; ++l) {
      wi = wi + CQ3(alg.rep_exact[l][i * n + i].re * sys.W(l), alg.rep_exact[l][i * n + i].im * sys.W(l));
      wj = wj + CQ3(alg.rep_exact[l][j * n + j].re * sys.W(l), alg.rep_exact[l][j * n + j].im * sys.W(l));
    }
    CQ3 d = wi - wj;
    // Re(i d) = -Im d
    out.push_back(-(alg.trace_factor * -d.im));
  }
  return out;
}

bool BracketTable::pass() const {
  for (const auto& e : entries)
    if (!e.match) return false;
  return true;
}

std::string BracketTable::text() const {
  std::ostringstream os;
  os << "couplings";
  for (std::size_t k = 0; k < couplings.size(); ++k) os << " c" << k + 1 << "=" << couplings[k].str() << "*eps";
  os << "\n";
  for (const auto& e : entries) {
    os << "{" << e.left << "," << e.right << "} = " << e.rewritten.str();
    if (!e.match) os << "    [expected " << e.expected_generators.str() << "; residual " << (e.computed - e.expected).str() << "]";
    os << "\n";
  }
  return os.str();
}

std::string BracketTable::json() const {
  nlohmann::ordered_json j;
  auto c = nlohmann::ordered_json::array();
  for (const auto& q : couplings) c.push_back(q.str());
  j["couplings_over_eps"] = c;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    arr.push_back({{"left", e.left},
                   {"right", e.right},
                   {"bracket", e.rewritten.str()},
                   {"expected", e.expected_generators.str()},
                   {"residual", (e.computed - e.expected).str()},
                   {"match", e.match}});
  }
  j["entries"] = arr;
  j["pass"] = pass();
  return j.dump(2) + "\n";
}

namespace {

struct Rewriter {
  VarNames src;    // x, y, eps
  VarNames names;  // generators, eps
  std::vector<Exponents> cand;
  std::vector<Polynomial> expanded;
  std::map<Exponents, int, GrlexGreater> rows;

  Rewriter(VarNames s, VarNames n, const std::vector<Polynomial>& gens, int max_weight)
      : src(std::move(s)), names(std::move(n)) {
    const int ng = static_cast<int>(gens.size());
    std::vector<int> w;
    for (const auto& g : gens) w.push_back(g.degree());
    Polynomial eps = Polynomial::variable(src, static_cast<int>(src->size()) - 1);
    // every generator monomial of weight <= max_weight times eps^e
    std::vector<Exponents> mons;
    Exponents e{};
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == ng) {
        for (int k = 0; k <= left; ++k) {
          Exponents f = e;
          f[ng] = static_cast<std::uint8_t>(k);
          mons.push_back(f);
        }
        return;
      }
      for (int k = 0; k * w[pos] <= left; ++k) {
        e[pos] = static_cast<std::uint8_t>(k);
        rec(pos + 1, left - k * w[pos]);
      }
      e[pos] = 0;
    };
    rec(0, max_weight);
    for (const auto& m : mons) {
      Polynomial p = Polynomial::constant(src, Q3(1));
      for (int i = 0; i < ng; ++i)
        if (m[i]) p = p * gens[i].pow(m[i]);
      if (m[ng]) p = p * eps.pow(m[ng]);
      cand.push_back(m);
      expanded.push_back(p);
    }
  }

  // canonical expression over pivot candidates; zero polynomial and false if impossible
  std::pair<Polynomial, bool> operator()(const Polynomial& target) const {
    std::map<Exponents, SparseRowQ, GrlexGreater> byrow;
    const int t = static_cast<int>(cand.size());
    for (int c = 0; c < t; ++c)
      for (const auto& [e, v] : expanded[c].terms()) byrow[e][c] = v;
    for (const auto& [e, v] : target.terms()) byrow[e][t] = v;
    EchelonQ ech(t + 1);
    for (auto& [e, row] : byrow) ech.add(row);
    for (const auto& ns : ech.nullspace()) {
      if (ns(t).is_zero()) continue;
      Polynomial r(names);
      Q3 s = -ns(t).inverse();
      for (int c = 0; c < t; ++c)
        if (!ns(c).is_zero()) r.add_term(cand[c], ns(c) * s);
      return {r, true};
    }
    return {Polynomial(names), false};
  }
};

}  // namespace

BracketTable bracket_table_regular(const MagneticSystem& sys) {
  if (sys.tag != Case::regular) throw std::invalid_argument("bracket table needs the regular case");
  const LieAlgebra& alg = *sys.alg;
  BracketTable t;
  t.generator_names = {"u1", "u2", "u3", "v", "w"};
  auto nm = t.generator_names;
  nm.push_back("eps");
  t.names = make_vars(nm);
  t.couplings = couplings(sys);

  VarNames src = eps_vars(alg);
  std::vector<Polynomial> gens;
  for (const auto& p : regular_slice_polys(alg)) gens.push_back(p.rebind(src));

  auto g = [&](int i) { return Polynomial::variable(t.names, i); };
  Polynomial eps = g(5);
  Polynomial u1 = g(0), u2 = g(1), u3 = g(2), v = g(3), w = g(4);
  std::vector<Polynomial> c;
  for (const auto& k : t.couplings) c.push_back(eps * k);
  const Q3 two(2), half = Q3::frac(1, 2);
  std::vector<std::tuple<int, int, Polynomial>> closed = {
      {0, 1, v * two},
      {0, 2, v * Q3(-2)},
      {1, 2, v * two},
      {0, 3, u1 * (u3 - u2) - c[0] * w},
      {1, 3, u2 * (u1 - u3) - c[1] * w},
      {2, 3, u3 * (u2 - u1) - c[2] * w},
      {0, 4, c[0] * v},
      {1, 4, c[1] * v},
      {2, 4, c[2] * v},
      {3, 4, (c[2] * u1 * u2 - c[1] * u1 * u3 - c[0] * u2 * u3) * -half},
  };
  std::vector<Polynomial> subs = gens;
  subs.push_back(Polynomial::variable(src, alg.dim));
  Rewriter rw(src, t.names, gens, 5);
  for (const auto& [i, j, rhs] : closed) {
    BracketEntry e;
    e.left = t.generator_names[i];
    e.right = t.generator_names[j];
    e.computed = slice_bracket(sys, gens[i], gens[j]);
    e.expected_generators = rhs;
    e.expected = rhs.substitute(subs);
    e.match = (e.computed - e.expected).is_zero();
    auto [r, ok] = rw(e.computed);
    e.rewritten = ok ? r : e.computed;
    t.entries.push_back(e);
  }
  return t;
}

BracketTable specialize_eps(const BracketTable& t, const Q3& eps) {
  BracketTable out = t;
  auto fix = [&](const Polynomial& p) {
    std::vector<Polynomial> subs;
    for (int i = 0; i + 1 < p.nvars(); ++i) subs.push_back(Polynomial::variable(p.vars(), i));
    subs.push_back(Polynomial::constant(p.vars(), eps));
    return p.substitute(subs);
  };
  for (auto& e : out.entries) {
    e.computed = fix(e.computed);
    e.expected = fix(e.expected);
    e.rewritten = fix(e.rewritten);
    e.expected_generators = fix(e.expected_generators);
    e.match = (e.computed - e.expected).is_zero();
  }
  return out;
}

std::string moment_table(const LieAlgebra& alg) {
  std::ostringstream os;
  for (int i = 0; i < alg.dim; ++i)
    for (int j = i + 1; j < alg.dim; ++j) {
      Polynomial b = lie_poisson_bracket(coordinate(alg, i), coordinate(alg, j), alg);
      if (b.is_zero()) continue;
      os << "{P" << i + 1 << ",P" << j + 1 << "} = ";
      bool first = true;
      for (int k = 0; k < alg.dim; ++k) {
        if (alg.C(i, j, k).is_zero()) continue;
        os << (first ? "" : " + ") << alg.C(i, j, k).str() << " * P" << k + 1;
        first = false;
      }
      os << "\n";
    }
  return os.str();
}

Polynomial cubic_relation_residual(const LieAlgebra& alg, const Q3& v_shift) {
  auto p = regular_slice_polys(alg);
  Polynomial v = p[3] + Polynomial::constant(alg.vars, v_shift);
  return p[0] * p[1] * p[2] - v * v - p[4] * p[4];
}

// ---- irregular relation among moment coordinates

PhiRelation phi_relation_irregular(const MagneticSystem& sys, int samples, std::mt19937_64& rng, double coefficient) {
  if (sys.tag != Case::irregular) throw std::invalid_argument("phi relation needs the irregular case");
  Casimirs cs = casimirs_su3(*sys.alg);
  PhiRelation out;
  out.samples = samples;
  const double e = sys.eps;
  for (int s = 0; s < samples; ++s) {
    PhasePoint pt = random_point(sys, rng);
    Eigen::VectorXd p = coords(*sys.alg, moment_map(sys, pt));
    double c2 = cs.c2.evaluate(p), c3 = cs.c3.evaluate(p);
    double inv = c3 - coefficient * e * (c2 - e * e);
    double printed = c3 - coefficient * e * (2 * e * e + p(3) * p(3) + p(4) * p(4) - 2 * p(5) * p(5) - 2 * p(6) * p(6));
    out.invariant_residual = std::max(out.invariant_residual, std::abs(inv));
    out.printed_residual = std::max(out.printed_residual, std::abs(printed));
  }
  return out;
}

// ---- center

std::vector<IntegralFunction> center_elements(const MagneticSystem& sys) {
  if (sys.tag == Case::irregular) return {IntegralFunction::slice(sys, irregular_slice_poly(sys), "J=R")};
  Casimirs cs = casimirs_su3(*sys.alg);
  return {IntegralFunction::moment(cs.c2, "J2=P*C2"), IntegralFunction::moment(cs.c3, "J3=P*C3")};
}

CertificateReport center_check(const MagneticSystem& sys, int samples, std::mt19937_64& rng) {
  CertificateReport rep;
  rep.case_tag = case_name(sys.tag);
  rep.sample_count = samples;
  auto gens = monitored_integrals(sys);
  auto center = center_elements(sys);
  Casimirs cs = casimirs_su3(*sys.alg);
  auto res2 = IntegralFunction::slice(sys, restrict_shift(cs.c2, sys, sys.eps_exact), "Res C2");
  auto res3 = IntegralFunction::slice(sys, restrict_shift(cs.c3, sys, sys.eps_exact), "Res C3");
  auto pc2 = IntegralFunction::moment(cs.c2), pc3 = IntegralFunction::moment(cs.c3);

  std::vector<std::vector<double>> worst(center.size(), std::vector<double>(gens.size(), 0.0));
  double id2 = 0, id3 = 0, printed_j3 = 0;
  auto twice_v = sys.tag == Case::regular ? 2.0 * slice_generators(sys)[3] : IntegralFunction();
  for (int s = 0; s < samples; ++s) {
    PhasePoint pt = random_point(sys, rng);
    for (std::size_t a = 0; a < center.size(); ++a)
      for (std::size_t b = 0; b < gens.size(); ++b)
        worst[a][b] = std::max(worst[a][b], std::abs(twisted_bracket(sys, center[a], gens[b], pt)));
    id2 = std::max(id2, std::abs(pc2.value(sys, pt) - res2.value(sys, pt)));
    id3 = std::max(id3, std::abs(pc3.value(sys, pt) - res3.value(sys, pt)));
    if (sys.tag == Case::regular)
      printed_j3 = std::max(printed_j3, std::abs(twisted_bracket(sys, twice_v, gens[8], pt)));
  }
  const double tol = 1e-10;
  for (std::size_t a = 0; a < center.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b)
      rep.add({"center {" + center[a].name() + "," + gens[b].name() + "}", "0", fmt_double(worst[a][b]), tol,
               worst[a][b] < tol});
  rep.add({"P*C2 = pi*Res_W C2", "0", fmt_double(id2), tol, id2 < tol});
  if (sys.tag == Case::regular) {
    rep.add({"P*C3 = pi*Res_W C3", "0", fmt_double(id3), tol, id3 < tol});
    rep.add({"printed R0 element 2v: {2v,u1}", "0", fmt_double(printed_j3), tol, printed_j3 < tol, true});
  }
  return rep;
}

// ---- ranks

Eigen::MatrixXd phase_jacobian(const MagneticSystem& sys, const std::vector<IntegralFunction>& fs,
                               const PhasePoint& pt) {
  const int n = 2 * static_cast<int>(sys.sub.m_indices.size());
  Eigen::MatrixXd j(fs.size(), n);
  for (int k = 0; k < n; ++k) {
    TangentVector t = basis_tangent(sys, k);
    for (std::size_t r = 0; r < fs.size(); ++r) j(r, k) = fs[r].differential(sys, pt, t);
  }
  return j;
}

int jacobian_rank_pi1(const MagneticSystem& sys, const PhasePoint& pt) {
  return numeric_rank(phase_jacobian(sys, monitored_integrals(sys), pt), 1e-10);
}

std::vector<std::vector<Polynomial>> a_matrix(const MagneticSystem& sys) {
  const LieAlgebra& alg = *sys.alg;
  const auto& m = sys.sub.m_indices;
  // components of X = -sum x_j e_j, x_j the pairing coordinate
  std::vector<Polynomial> xc(alg.dim, Polynomial(alg.vars));
  for (int j : m) xc[j] = coordinate(alg, j) * -alg.bform(j, j).inverse();
  std::vector<std::vector<Polynomial>> a(3, std::vector<Polynomial>(m.size(), Polynomial(alg.vars)));
  for (int i = 0; i < 3; ++i)
    for (std::size_t c = 0; c < m.size(); ++c)
      for (int j : m)
        for (int k = 0; k < alg.dim; ++k) {
          // B([e_mc, e_j], e_i) x_j
          const Q3& s = alg.C(m[c], j, k);
          if (s.is_zero() || alg.bform(k, i).is_zero()) continue;
          a[i][c] += xc[j] * (s * alg.bform(k, i));
        }
  return a;
}

std::vector<Polynomial> a_matrix_minors(const MagneticSystem& sys) {
  auto a = a_matrix(sys);
  auto det3 = [&](int c0, int c1, int c2) {
    return a[0][c0] * (a[1][c1] * a[2][c2] - a[1][c2] * a[2][c1]) - a[0][c1] * (a[1][c0] * a[2][c2] - a[1][c2] * a[2][c0]) +
           a[0][c2] * (a[1][c0] * a[2][c1] - a[1][c1] * a[2][c0]);
  };
  return {det3(0, 1, 2), det3(0, 1, 3), det3(0, 2, 3), det3(1, 2, 3)};
}

std::vector<Polynomial> expected_minors(const MagneticSystem& sys) {
  const LieAlgebra& alg = *sys.alg;
  const auto& m = sys.sub.m_indices;
  Polynomial r = irregular_slice_poly(sys);
  auto x = [&](int c) { return coordinate(alg, m[c]); };
  return {x(3) * r, -(x(2) * r), x(1) * r, -(x(0) * r)};
}

int a_matrix_rank(const MagneticSystem& sys, const Eigen::VectorXd& x) {
  auto a = a_matrix(sys);
  Eigen::VectorXd p = coords(*sys.alg, embed_m(sys, x));
  Eigen::MatrixXd n(3, a[0].size());
  for (int i = 0; i < 3; ++i)
    for (std::size_t c = 0; c < a[0].size(); ++c) n(i, c) = a[i][c].evaluate(p);
  return numeric_rank(n, 1e-10);
}

// ---- dimensions

Dimensions measure_dimensions(const MagneticSystem& sys, const PhasePoint& pt) {
  Dimensions d;
  d.n = sys.alg->dim;
  d.r = 2;
  d.phase_dim = 2 * static_cast<int>(sys.sub.m_indices.size());
  Casimirs cs = casimirs_su3(*sys.alg);
  std::vector<Polynomial> res = {restrict_shift(cs.c2, sys, sys.eps_exact), restrict_shift(cs.c3, sys, sys.eps_exact)};
  Eigen::VectorXd xi = coords(*sys.alg, embed_m(sys, pt.X));
  // Res_W polynomials live on m: only m columns of the Jacobian matter
  Eigen::MatrixXd jr = jacobian(res, xi);
  Eigen::MatrixXd jm(jr.rows(), sys.sub.m_indices.size());
  for (std::size_t c = 0; c < sys.sub.m_indices.size(); ++c) jm.col(c) = jr.col(sys.sub.m_indices[c]);
  d.s = numeric_rank(jm, 1e-10);
  auto p = moment_coordinates(sys);
  auto sl = slice_generators(sys);
  d.trdeg_f1 = numeric_rank(phase_jacobian(sys, p, pt), 1e-10);
  d.trdeg_f2 = numeric_rank(phase_jacobian(sys, sl, pt), 1e-10);
  d.rho = d.trdeg_f2;
  d.trdeg_a = numeric_rank(phase_jacobian(sys, monitored_integrals(sys), pt), 1e-10);
  d.trdeg_center = numeric_rank(phase_jacobian(sys, center_elements(sys), pt), 1e-10);
  return d;
}

CertificateReport dimension_report(const MagneticSystem& sys, int samples, std::mt19937_64& rng) {
  CertificateReport rep;
  rep.case_tag = case_name(sys.tag);
  rep.sample_count = samples;
  const bool reg = sys.tag == Case::regular;
  const Dimensions want = reg ? Dimensions{8, 2, 2, 4, 8, 4, 10, 2, 12} : Dimensions{8, 2, 1, 1, 7, 1, 7, 1, 8};
  int bad_s = 0, bad_rho = 0, bad_f1 = 0, bad_a = 0, bad_c = 0, bad_sum = 0;
  Dimensions last;
  for (int k = 0; k < samples; ++k) {
    PhasePoint pt = random_point(sys, rng);
    Dimensions d = measure_dimensions(sys, pt);
    bad_s += d.s != want.s;
    bad_rho += d.rho != want.rho;
    bad_f1 += d.trdeg_f1 != want.trdeg_f1;
    bad_a += d.trdeg_a != want.trdeg_a;
    bad_c += d.trdeg_center != want.trdeg_center;
    bad_sum += d.trdeg_a + d.trdeg_center != d.phase_dim;
    last = d;
  }
  auto line = [&](const std::string& name, int expected, int observed, int bad) {
    rep.add({name, std::to_string(expected),
             std::to_string(observed) + " (" + std::to_string(samples - bad) + "/" + std::to_string(samples) + ")", 0.0,
             bad == 0});
  };
  line("s = rank d(Res_W)", want.s, last.s, bad_s);
  line("rho_A = trdeg S(m)^A", want.rho, last.rho, bad_rho);
  line("trdeg F1", want.trdeg_f1, last.trdeg_f1, bad_f1);
  line("trdeg A = pi1 rank", want.trdeg_a, last.trdeg_a, bad_a);
  line("trdeg R0", want.trdeg_center, last.trdeg_center, bad_c);
  line("trdeg A + trdeg R0 = dim T*M", want.phase_dim, last.trdeg_a + last.trdeg_center, bad_sum);
  rep.add({"leaf dimension dim g - 3r", "2", std::to_string(last.n - 3 * last.r), 0.0, true, true});
  return rep;
}

}  // namespace suchain
