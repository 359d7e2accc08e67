#include "suchain/magnetic.hpp"

#include "suchain/poisson.hpp"

#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace suchain {

namespace {

Eigen::MatrixXcd mat(const MagneticSystem& sys, const Eigen::VectorXd& full) { return to_matrix(*sys.alg, full); }

Eigen::MatrixXcd mat_m(const MagneticSystem& sys, const Eigen::VectorXd& x) { return mat(sys, embed_m(sys, x)); }

Eigen::VectorXd bracket_m(const MagneticSystem& sys, const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return bracket(*sys.alg, a, b);
}

double bform_full(const MagneticSystem& sys, const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return a.dot(sys.alg->bform_d * b);
}

Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return a * b - b * a; }

}  // namespace

Eigen::VectorXd embed_m(const MagneticSystem& sys, const Eigen::VectorXd& x) {
  Eigen::VectorXd full = Eigen::VectorXd::Zero(sys.alg->dim);
  for (std::size_t i = 0; i < sys.sub.m_indices.size(); ++i) full(sys.sub.m_indices[i]) = x(i);
  return full;
}

Eigen::VectorXd restrict_m(const MagneticSystem& sys, const Eigen::VectorXd& full) {
  Eigen::VectorXd x(sys.sub.m_indices.size());
  for (std::size_t i = 0; i < sys.sub.m_indices.size(); ++i) x(i) = full(sys.sub.m_indices[i]);
  return x;
}

Eigen::VectorXd coords(const LieAlgebra& alg, const Eigen::VectorXd& comps) { return alg.bform_d * comps; }

Eigen::VectorXd slice_map(const MagneticSystem& sys, const PhasePoint& pt) {
  return embed_m(sys, pt.X) - sys.eps * sys.W_d;
}

Eigen::VectorXd moment_map(const MagneticSystem& sys, const PhasePoint& pt) {
  Eigen::MatrixXcd xi = mat(sys, slice_map(sys, pt));
  return components(*sys.alg, pt.g * xi * pt.g.adjoint());
}

TangentVector hvf_moment(const MagneticSystem& sys, const PhasePoint& pt, const Eigen::VectorXd& eta) {
  Eigen::VectorXd et = components(*sys.alg, pt.g.adjoint() * mat(sys, eta) * pt.g);
  Eigen::VectorXd x = embed_m(sys, pt.X);
  Eigen::VectorXd v = restrict_m(sys, et);
  Eigen::VectorXd w = restrict_m(sys, bracket_m(sys, et, x)) - 0.5 * restrict_m(sys, bracket_m(sys, embed_m(sys, v), x));
  return {v, w};
}

TangentVector hvf_slice(const MagneticSystem& sys, const PhasePoint& pt, const Polynomial& theta) {
  Eigen::VectorXd mu = coords(*sys.alg, slice_map(sys, pt));
  Eigen::VectorXd grad = evaluate(b_gradient(theta, *sys.alg), mu);
  Eigen::VectorXd n = restrict_m(sys, grad);
  Eigen::VectorXd nf = embed_m(sys, n), x = embed_m(sys, pt.X);
  Eigen::VectorXd w = -0.5 * restrict_m(sys, bracket_m(sys, nf, x)) - sys.eps * restrict_m(sys, bracket_m(sys, sys.W_d, nf));
  return {n, w};
}

double magform(const MagneticSystem& sys, const TangentVector& a, const TangentVector& b) {
  Eigen::VectorXd v1 = embed_m(sys, a.v), v2 = embed_m(sys, b.v);
  Eigen::VectorXd w1 = embed_m(sys, a.w), w2 = embed_m(sys, b.w);
  return bform_full(sys, w1, v2) - bform_full(sys, w2, v1) + sys.eps * bform_full(sys, sys.W_d, bracket_m(sys, v1, v2));
}

PhasePoint move(const MagneticSystem& sys, const PhasePoint& pt, const TangentVector& t, double s) {
  Eigen::VectorXd x = embed_m(sys, pt.X);
  Eigen::VectorXd dx = t.w - 0.5 * restrict_m(sys, bracket_m(sys, embed_m(sys, t.v), x));
  return {pt.g * exp_skew(s * mat_m(sys, t.v)), pt.X + s * dx};
}

TangentVector basis_tangent(const MagneticSystem& sys, int k) {
  const int m = static_cast<int>(sys.sub.m_indices.size());
  TangentVector t{Eigen::VectorXd::Zero(m), Eigen::VectorXd::Zero(m)};
  if (k < m) {
    t.v(k) = 1.0;
  } else {
    t.w(k - m) = 1.0;
  }
  return t;
}

TangentVector from_coefficients(const MagneticSystem& sys, const Eigen::VectorXd& c) {
  const int m = static_cast<int>(sys.sub.m_indices.size());
  return {c.head(m), c.tail(m)};
}

Eigen::VectorXd to_coefficients(const TangentVector& t) {
  Eigen::VectorXd c(t.v.size() + t.w.size());
  c << t.v, t.w;
  return c;
}

// ---- integral functions

IntegralFunction IntegralFunction::moment(Polynomial p, std::string name) {
  IntegralFunction f;
  f.kind_ = Kind::moment;
  f.poly_ = std::move(p);
  f.name_ = std::move(name);
  return f;
}

IntegralFunction IntegralFunction::slice(const MagneticSystem& sys, Polynomial theta, std::string name) {
  IntegralFunction f;
  f.kind_ = Kind::slice;
  f.poly_ = std::move(theta);
  f.name_ = std::move(name);
  for (int j : sys.sub.a_indices)
    if (!derivation(*sys.alg, j, f.poly_).is_zero()) f.invariant_ = false;
  return f;
}

IntegralFunction operator+(const IntegralFunction& a, const IntegralFunction& b) {
  IntegralFunction f;
  f.kind_ = IntegralFunction::Kind::sum;
  f.parts_ = {std::make_shared<const IntegralFunction>(a), std::make_shared<const IntegralFunction>(b)};
  f.name_ = "(" + a.name_ + " + " + b.name_ + ")";
  return f;
}

IntegralFunction operator*(const IntegralFunction& a, const IntegralFunction& b) {
  IntegralFunction f;
  f.kind_ = IntegralFunction::Kind::product;
  f.parts_ = {std::make_shared<const IntegralFunction>(a), std::make_shared<const IntegralFunction>(b)};
  f.name_ = a.name_ + "*" + b.name_;
  return f;
}

IntegralFunction operator*(double c, const IntegralFunction& a) {
  IntegralFunction f;
  f.kind_ = IntegralFunction::Kind::scaled;
  f.scale_ = c;
  f.parts_ = {std::make_shared<const IntegralFunction>(a)};
  std::ostringstream os;
  os << c << "*" << a.name_;
  f.name_ = os.str();
  return f;
}

IntegralFunction IntegralFunction::named(std::string n) const {
  IntegralFunction f(*this);
  f.name_ = std::move(n);
  return f;
}

bool IntegralFunction::invariant() const {
  if (!invariant_) return false;
  for (const auto& p : parts_)
    if (!p->invariant()) return false;
  return true;
}

double IntegralFunction::value(const MagneticSystem& sys, const PhasePoint& pt) const {
  switch (kind_) {
    case Kind::moment:
      return poly_.evaluate(coords(*sys.alg, moment_map(sys, pt)));
    case Kind::slice:
      return poly_.evaluate(coords(*sys.alg, slice_map(sys, pt)));
    case Kind::sum:
      return parts_[0]->value(sys, pt) + parts_[1]->value(sys, pt);
    case Kind::product:
      return parts_[0]->value(sys, pt) * parts_[1]->value(sys, pt);
    case Kind::scaled:
      return scale_ * parts_[0]->value(sys, pt);
  }
  return 0.0;
}

TangentVector IntegralFunction::field(const MagneticSystem& sys, const PhasePoint& pt) const {
  switch (kind_) {
    case Kind::moment: {
      Eigen::VectorXd mu = coords(*sys.alg, moment_map(sys, pt));
      return hvf_moment(sys, pt, evaluate(b_gradient(poly_, *sys.alg), mu));
    }
    case Kind::slice:
      return hvf_slice(sys, pt, poly_);
    case Kind::sum: {
      TangentVector a = parts_[0]->field(sys, pt), b = parts_[1]->field(sys, pt);
      return {a.v + b.v, a.w + b.w};
    }
    case Kind::product: {
      // X_{fh} = f X_h + h X_f
      double fa = parts_[0]->value(sys, pt), fb = parts_[1]->value(sys, pt);
      TangentVector a = parts_[0]->field(sys, pt), b = parts_[1]->field(sys, pt);
      return {fb * a.v + fa * b.v, fb * a.w + fa * b.w};
    }
    case Kind::scaled: {
      TangentVector a = parts_[0]->field(sys, pt);
      return {scale_ * a.v, scale_ * a.w};
    }
  }
  return {};
}

double IntegralFunction::differential(const MagneticSystem& sys, const PhasePoint& pt, const TangentVector& t) const {
  const LieAlgebra& alg = *sys.alg;
  switch (kind_) {
    case Kind::moment: {
      // delta P = Ad(g)([v, xi] + delta X)
      Eigen::VectorXd x = embed_m(sys, pt.X), v = embed_m(sys, t.v);
      Eigen::VectorXd dx = embed_m(sys, t.w) - 0.5 * embed_m(sys, restrict_m(sys, bracket(alg, v, x)));
      Eigen::VectorXd inner = bracket(alg, v, slice_map(sys, pt)) + dx;
      Eigen::VectorXd dp = components(alg, pt.g * mat(sys, inner) * pt.g.adjoint());
      Eigen::VectorXd grad = evaluate(b_gradient(poly_, alg), coords(alg, moment_map(sys, pt)));
      return grad.dot(coords(alg, dp));
    }
    case Kind::slice: {
      Eigen::VectorXd x = embed_m(sys, pt.X), v = embed_m(sys, t.v);
      Eigen::VectorXd dx = embed_m(sys, t.w - 0.5 * restrict_m(sys, bracket(alg, v, x)));
      Eigen::VectorXd grad = evaluate(b_gradient(poly_, alg), coords(alg, slice_map(sys, pt)));
      return grad.dot(coords(alg, dx));
    }
    case Kind::sum:
      return parts_[0]->differential(sys, pt, t) + parts_[1]->differential(sys, pt, t);
    case Kind::product:
      return parts_[0]->differential(sys, pt, t) * parts_[1]->value(sys, pt) +
             parts_[0]->value(sys, pt) * parts_[1]->differential(sys, pt, t);
    case Kind::scaled:
      return scale_ * parts_[0]->differential(sys, pt, t);
  }
  return 0.0;
}

double twisted_bracket(const MagneticSystem& sys, const IntegralFunction& f, const IntegralFunction& h,
                       const PhasePoint& pt) {
  return magform(sys, h.field(sys, pt), f.field(sys, pt));
}

Polynomial slice_bracket(const MagneticSystem& sys, const Polynomial& t1, const Polynomial& t2) {
  const LieAlgebra& alg = *sys.alg;
  VarNames vars = eps_vars(alg);
  Polynomial a = t1.nvars() == alg.dim ? t1.rebind(vars) : t1;
  Polynomial b = t2.nvars() == alg.dim ? t2.rebind(vars) : t2;
  Polynomial eps = Polynomial::variable(vars, alg.dim);
  VectorQ mu_w = alg.bform * sys.W;
  std::vector<bool> in_m(alg.dim, false);
  for (int k : sys.sub.m_indices) in_m[k] = true;
  // pairing coordinates of xi = X - eps W
  std::vector<Polynomial> xi;
  for (int k = 0; k < alg.dim; ++k) xi.push_back(in_m[k] ? Polynomial::variable(vars, k) : eps * (-mu_w(k)));
  Polynomial r(vars);
  for (int i : sys.sub.m_indices) {
    Polynomial da = a.derivative(i);
    if (da.is_zero()) continue;
    for (int j : sys.sub.m_indices) {
      Polynomial db = b.derivative(j);
      if (db.is_zero()) continue;
      Polynomial c(vars);
      for (int k = 0; k < alg.dim; ++k)
        if (!alg.C(i, j, k).is_zero()) c += xi[k] * alg.C(i, j, k);
      r -= da * db * c;
    }
  }
  return r;
}

Eigen::VectorXd numeric_differential(const MagneticSystem& sys, const PhasePoint& pt,
                                     const std::function<double(const PhasePoint&)>& f, double h) {
  const int n = 2 * static_cast<int>(sys.sub.m_indices.size());
  Eigen::VectorXd d(n);
  for (int k = 0; k < n; ++k) {
    TangentVector t = basis_tangent(sys, k);
    d(k) = (f(move(sys, pt, t, h)) - f(move(sys, pt, t, -h))) / (2 * h);
  }
  return d;
}

Eigen::MatrixXd magform_matrix(const MagneticSystem& sys, const PhasePoint& pt) {
  (void)pt;  // left invariant in these coordinates
  const int n = 2 * static_cast<int>(sys.sub.m_indices.size());
  Eigen::MatrixXd m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m(a, b) = magform(sys, basis_tangent(sys, a), basis_tangent(sys, b));
  return m;
}

Eigen::VectorXd numeric_hvf(const MagneticSystem& sys, const PhasePoint& pt,
                            const std::function<double(const PhasePoint&)>& f, double h) {
  return magform_matrix(sys, pt).partialPivLu().solve(numeric_differential(sys, pt, f, h));
}

PhasePoint flow_field(const MagneticSystem& sys, const PhasePoint& pt,
                      const std::function<TangentVector(const PhasePoint&)>& field, double s, int steps) {
  const double h = s / steps;
  PhasePoint p = pt;
  auto rate = [&](const PhasePoint& q) {
    TangentVector t = field(q);
    Eigen::VectorXd x = embed_m(sys, q.X);
    Eigen::VectorXd dx = t.w - 0.5 * restrict_m(sys, bracket(*sys.alg, embed_m(sys, t.v), x));
    return std::make_pair(Eigen::MatrixXcd(q.g * mat_m(sys, t.v)), dx);
  };
  for (int i = 0; i < steps; ++i) {
    auto k1 = rate(p);
    auto k2 = rate({p.g + 0.5 * h * k1.first, p.X + 0.5 * h * k1.second});
    auto k3 = rate({p.g + 0.5 * h * k2.first, p.X + 0.5 * h * k2.second});
    auto k4 = rate({p.g + h * k3.first, p.X + h * k3.second});
    p.g = reproject_special_unitary(p.g + h / 6 * (k1.first + 2 * k2.first + 2 * k3.first + k4.first));
    p.X = p.X + h / 6 * (k1.second + 2 * k2.second + 2 * k3.second + k4.second);
  }
  return p;
}

// ---- magnetic geodesic flow

FlowTrajectory integrate_flow(const MagneticSystem& sys, const PhasePoint& pt0, double t_end, double dt,
                              int record_every) {
  if (!(dt > 0) || !(t_end > 0)) throw std::invalid_argument("integrate_flow: dt and t_end must be positive");
  if (record_every < 1) throw std::invalid_argument("integrate_flow: record_every must be >= 1");
  const LieAlgebra& alg = *sys.alg;
  Eigen::MatrixXcd w = mat(sys, sys.W_d);
  auto rate = [&](const Eigen::MatrixXcd& g, const Eigen::MatrixXcd& x) {
    return std::make_pair(Eigen::MatrixXcd(g * x), Eigen::MatrixXcd(-sys.eps * commutator(w, x)));
  };
  FlowTrajectory traj;
  traj.dt = dt;
  traj.times.push_back(0.0);
  traj.points.push_back(pt0);
  Eigen::MatrixXcd g = pt0.g, x = mat_m(sys, pt0.X);
  const long steps = std::lround(t_end / dt);
  const auto id = Eigen::MatrixXcd::Identity(g.rows(), g.cols());
  for (long n = 1; n <= steps; ++n) {
    auto k1 = rate(g, x);
    auto k2 = rate(g + 0.5 * dt * k1.first, x + 0.5 * dt * k1.second);
    auto k3 = rate(g + 0.5 * dt * k2.first, x + 0.5 * dt * k2.second);
    auto k4 = rate(g + dt * k3.first, x + dt * k3.second);
    Eigen::MatrixXcd gn = g + dt / 6 * (k1.first + 2 * k2.first + 2 * k3.first + k4.first);
    x = x + dt / 6 * (k1.second + 2 * k2.second + 2 * k3.second + k4.second);
    if ((gn.adjoint() * gn - id).norm() > 1e-8) throw std::runtime_error("integrate_flow: unitarity drift above 1e-8, step rejected");
    g = reproject_special_unitary(gn);
    if (n % record_every == 0 || n == steps) {
      traj.times.push_back(static_cast<double>(n) * dt);
      traj.points.push_back({g, restrict_m(sys, components(alg, x))});
    }
  }
  return traj;
}

Eigen::VectorXd lax_solution(const MagneticSystem& sys, const Eigen::VectorXd& x0, double t) {
  Eigen::MatrixXcd a = exp_skew(-t * sys.eps * mat(sys, sys.W_d));
  return restrict_m(sys, components(*sys.alg, a * mat_m(sys, x0) * a.adjoint()));
}

double hamiltonian(const MagneticSystem& sys, const PhasePoint& pt) {
  Eigen::VectorXd x = embed_m(sys, pt.X);
  return 0.5 * bform_full(sys, x, x);
}

std::vector<DriftEntry> conservation_report(const MagneticSystem& sys, const FlowTrajectory& traj,
                                            const std::vector<IntegralFunction>& functions, double tol) {
  if (traj.points.empty()) throw std::invalid_argument("conservation_report: empty trajectory");
  std::vector<DriftEntry> out;
  for (const auto& f : functions) {
    DriftEntry e;
    e.function = f.name();
    e.initial = f.value(sys, traj.points.front());
    for (const auto& p : traj.points) e.max_drift = std::max(e.max_drift, std::abs(f.value(sys, p) - e.initial));
    e.pass = e.max_drift < tol;
    out.push_back(e);
  }
  return out;
}

// ---- generator lists

std::vector<CPoly> root_coordinate_polys(const LieAlgebra& alg) {
  if (!alg.roots) throw std::invalid_argument("root coordinates need root data");
  const int n = alg.rep_dim;
  std::vector<CPoly> out;
  for (auto [i, j] : alg.roots->positions) {
    // B(xi, e_ji) = -tf xi_ij, xi = sum_l (x_l / B_ll) e_l
    CPoly z{Polynomial(alg.vars), Polynomial(alg.vars)};
    for (int l = 0; l < alg.dim; ++l) {
      const CQ3& m = alg.rep_exact[l][i * n + j];
      if (m.is_zero()) continue;
      Q3 s = -(alg.trace_factor * alg.bform(l, l).inverse());
      z.re += coordinate(alg, l) * (m.re * s);
      z.im += coordinate(alg, l) * (m.im * s);
    }
    out.push_back(z);
  }
  return out;
}

std::vector<Polynomial> regular_slice_polys(const LieAlgebra& alg) {
  auto z = root_coordinate_polys(alg);
  std::vector<Polynomial> out;
  for (const auto& zk : z) out.push_back((zk * zk.conj()).re);
  CPoly f = z[0] * z[1] * z[2].conj();
  out.push_back(f.re);
  out.push_back(f.im);
  return out;
}

Polynomial irregular_slice_poly(const MagneticSystem& sys) {
  Polynomial r(sys.alg->vars);
  for (int k : sys.sub.m_indices) r += coordinate(*sys.alg, k).pow(2);
  return r;
}

std::vector<IntegralFunction> moment_coordinates(const MagneticSystem& sys) {
  std::vector<IntegralFunction> out;
  for (int i = 0; i < sys.alg->dim; ++i)
    out.push_back(IntegralFunction::moment(coordinate(*sys.alg, i), "P" + std::to_string(i + 1)));
  return out;
}

std::vector<IntegralFunction> slice_generators(const MagneticSystem& sys) {
  std::vector<IntegralFunction> out;
  if (sys.tag == Case::regular) {
    auto polys = regular_slice_polys(*sys.alg);
    const char* names[] = {"u1", "u2", "u3", "v", "w"};
    for (int k = 0; k < 5; ++k) out.push_back(IntegralFunction::slice(sys, polys[k], names[k]));
  } else {
    out.push_back(IntegralFunction::slice(sys, irregular_slice_poly(sys), "R"));
  }
  return out;
}

std::vector<IntegralFunction> monitored_integrals(const MagneticSystem& sys) {
  auto out = moment_coordinates(sys);
  for (auto& f : slice_generators(sys)) out.push_back(f);
  return out;
}

// ---- exports

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace

std::string trajectory_csv(const MagneticSystem& sys, const FlowTrajectory& traj,
                           const std::vector<IntegralFunction>& functions) {
  std::ostringstream os;
  os << "t";
  const auto n = traj.points.empty() ? 0 : traj.points.front().g.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) os << ",g" << i + 1 << j + 1 << "_re,g" << i + 1 << j + 1 << "_im";
  for (int k : sys.sub.m_indices) os << ",X_" << sys.alg->labels[k];
  for (const auto& f : functions) os << "," << f.name();
  os << "\n";
  for (std::size_t r = 0; r < traj.points.size(); ++r) {
    const auto& p = traj.points[r];
    os << fmt(traj.times[r]);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) os << "," << fmt(p.g(i, j).real()) << "," << fmt(p.g(i, j).imag());
    for (Eigen::Index k = 0; k < p.X.size(); ++k) os << "," << fmt(p.X(k));
    for (const auto& f : functions) os << "," << fmt(f.value(sys, p));
    os << "\n";
  }
  return os.str();
}

std::string conservation_json(const std::vector<DriftEntry>& report) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& e : report)
    j.push_back({{"function", e.function}, {"initial", e.initial}, {"max_drift", e.max_drift}, {"pass", e.pass}});
  return j.dump(2) + "\n";
}

// ---- sampling

Eigen::MatrixXcd random_special_unitary(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXcd h(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h(i, j) = std::complex<double>(u(rng), u(rng));
  h = 0.5 * (h + h.adjoint());
  h -= (h.trace() / 3.0) * Eigen::MatrixXcd::Identity(3, 3);
  // spread over the group, not only near e
  return exp_skew(std::complex<double>(0, -M_PI) * h);
}

bool on_regular_locus(const MagneticSystem& sys, const PhasePoint& pt) {
  if (sys.tag == Case::irregular) return pt.X.norm() > 1e-3;
  Eigen::VectorXd xi = slice_map(sys, pt);
  if (!regularity(*sys.alg, xi).regular) return false;
  Eigen::MatrixXcd m = to_matrix(*sys.alg, xi);
  for (auto [i, j] : sys.alg->roots->positions)
    if (std::abs(m(i, j)) <= 1e-3) return false;
  return true;
}

PhasePoint random_point(const MagneticSystem& sys, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    PhasePoint p;
    p.g = random_special_unitary(rng);
    p.X.resize(sys.sub.m_indices.size());
    for (Eigen::Index k = 0; k < p.X.size(); ++k) p.X(k) = u(rng);
    if (on_regular_locus(sys, p)) return p;
  }
}

}  // namespace suchain
