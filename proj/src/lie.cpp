#include "suchain/lie.hpp"

#include "suchain/linalg.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace suchain {

namespace {

ExactMatrix zero_matrix(int n) { return ExactMatrix(n * n, CQ3(Q3(0))); }

ExactMatrix mul(const ExactMatrix& a, const ExactMatrix& b, int n) {
  ExactMatrix r = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i * n + k].is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!b[k * n + j].is_zero()) r[i * n + j] = r[i * n + j] + a[i * n + k] * b[k * n + j];
    }
  return r;
}

ExactMatrix sub(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

CQ3 trace(const ExactMatrix& a, int n) {
  CQ3 t(Q3(0));
  for (int i = 0; i < n; ++i) t = t + a[i * n + i];
  return t;
}

// multiply every entry by -i
ExactMatrix times_minus_i(const ExactMatrix& a) {
  ExactMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = CQ3(a[i].im, -a[i].re);
  return r;
}

ExactMatrix times_i(const ExactMatrix& a) {
  ExactMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = CQ3(-a[i].im, a[i].re);
  return r;
}

ExactMatrix unit(int n, int i, int j, CQ3 v = CQ3(Q3(1))) {
  ExactMatrix m = zero_matrix(n);
  m[i * n + j] = v;
  return m;
}

ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExactMatrix scale(const ExactMatrix& a, const Q3& s) {
  ExactMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = CQ3(a[i].re * s, a[i].im * s);
  return r;
}

Q3 exact_bform(const LieAlgebra& alg, const ExactMatrix& a, const ExactMatrix& b) {
  CQ3 t = trace(mul(a, b, alg.rep_dim), alg.rep_dim);
  if (!t.im.is_zero()) throw std::logic_error("bilinear form is not real on the basis");
  return -(alg.trace_factor * t.re);
}

MatrixQ inverse(const MatrixQ& m) {
  const Eigen::Index n = m.rows();
  MatrixQ a(n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < 2 * n; ++j) a(i, j) = j < n ? m(i, j) : Q3(j - n == i ? 1 : 0);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw std::domain_error("singular bilinear form");
    if (p != c) a.row(p).swap(a.row(c));
    Q3 inv = a(c, c).inverse();
    for (Eigen::Index j = 0; j < 2 * n; ++j) a(c, j) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      Q3 f = a(r, c);
      for (Eigen::Index j = 0; j < 2 * n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return a.rightCols(n);
}

void finalize(LieAlgebra& alg) {
  const int n = alg.dim;
  alg.vars = make_vars(alg.labels);
  alg.bform = MatrixQ(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) alg.bform(k, l) = exact_bform(alg, alg.rep_exact[k], alg.rep_exact[l]);
  MatrixQ binv = inverse(alg.bform);
  alg.structure.assign(n * n * n, Q3(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ExactMatrix c = sub(mul(alg.rep_exact[i], alg.rep_exact[j], alg.rep_dim),
                          mul(alg.rep_exact[j], alg.rep_exact[i], alg.rep_dim));
      VectorQ p(n);
      for (int l = 0; l < n; ++l) p(l) = exact_bform(alg, c, alg.rep_exact[l]);
      for (int k = 0; k < n; ++k) {
        Q3 s(0);
        for (int l = 0; l < n; ++l) s += binv(k, l) * p(l);
        alg.structure[(i * n + j) * n + k] = s;
      }
    }
  alg.rep.clear();
  for (const auto& m : alg.rep_exact) {
    Eigen::MatrixXcd d(alg.rep_dim, alg.rep_dim);
    for (int i = 0; i < alg.rep_dim; ++i)
      for (int j = 0; j < alg.rep_dim; ++j) d(i, j) = m[i * alg.rep_dim + j].to_complex();
    alg.rep.push_back(d);
  }
  alg.bform_d = to_double(alg.bform);
  alg.bform_inv_d = to_double(binv);
  alg.ad_linear.clear();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial a(alg.vars);
      for (int k = 0; k < n; ++k) a += Polynomial::variable(alg.vars, k) * alg.C(i, j, k);
      alg.ad_linear.push_back(a);
    }
  if (!check_rep_closure(alg)) throw std::logic_error("matrix basis does not close under commutators");
}

}  // namespace

LieAlgebra build_su3_gellmann() {
  LieAlgebra alg;
  alg.name = "su3-gellmann";
  alg.dim = 8;
  alg.rep_dim = 3;
  alg.trace_factor = Q3::frac(1, 2);
  alg.rescaling = "e_k = -i*lambda_k; structure constants are 2*f_ijk; B = -1/2 tr is the identity";
  for (int k = 1; k <= 8; ++k) alg.labels.push_back("x" + std::to_string(k));
  const CQ3 one(Q3(1)), i(Q3(0), Q3(1)), mi(Q3(0), Q3(-1));
  std::vector<ExactMatrix> lam;
  lam.push_back(add(unit(3, 0, 1), unit(3, 1, 0)));
  lam.push_back(add(unit(3, 0, 1, mi), unit(3, 1, 0, i)));
  lam.push_back(sub(unit(3, 0, 0), unit(3, 1, 1)));
  lam.push_back(add(unit(3, 0, 2), unit(3, 2, 0)));
  lam.push_back(add(unit(3, 0, 2, mi), unit(3, 2, 0, i)));
  lam.push_back(add(unit(3, 1, 2), unit(3, 2, 1)));
  lam.push_back(add(unit(3, 1, 2, mi), unit(3, 2, 1, i)));
  // lambda8 = diag(1,1,-2)/sqrt3 = (sqrt3/3) diag(1,1,-2)
  ExactMatrix l8 = add(add(unit(3, 0, 0), unit(3, 1, 1)), unit(3, 2, 2, CQ3(Q3(-2))));
  lam.push_back(scale(l8, Q3::sqrt3(mpq_class(1, 3))));
  (void)one;
  for (const auto& l : lam) alg.rep_exact.push_back(times_minus_i(l));
  finalize(alg);
  return alg;
}

LieAlgebra build_su3_chevalley() {
  LieAlgebra alg;
  alg.name = "su3-chevalley";
  alg.dim = 8;
  alg.rep_dim = 3;
  alg.trace_factor = Q3(1);
  alg.rescaling =
      "real basis H1 = i diag(1,-1,0), H2 = (i/sqrt3) diag(1,1,-2), X_k = e_ij - e_ji, Y_k = i(e_ij + e_ji); "
      "B = -tr so that B(E_a, E_-a) = 1 with E_a = -e_ij, E_-a = e_ji";
  alg.labels = {"h1", "h2", "x1", "x2", "x3", "y1", "y2", "y3"};
  const std::vector<std::pair<int, int>> pos = {{0, 1}, {1, 2}, {0, 2}};
  const CQ3 i(Q3(0), Q3(1));
  ExactMatrix h1 = times_i(sub(unit(3, 0, 0), unit(3, 1, 1)));
  ExactMatrix d = add(add(unit(3, 0, 0), unit(3, 1, 1)), unit(3, 2, 2, CQ3(Q3(-2))));
  ExactMatrix h2 = scale(times_i(d), Q3::sqrt3(mpq_class(1, 3)));
  alg.rep_exact = {h1, h2};
  for (auto [a, b] : pos) alg.rep_exact.push_back(sub(unit(3, a, b), unit(3, b, a)));
  for (auto [a, b] : pos) alg.rep_exact.push_back(add(unit(3, a, b, i), unit(3, b, a, i)));
  finalize(alg);

  RootData rd;
  rd.positions = pos;
  for (auto [a, b] : pos) {
    Eigen::MatrixXcd ep = Eigen::MatrixXcd::Zero(3, 3), en = Eigen::MatrixXcd::Zero(3, 3),
                     h = Eigen::MatrixXcd::Zero(3, 3);
    ep(a, b) = -1.0;
    en(b, a) = 1.0;
    h(a, a) = std::complex<double>(0, 1);
    h(b, b) = std::complex<double>(0, -1);
    rd.e_pos.push_back(ep);
    rd.e_neg.push_back(en);
    rd.coroots.push_back(h);
  }
  // alpha_k(H) / i for diagonal H = i diag(s): s_a - s_b
  rd.cartan = Eigen::MatrixXd(2, 2);
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) {
      auto [a, b] = pos[k];
      std::complex<double> v = (rd.coroots[l](a, a) - rd.coroots[l](b, b)) / std::complex<double>(0, 1);
      rd.cartan(k, l) = v.real();
    }
  alg.roots = rd;
  return alg;
}

LieAlgebra build_su2() {
  LieAlgebra alg;
  alg.name = "su2";
  alg.dim = 3;
  alg.rep_dim = 2;
  alg.trace_factor = Q3::frac(1, 2);
  alg.rescaling = "e = -i*(sigma3, sigma1, sigma2); [e_x, e_y] = 2 e_z cyclically; B = -1/2 tr is the identity";
  alg.labels = {"x", "y", "z"};
  const CQ3 i(Q3(0), Q3(1)), mi(Q3(0), Q3(-1));
  ExactMatrix s3 = sub(unit(2, 0, 0), unit(2, 1, 1));
  ExactMatrix s1 = add(unit(2, 0, 1), unit(2, 1, 0));
  ExactMatrix s2 = add(unit(2, 0, 1, mi), unit(2, 1, 0, i));
  alg.rep_exact = {times_minus_i(s3), times_minus_i(s1), times_minus_i(s2)};
  finalize(alg);
  return alg;
}

bool check_antisymmetry(const LieAlgebra& alg) {
  const int n = alg.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (alg.C(i, j, k) != -alg.C(j, i, k)) return false;
  return true;
}

bool check_jacobi(const LieAlgebra& alg) {
  const int n = alg.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          Q3 s(0);
          for (int m = 0; m < n; ++m)
            s += alg.C(i, j, m) * alg.C(m, k, l) + alg.C(j, k, m) * alg.C(m, i, l) + alg.C(k, i, m) * alg.C(m, j, l);
          if (!s.is_zero()) return false;
        }
  return true;
}

bool check_ad_invariance(const LieAlgebra& alg) {
  const int n = alg.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // B([e_i,e_j],e_k) + B(e_j,[e_i,e_k])
        Q3 s(0);
        for (int m = 0; m < n; ++m) s += alg.C(i, j, m) * alg.bform(m, k) + alg.C(i, k, m) * alg.bform(j, m);
        if (!s.is_zero()) return false;
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (alg.bform(i, j) != alg.bform(j, i)) return false;
  return true;
}

bool check_rep_closure(const LieAlgebra& alg) {
  const int n = alg.dim, r = alg.rep_dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ExactMatrix c = sub(mul(alg.rep_exact[i], alg.rep_exact[j], r), mul(alg.rep_exact[j], alg.rep_exact[i], r));
      ExactMatrix s = zero_matrix(r);
      for (int k = 0; k < n; ++k) s = add(s, scale(alg.rep_exact[k], alg.C(i, j, k)));
      for (int e = 0; e < r * r; ++e)
        if (!(c[e] - s[e]).is_zero()) return false;
    }
  return true;
}

bool check_subalgebra(const LieAlgebra& alg, const Subalgebra& sub) {
  std::vector<int> seen(alg.dim, 0);
  for (int a : sub.a_indices) ++seen[a];
  for (int m : sub.m_indices) ++seen[m];
  for (int s : seen)
    if (s != 1) return false;
  std::vector<bool> in_m(alg.dim, false);
  for (int m : sub.m_indices) in_m[m] = true;
  for (int a : sub.a_indices) {
    for (int m : sub.m_indices) {
      if (!alg.bform(a, m).is_zero()) return false;
      for (int k = 0; k < alg.dim; ++k)
        if (!in_m[k] && !alg.C(a, m, k).is_zero()) return false;
    }
    for (int b : sub.a_indices)
      for (int k = 0; k < alg.dim; ++k)
        if (in_m[k] && !alg.C(a, b, k).is_zero()) return false;
  }
  return true;
}

Eigen::MatrixXcd to_matrix(const LieAlgebra& alg, const Eigen::VectorXd& comps) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(alg.rep_dim, alg.rep_dim);
  for (int k = 0; k < alg.dim; ++k) m += comps(k) * alg.rep[k];
  return m;
}

double bform(const LieAlgebra& alg, const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return -alg.trace_factor.to_double() * (a * b).trace().real();
}

Eigen::VectorXd pairings(const LieAlgebra& alg, const Eigen::MatrixXcd& m) {
  Eigen::VectorXd p(alg.dim);
  const double tf = alg.trace_factor.to_double();
  for (int k = 0; k < alg.dim; ++k) p(k) = -tf * (m * alg.rep[k]).trace().real();
  return p;
}

Eigen::VectorXd components(const LieAlgebra& alg, const Eigen::MatrixXcd& m) {
  return alg.bform_inv_d * pairings(alg, m);
}

Eigen::VectorXd bracket(const LieAlgebra& alg, const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  Eigen::VectorXd r = Eigen::VectorXd::Zero(alg.dim);
  for (int i = 0; i < alg.dim; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < alg.dim; ++j) {
      if (y(j) == 0.0) continue;
      for (int k = 0; k < alg.dim; ++k) r(k) += x(i) * y(j) * alg.C(i, j, k).to_double();
    }
  }
  return r;
}

Eigen::MatrixXcd project(const LieAlgebra& alg, const std::vector<int>& idx, const Eigen::MatrixXcd& m) {
  Eigen::VectorXd c = components(alg, m);
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(alg.rep_dim, alg.rep_dim);
  for (int k : idx) r += c(k) * alg.rep[k];
  return r;
}

MatrixQ ad_matrix(const LieAlgebra& alg, const VectorQ& w) {
  const int n = alg.dim;
  MatrixQ m = MatrixQ::Constant(n, n, Q3(0));
  for (int i = 0; i < n; ++i) {
    if (w(i).is_zero()) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m(k, j) += w(i) * alg.C(i, j, k);
  }
  return m;
}

VectorQ bracket(const LieAlgebra& alg, const VectorQ& x, const VectorQ& y) { return ad_matrix(alg, x) * y; }

Q3 bform(const LieAlgebra& alg, const VectorQ& x, const VectorQ& y) {
  Q3 s(0);
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j)
      if (!x(i).is_zero() && !y(j).is_zero()) s += x(i) * alg.bform(i, j) * y(j);
  return s;
}

bool is_special_unitary(const Eigen::MatrixXcd& g, double tol) {
  const auto n = g.rows();
  if ((g.adjoint() * g - Eigen::MatrixXcd::Identity(n, n)).norm() > tol) return false;
  return std::abs(g.determinant() - 1.0) <= tol;
}

Eigen::VectorXd adjoint_group(const LieAlgebra& alg, const Eigen::MatrixXcd& g, const Eigen::VectorXd& x) {
  if (!is_special_unitary(g, 1e-10)) throw std::invalid_argument("adjoint_group: g is not special unitary");
  return components(alg, g * to_matrix(alg, x) * g.adjoint());
}

Eigen::MatrixXcd exp_skew(const Eigen::MatrixXcd& m) {
  // m = -i h with h Hermitian, exp(m) = U exp(-i diag) U^*
  const auto n = m.rows();
  Eigen::MatrixXcd h = std::complex<double>(0, 1) * m;
  h = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd ph(n);
  for (Eigen::Index k = 0; k < n; ++k) ph(k) = std::exp(std::complex<double>(0, -es.eigenvalues()(k)));
  Eigen::MatrixXcd g = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
  std::complex<double> d = g.determinant();
  return g * std::pow(d, -1.0 / static_cast<double>(n));
}

Eigen::MatrixXcd exp_map(const LieAlgebra& alg, const Eigen::VectorXd& x) { return exp_skew(to_matrix(alg, x)); }

Eigen::MatrixXcd reproject_special_unitary(const Eigen::MatrixXcd& g) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXcd u = svd.matrixU() * svd.matrixV().adjoint();
  std::complex<double> d = u.determinant();
  return u * std::pow(d, -1.0 / static_cast<double>(g.rows()));
}

namespace {

Subalgebra split_from_kernel(const LieAlgebra& alg, const std::vector<int>& a) {
  Subalgebra s;
  s.a_indices = a;
  std::vector<bool> in_a(alg.dim, false);
  for (int i : a) in_a[i] = true;
  for (int j = 0; j < alg.dim; ++j)
    if (!in_a[j]) s.m_indices.push_back(j);
  for (int i : s.a_indices)
    for (int j : s.m_indices)
      if (!alg.bform(i, j).is_zero()) throw std::runtime_error("centralizer: complement is not B-orthogonal");
  return s;
}

}  // namespace

Subalgebra centralizer_of(const LieAlgebra& alg, const VectorQ& w) {
  bool zero = true;
  for (int i = 0; i < alg.dim; ++i) zero = zero && w(i).is_zero();
  if (zero) throw std::invalid_argument("centralizer_of: W = 0 centralizes the whole algebra");
  std::vector<int> a;
  for (const auto& v : nullspace(ad_matrix(alg, w))) {
    int nz = 0, at = -1;
    for (int i = 0; i < alg.dim; ++i)
      if (!v(i).is_zero()) {
        ++nz;
        at = i;
      }
    if (nz != 1) throw std::runtime_error("centralizer_of: kernel is not spanned by basis elements");
    a.push_back(at);
  }
  std::sort(a.begin(), a.end());
  return split_from_kernel(alg, a);
}

Subalgebra centralizer_of(const LieAlgebra& alg, const Eigen::VectorXd& w, double tol) {
  if (w.norm() == 0.0) throw std::invalid_argument("centralizer_of: W = 0 centralizes the whole algebra");
  Eigen::MatrixXd ad = Eigen::MatrixXd::Zero(alg.dim, alg.dim);
  for (int j = 0; j < alg.dim; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Unit(alg.dim, j);
    ad.col(j) = bracket(alg, w, e);
  }
  Eigen::MatrixXd ns = numeric_nullspace(ad, tol);
  Eigen::VectorXd weight = (ns * ns.transpose()).diagonal();
  std::vector<int> a;
  for (int i = 0; i < alg.dim; ++i) {
    if (weight(i) > 1 - 1e-8) {
      a.push_back(i);
    } else if (weight(i) > 1e-8) {
      throw std::runtime_error("centralizer_of: kernel is not spanned by basis elements");
    }
  }
  return split_from_kernel(alg, a);
}

Regularity regularity(const LieAlgebra& alg, const Eigen::VectorXd& w, double tol) {
  Eigen::MatrixXcd h = std::complex<double>(0, 1) * to_matrix(alg, w);
  h = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  Regularity r;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    for (Eigen::Index j = i + 1; j < ev.size(); ++j)
      if (std::abs(ev(i) - ev(j)) < tol * scale) r.vanishing_roots.emplace_back(int(i), int(j));
  r.regular = r.vanishing_roots.empty();
  return r;
}

std::string serialize(const LieAlgebra& alg) {
  std::ostringstream os;
  os << "algebra " << alg.name << "\n";
  os << "dim " << alg.dim << "\n";
  os << "labels";
  for (const auto& l : alg.labels) os << ' ' << l;
  os << "\nrescaling " << alg.rescaling << "\n";
  os << "bform\n";
  for (int i = 0; i < alg.dim; ++i) {
    for (int j = 0; j < alg.dim; ++j) os << (j ? " " : "") << alg.bform(i, j).str();
    os << "\n";
  }
  os << "structure\n";
  for (int i = 0; i < alg.dim; ++i)
    for (int j = i + 1; j < alg.dim; ++j)
      for (int k = 0; k < alg.dim; ++k)
        if (!alg.C(i, j, k).is_zero())
          os << alg.labels[i] << ' ' << alg.labels[j] << ' ' << alg.labels[k] << ' ' << alg.C(i, j, k).str() << "\n";
  return os.str();
}

}  // namespace suchain
