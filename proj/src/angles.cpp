#include "suchain/angles.hpp"

#include "suchain/invariants.hpp"
#include "suchain/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace suchain {

namespace {

const std::array<std::pair<int, int>, 3> kPositions = {{{0, 1}, {1, 2}, {0, 2}}};

double wrap(double a) {
  a = std::fmod(a, 2 * M_PI);
  return a < 0 ? a + 2 * M_PI : a;
}

Eigen::MatrixXcd coroot(int k) {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(3, 3);
  h(k, k) = std::complex<double>(0, 1);
  h(k + 1, k + 1) = std::complex<double>(0, -1);
  return h;
}

// phi differences from z at two points, branch-free
Eigen::Vector2d phi_difference(const Eigen::Vector3cd& zp, const Eigen::Vector3cd& zm) {
  Eigen::Vector3d d;
  for (int k = 0; k < 3; ++k) d(k) = std::arg(zp(k) / zm(k));
  return {-(d(0) + d(2)) / 3, -(d(1) + d(2)) / 3};
}

PhasePoint rk4_step(const MagneticSystem& sys, const PhasePoint& pt,
                    const std::function<TangentVector(const PhasePoint&)>& field, double h) {
  return flow_field(sys, pt, field, h, 1);
}

}  // namespace

Eigen::Vector3cd root_coordinates(const MagneticSystem& sys, const PhasePoint& pt) {
  if (sys.alg->rep_dim != 3) throw std::invalid_argument("root coordinates need su(3)");
  Eigen::MatrixXcd z = pt.g.adjoint() * to_matrix(*sys.alg, slice_map(sys, pt)) * pt.g;
  Eigen::Vector3cd out;
  for (int k = 0; k < 3; ++k) out(k) = z(kPositions[k].second, kPositions[k].first);
  return out;
}

Eigen::Vector3d root_phases(const MagneticSystem& sys, const PhasePoint& pt, double min_modulus) {
  Eigen::Vector3cd z = root_coordinates(sys, pt);
  Eigen::Vector3d t;
  for (int k = 0; k < 3; ++k) {
    if (std::abs(z(k)) <= min_modulus) throw std::domain_error("root phase undefined: |z_k| too small");
    t(k) = wrap(std::arg(z(k)));
  }
  return t;
}

Eigen::Vector2d torus_angles(const MagneticSystem& sys, const PhasePoint& pt) {
  Eigen::Vector3d t = root_phases(sys, pt);
  return {wrap(-(t(0) + t(2)) / 3), wrap(-(t(1) + t(2)) / 3)};
}

Eigen::Matrix<double, 3, 2> theta_matrix(const MagneticSystem& sys) {
  (void)sys;
  // alpha_k(H_a_l) / i for the diagonal coroots
  Eigen::Matrix<double, 3, 2> th;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 2; ++l) {
      Eigen::MatrixXcd h = coroot(l);
      auto [i, j] = kPositions[k];
      th(k, l) = ((h(i, i) - h(j, j)) / std::complex<double>(0, 1)).real();
    }
  return th;
}

Eigen::Matrix<double, 2, 3> left_inverse_l() {
  Eigen::Matrix<double, 2, 3> l;
  l << 1, 0, 1, 0, 1, 1;
  return l / 3.0;
}

PhasePoint right_torus_action(const MagneticSystem& sys, const PhasePoint& pt, const Eigen::Vector2d& sigma) {
  (void)sys;
  Eigen::MatrixXcd h = sigma(0) * coroot(0) + sigma(1) * coroot(1);
  return {pt.g * exp_skew(-h), pt.X};
}

Eigen::Vector2d angle_rate(const MagneticSystem& sys, const PhasePoint& pt,
                           const std::function<TangentVector(const PhasePoint&)>& field, double h) {
  Eigen::Vector3cd zp = root_coordinates(sys, rk4_step(sys, pt, field, h));
  Eigen::Vector3cd zm = root_coordinates(sys, rk4_step(sys, pt, field, -h));
  return phi_difference(zp, zm) / (2 * h);
}

Eigen::MatrixXd angle_covectors(const MagneticSystem& sys, const PhasePoint& pt, double h) {
  const int n = 2 * static_cast<int>(sys.sub.m_indices.size());
  Eigen::MatrixXd d(2, n);
  for (int k = 0; k < n; ++k) {
    TangentVector t = basis_tangent(sys, k);
    d.col(k) = phi_difference(root_coordinates(sys, move(sys, pt, t, h)), root_coordinates(sys, move(sys, pt, t, -h))) /
               (2 * h);
  }
  return d;
}

std::vector<IntegralFunction> actions(const MagneticSystem& sys) {
  if (sys.tag == Case::irregular) return {IntegralFunction::slice(sys, irregular_slice_poly(sys), "R")};
  Casimirs cs = casimirs_su3(*sys.alg);
  return {IntegralFunction::moment(cs.c2, "J2"), IntegralFunction::moment(cs.c3, "J3")};
}

Eigen::MatrixXd frequency_matrix(const MagneticSystem& sys, const PhasePoint& pt, double h) {
  auto js = actions(sys);
  Eigen::MatrixXd om(2, js.size());
  for (std::size_t k = 0; k < js.size(); ++k) {
    const IntegralFunction& j = js[k];
    om.col(k) = angle_rate(sys, pt, [&](const PhasePoint& q) { return j.field(sys, q); }, h);
  }
  return om;
}

Rescaling rescaling(const MagneticSystem& sys, const PhasePoint& pt, double h) {
  Rescaling r;
  r.omega = frequency_matrix(sys, pt, h);
  if (sys.tag == Case::regular) {
    if (numeric_rank(r.omega, 1e-10) < 2) throw std::domain_error("frequency matrix is singular");
    r.S = r.omega.inverse();
  } else {
    double n2 = r.omega.squaredNorm();
    if (n2 == 0.0) throw std::domain_error("frequency vector vanishes");
    r.S = r.omega.transpose() / n2;
  }
  return r;
}

Eigen::VectorXd rescaled_angles(const MagneticSystem& sys, const PhasePoint& pt, const Rescaling& r) {
  Eigen::Vector2d phi = torus_angles(sys, pt);
  return r.S * phi;
}

Canonicity canonicity(const MagneticSystem& sys, const PhasePoint& pt, double h) {
  Canonicity c;
  Rescaling r = rescaling(sys, pt, h);
  auto js = actions(sys);
  Eigen::MatrixXd dphi = angle_covectors(sys, pt, h);
  Eigen::MatrixXd fields(dphi.cols(), js.size());
  for (std::size_t k = 0; k < js.size(); ++k) fields.col(k) = to_coefficients(js[k].field(sys, pt));
  c.phi_tilde_j = r.S * dphi * fields;
  c.j_j = Eigen::MatrixXd(js.size(), js.size());
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = 0; b < js.size(); ++b) c.j_j(a, b) = twisted_bracket(sys, js[a], js[b], pt);
  if (sys.tag == Case::regular) {
    // {phi_a, phi_b} = dphi_a(X_phi_b), X_phi_b = M^-1 dphi_b
    Eigen::MatrixXd m = magform_matrix(sys, pt);
    Eigen::MatrixXd pb = dphi * m.partialPivLu().solve(dphi.transpose());
    c.phi_tilde_bracket = (r.S * pb * r.S.transpose())(0, 1);
  } else {
    c.u_dot_omega = (r.S * r.omega)(0, 0);
  }
  return c;
}

AngleChart angle_chart(const MagneticSystem& sys, const PhasePoint& pt) {
  return {root_phases(sys, pt), torus_angles(sys, pt), frequency_matrix(sys, pt)};
}

}  // namespace suchain
