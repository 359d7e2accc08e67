#include "suchain/verify.hpp"

#include "suchain/angles.hpp"
#include "suchain/poisson.hpp"

#include <stdexcept>

namespace suchain {

void validate(const RunConfig& cfg) {
  if (cfg.eps == 0.0) throw std::invalid_argument("eps must be nonzero");
  if (!(cfg.dt > 0)) throw std::invalid_argument("dt must be positive");
  if (!(cfg.t_end > 0)) throw std::invalid_argument("t_end must be positive");
  if (cfg.samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (cfg.max_degree < 1 || cfg.max_degree > kDegreeCap) throw std::invalid_argument("max_degree out of range");
}

MagneticSystem make_system(const RunConfig& cfg) {
  validate(cfg);
  return cfg.tag == Case::regular ? regular_system(cfg.eps) : irregular_system(cfg.eps);
}

namespace {

Check exact(std::string name, const Polynomial& got, const Polynomial& want) {
  Polynomial r = got - want;
  return {std::move(name), want.str(), r.is_zero() ? got.str() : "residual " + r.str(), 0.0, r.is_zero()};
}

Check bound(std::string name, double observed, double tol) {
  return {std::move(name), "0", fmt_double(observed), tol, observed < tol};
}

}  // namespace

CertificateReport bracket_checks(const MagneticSystem& sys, std::mt19937_64& rng, int samples) {
  CertificateReport rep;
  if (sys.tag == Case::regular) {
    BracketTable t = bracket_table_regular(sys);
    for (const auto& e : t.entries) {
      Polynomial r = e.computed - e.expected;
      rep.add({"bracket {" + e.left + "," + e.right + "}", e.expected_generators.str(),
               e.match ? e.rewritten.str() : e.rewritten.str() + "; residual " + r.str(), 0.0, e.match});
    }
  }
  auto p = moment_coordinates(sys);
  auto s = slice_generators(sys);
  double closure = 0, mixed = 0;
  for (int k = 0; k < samples; ++k) {
    PhasePoint pt = random_point(sys, rng);
    Eigen::VectorXd mu = coords(*sys.alg, moment_map(sys, pt));
    for (int i = 0; i < sys.alg->dim; ++i)
      for (int j = 0; j < sys.alg->dim; ++j)
        closure = std::max(closure, std::abs(twisted_bracket(sys, p[i], p[j], pt) -
                                             sys.alg->ad_linear[i * sys.alg->dim + j].evaluate(mu)));
    for (const auto& a : p)
      for (const auto& b : s) mixed = std::max(mixed, std::abs(twisted_bracket(sys, a, b, pt)));
  }
  rep.add(bound("moment closure {P_i,P_j} - P_[e_i,e_j]", closure, 1e-10));
  rep.add(bound("mixed block {P_i, pi*theta}", mixed, 1e-10));
  return rep;
}

CertificateReport relation_checks(const MagneticSystem& sys, std::mt19937_64& rng, int samples) {
  CertificateReport rep;
  const LieAlgebra& alg = *sys.alg;
  if (sys.tag == Case::regular) {
    rep.add(exact("cubic relation u1 u2 u3 - v^2 - w^2", cubic_relation_residual(alg), Polynomial(alg.vars)));
    Casimirs cs = casimirs_su3(alg);
    auto u = regular_slice_polys(alg);
    VarNames ev = eps_vars(alg);
    Polynomial eps = Polynomial::variable(ev, alg.dim);
    Polynomial want = (u[0] + u[1] + u[2]).rebind(ev) + eps * eps * Q3::frac(1, 2);
    rep.add(exact("Res_W C2 = u1 + u2 + u3 + eps^2/2", restrict_shift(cs.c2, sys), want));
  } else {
    Casimirs cs = casimirs_su3(alg);
    VarNames ev = eps_vars(alg);
    Polynomial eps = Polynomial::variable(ev, alg.dim);
    auto x = [&](int i) { return Polynomial::variable(ev, i); };
    Polynomial r = x(3) * x(3) + x(4) * x(4) + x(5) * x(5) + x(6) * x(6);
    rep.add(exact("Res_W C2 = R + 3 eps^2", restrict_shift(cs.c2, sys), r + eps * eps * Q3(3)));
    Polynomial printed = eps * Q3(3) * (eps * eps * Q3(2) + x(3) * x(3) + x(4) * x(4) - x(5) * x(5) * Q3(2) - x(6) * x(6) * Q3(2));
    rep.add(exact("Res_W C3 = 3 eps (2 eps^2 + x4^2 + x5^2 - 2 x6^2 - 2 x7^2)", restrict_shift(cs.c3, sys), printed));
    PhiRelation phi = phi_relation_irregular(sys, samples, rng);
    rep.add(bound("phi relation C3(P) - 3 eps (C2(P) - eps^2)", phi.invariant_residual, 1e-10));
    Check pc = bound("printed phi relation C3(P) - 3 eps (2 eps^2 + P4^2 + P5^2 - 2 P6^2 - 2 P7^2)",
                     phi.printed_residual, 1e-10);
    pc.informational = true;
    rep.add(pc);
    auto got = a_matrix_minors(sys), want = expected_minors(sys);
    const char* names[] = {"A(X) minor (123)", "A(X) minor (124)", "A(X) minor (134)", "A(X) minor (234)"};
    for (int k = 0; k < 4; ++k) rep.add(exact(names[k], got[k], want[k]));
  }
  return rep;
}

CertificateReport rank_checks(const MagneticSystem& sys, std::mt19937_64& rng, int samples) {
  CertificateReport rep;
  const int want = sys.tag == Case::regular ? 10 : 7;
  int hits = 0, last = 0, a_hits = 0;
  for (int k = 0; k < samples; ++k) {
    PhasePoint pt = random_point(sys, rng);
    last = jacobian_rank_pi1(sys, pt);
    hits += last == want;
    if (sys.tag == Case::irregular) a_hits += a_matrix_rank(sys, pt.X) == 3;
  }
  rep.add({"pi1_rank", std::to_string(want), std::to_string(last) + " (" + std::to_string(hits) + "/" + std::to_string(samples) + ")",
           0.0, hits == samples});
  if (sys.tag == Case::irregular) {
    int zero_hits = 0;
    for (int k = 0; k < samples; ++k) {
      PhasePoint pt{random_special_unitary(rng), Eigen::VectorXd::Zero(sys.sub.m_indices.size())};
      zero_hits += jacobian_rank_pi1(sys, pt) == 4;
    }
    rep.add({"pi1_rank at X = 0", "4", std::to_string(zero_hits) + "/" + std::to_string(samples), 0.0, zero_hits == samples});
    rep.add({"rank A(X) for X != 0", "3", std::to_string(a_hits) + "/" + std::to_string(samples), 0.0, a_hits == samples});
  }
  rep.append(dimension_report(sys, samples, rng));
  rep.append(center_check(sys, samples, rng));
  return rep;
}

CertificateReport flow_checks(const MagneticSystem& sys, std::mt19937_64& rng, double t_end, double dt) {
  CertificateReport rep;
  PhasePoint pt = random_point(sys, rng);
  FlowTrajectory traj = integrate_flow(sys, pt, t_end, dt);
  auto fs = monitored_integrals(sys);
  for (const auto& d : conservation_report(sys, traj, fs, 1e-8)) rep.add(bound("drift " + d.function, d.max_drift, 1e-8));
  double lax = 0, h = 0;
  const double h0 = hamiltonian(sys, pt);
  for (std::size_t i = 0; i < traj.points.size(); ++i) {
    lax = std::max(lax, (traj.points[i].X - lax_solution(sys, pt.X, traj.times[i])).cwiseAbs().maxCoeff());
    h = std::max(h, std::abs(hamiltonian(sys, traj.points[i]) - h0));
  }
  rep.add(bound("X(t) against Ad(exp(-t eps W)) X(0)", lax, 1e-8));
  rep.add(bound("drift H", h, 1e-10));
  return rep;
}

CertificateReport angle_checks(const MagneticSystem& sys, std::mt19937_64& rng, int samples) {
  CertificateReport rep;
  double pj = 0, pp = 0, jj = 0, udo = 0;
  for (int k = 0; k < samples; ++k) {
    PhasePoint pt = random_point(sys, rng);
    Canonicity c = canonicity(sys, pt);
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(c.phi_tilde_j.rows(), c.phi_tilde_j.cols());
    pj = std::max(pj, (c.phi_tilde_j - id).cwiseAbs().maxCoeff());
    pp = std::max(pp, std::abs(c.phi_tilde_bracket));
    jj = std::max(jj, c.j_j.cwiseAbs().maxCoeff());
    udo = std::max(udo, std::abs(c.u_dot_omega - 1.0));
  }
  rep.add(bound("{phi~_i, J_j} - delta_ij", pj, 1e-5));
  rep.add(bound("{J_i, J_j}", jj, 1e-10));
  if (sys.tag == Case::regular) {
    rep.add(bound("{phi~_1, phi~_2}", pp, 1e-5));
  } else {
    rep.add(bound("u . Omega - 1", udo, 1e-10));
  }
  return rep;
}

CertificateReport run_verify(const RunConfig& cfg) {
  MagneticSystem sys = make_system(cfg);
  std::mt19937_64 rng(cfg.seed);
  CertificateReport rep;
  rep.case_tag = case_name(sys.tag);
  rep.seed = cfg.seed;
  rep.sample_count = cfg.samples;
  if (sys.tag == Case::regular) {
    auto c = couplings(sys);
    for (std::size_t k = 0; k < c.size(); ++k)
      rep.add({"coupling c" + std::to_string(k + 1), c[k].str() + " * eps", fmt_double(c[k].to_double() * cfg.eps), 0.0,
               true, true});
  }
  rep.append(relation_checks(sys, rng, cfg.samples));
  rep.append(bracket_checks(sys, rng, cfg.samples));
  rep.append(rank_checks(sys, rng, cfg.samples));
  rep.append(flow_checks(sys, rng, cfg.t_end, cfg.dt));
  rep.append(angle_checks(sys, rng, cfg.samples));
  return rep;
}

}  // namespace suchain
