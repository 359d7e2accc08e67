#pragma once

#include "suchain/invariants.hpp"
#include "suchain/system.hpp"

#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace suchain {

// (g, X) in left trivialization; X holds components over sys.sub.m_indices
struct PhasePoint {
  Eigen::MatrixXcd g;
  Eigen::VectorXd X;
};

// g_*(v, w - 1/2 [v,X]_m): delta g = g v, delta X = w - 1/2 [v,X]_m
struct TangentVector {
  Eigen::VectorXd v, w;
};

struct FlowTrajectory {
  std::vector<double> times;
  std::vector<PhasePoint> points;
  double dt = 0.0;
  std::string integrator = "rk4";
};

// m-vector <-> full component vector
Eigen::VectorXd embed_m(const MagneticSystem& sys, const Eigen::VectorXd& x);
Eigen::VectorXd restrict_m(const MagneticSystem& sys, const Eigen::VectorXd& full);

// algebra-element components
Eigen::VectorXd moment_map(const MagneticSystem& sys, const PhasePoint& pt);
Eigen::VectorXd slice_map(const MagneticSystem& sys, const PhasePoint& pt);
// pairing coordinates x_i = B(., e_i) of an element given by components
Eigen::VectorXd coords(const LieAlgebra& alg, const Eigen::VectorXd& comps);

TangentVector hvf_moment(const MagneticSystem& sys, const PhasePoint& pt, const Eigen::VectorXd& eta);
TangentVector hvf_slice(const MagneticSystem& sys, const PhasePoint& pt, const Polynomial& theta);

// B(w1,v2) - B(w2,v1) + eps B(W,[v1,v2])
double magform(const MagneticSystem& sys, const TangentVector& a, const TangentVector& b);

// moves along a tangent vector to first order: (g exp(s v), X + s(w - 1/2[v,X]_m))
PhasePoint move(const MagneticSystem& sys, const PhasePoint& pt, const TangentVector& t, double s);
TangentVector basis_tangent(const MagneticSystem& sys, int k);  // k < 2|m|

// functions on the phase space pulled back through P or pi_m, closed under
// sums, products and scalar multiples
class IntegralFunction {
public:
  enum class Kind { moment, slice, sum, product, scaled };

  static IntegralFunction moment(Polynomial p, std::string name = {});
  static IntegralFunction slice(const MagneticSystem& sys, Polynomial theta, std::string name = {});
  friend IntegralFunction operator+(const IntegralFunction& a, const IntegralFunction& b);
  friend IntegralFunction operator*(const IntegralFunction& a, const IntegralFunction& b);
  friend IntegralFunction operator*(double c, const IntegralFunction& a);

  Kind kind() const { return kind_; }
  const Polynomial& poly() const { return poly_; }
  const std::string& name() const { return name_; }
  IntegralFunction named(std::string n) const;
  // false for a slice function that is not A-invariant
  bool invariant() const;

  double value(const MagneticSystem& sys, const PhasePoint& pt) const;
  TangentVector field(const MagneticSystem& sys, const PhasePoint& pt) const;
  // df(V) from the differentials of P and pi_m, no symplectic form involved
  double differential(const MagneticSystem& sys, const PhasePoint& pt, const TangentVector& t) const;

private:
  Kind kind_ = Kind::moment;
  Polynomial poly_;
  double scale_ = 1.0;
  bool invariant_ = true;
  std::string name_;
  std::vector<std::shared_ptr<const IntegralFunction>> parts_;
};

// {f,h} = Omega(X_h, X_f) = df(X_h)
double twisted_bracket(const MagneticSystem& sys, const IntegralFunction& f, const IntegralFunction& h,
                       const PhasePoint& pt);

// symbolic shortcut for slice functions: -B(xi, [(grad t1)_m, (grad t2)_m]) with symbolic eps
Polynomial slice_bracket(const MagneticSystem& sys, const Polynomial& t1, const Polynomial& t2);

// differential of an arbitrary function along the 2|m| basis tangent vectors
Eigen::VectorXd numeric_differential(const MagneticSystem& sys, const PhasePoint& pt,
                                     const std::function<double(const PhasePoint&)>& f, double h = 1e-6);
Eigen::MatrixXd magform_matrix(const MagneticSystem& sys, const PhasePoint& pt);
// Hamiltonian field from Omega(V, X_f) = df(V), as coefficients on basis_tangent
Eigen::VectorXd numeric_hvf(const MagneticSystem& sys, const PhasePoint& pt,
                            const std::function<double(const PhasePoint&)>& f, double h = 1e-6);
TangentVector from_coefficients(const MagneticSystem& sys, const Eigen::VectorXd& c);
Eigen::VectorXd to_coefficients(const TangentVector& t);

// RK4 along a tangent vector field, g reprojected to SU(3) after each step
PhasePoint flow_field(const MagneticSystem& sys, const PhasePoint& pt,
                      const std::function<TangentVector(const PhasePoint&)>& field, double s, int steps);

// magnetic geodesic flow g' = gX, X' = -eps[W,X]
FlowTrajectory integrate_flow(const MagneticSystem& sys, const PhasePoint& pt0, double t_end, double dt,
                              int record_every = 1);
// X(t) = Ad(exp(-t eps W)) X(0)
Eigen::VectorXd lax_solution(const MagneticSystem& sys, const Eigen::VectorXd& x0, double t);
double hamiltonian(const MagneticSystem& sys, const PhasePoint& pt);

struct DriftEntry {
  std::string function;
  double initial = 0.0;
  double max_drift = 0.0;
  bool pass = false;
};
std::vector<DriftEntry> conservation_report(const MagneticSystem& sys, const FlowTrajectory& traj,
                                            const std::vector<IntegralFunction>& functions, double tol = 1e-8);

// the case's full integral list: P_1..P_8 then slice generators
std::vector<IntegralFunction> monitored_integrals(const MagneticSystem& sys);
// slice generators: regular u1,u2,u3,v,w; irregular R
std::vector<IntegralFunction> slice_generators(const MagneticSystem& sys);
std::vector<IntegralFunction> moment_coordinates(const MagneticSystem& sys);

// exports
std::string trajectory_csv(const MagneticSystem& sys, const FlowTrajectory& traj,
                           const std::vector<IntegralFunction>& functions);
std::string conservation_json(const std::vector<DriftEntry>& report);

// sampling
Eigen::MatrixXcd random_special_unitary(std::mt19937_64& rng);
// resamples until the point lies on the regular locus of the case
PhasePoint random_point(const MagneticSystem& sys, std::mt19937_64& rng);
bool on_regular_locus(const MagneticSystem& sys, const PhasePoint& pt);

}  // namespace suchain

namespace suchain {

// z_k = B(xi, E_{-alpha_k}) as complex linear polynomials in the pairing coordinates
std::vector<CPoly> root_coordinate_polys(const LieAlgebra& alg);
// u_k = |z_k|^2, v + i w = z_1 z_2 conj(z_3)
std::vector<Polynomial> regular_slice_polys(const LieAlgebra& alg);
// R = sum over m of x_k^2
Polynomial irregular_slice_poly(const MagneticSystem& sys);

}  // namespace suchain
