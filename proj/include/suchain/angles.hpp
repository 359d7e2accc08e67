#pragma once

#include "suchain/magnetic.hpp"

#include <array>
#include <functional>

namespace suchain {

struct AngleChart {
  Eigen::Vector3d theta;  // root phases in [0, 2pi)
  Eigen::Vector2d phi;    // torus angles in [0, 2pi)
  Eigen::MatrixXd omega;  // 2x2 regular, 2x1 irregular
};

// z_k = B(Z, E_alpha_k) up to a positive factor, Z = Ad(g^-1) xi; throws below min_modulus
Eigen::Vector3cd root_coordinates(const MagneticSystem& sys, const PhasePoint& pt);
Eigen::Vector3d root_phases(const MagneticSystem& sys, const PhasePoint& pt, double min_modulus = 1e-6);
// phi_1 = -(t1 + t3)/3, phi_2 = -(t2 + t3)/3
Eigen::Vector2d torus_angles(const MagneticSystem& sys, const PhasePoint& pt);

// Theta = [[2,-1],[-1,2],[1,1]] from the coroots, and its left inverse L
Eigen::Matrix<double, 3, 2> theta_matrix(const MagneticSystem& sys);
Eigen::Matrix<double, 2, 3> left_inverse_l();

// right torus action (g t^-1, X), t = exp(s1 H_a1 + s2 H_a2)
PhasePoint right_torus_action(const MagneticSystem& sys, const PhasePoint& pt, const Eigen::Vector2d& sigma);

// d phi along a vector field: central difference of single RK4 steps of size +-h
Eigen::Vector2d angle_rate(const MagneticSystem& sys, const PhasePoint& pt,
                           const std::function<TangentVector(const PhasePoint&)>& field, double h = 1e-5);
// d phi_j on the 2|m| basis tangent vectors (rows j)
Eigen::MatrixXd angle_covectors(const MagneticSystem& sys, const PhasePoint& pt, double h = 1e-5);

// actions: regular J2 = P*C2, J3 = P*C3; irregular pi*R
std::vector<IntegralFunction> actions(const MagneticSystem& sys);
Eigen::MatrixXd frequency_matrix(const MagneticSystem& sys, const PhasePoint& pt, double h = 1e-5);

struct Rescaling {
  Eigen::MatrixXd S;  // phi~ = S phi; Omega^-1 (regular) or Omega^T/|Omega|^2 (irregular)
  Eigen::MatrixXd omega;
};
Rescaling rescaling(const MagneticSystem& sys, const PhasePoint& pt, double h = 1e-5);
Eigen::VectorXd rescaled_angles(const MagneticSystem& sys, const PhasePoint& pt, const Rescaling& r);

struct Canonicity {
  Eigen::MatrixXd phi_tilde_j;   // {phi~_i, J_j}
  double phi_tilde_bracket = 0;  // {phi~_1, phi~_2}, regular only
  Eigen::MatrixXd j_j;           // {J_i, J_j}
  double u_dot_omega = 0;        // irregular only
};
Canonicity canonicity(const MagneticSystem& sys, const PhasePoint& pt, double h = 1e-5);

AngleChart angle_chart(const MagneticSystem& sys, const PhasePoint& pt);

}  // namespace suchain
