#pragma once

#include "suchain/lie.hpp"
#include "suchain/poly.hpp"

namespace suchain {

// Lie-Poisson bracket sum C_ij^k x_k d_i p d_j q. Variables past the algebra
// labels (e.g. eps) are treated as parameters.
Polynomial lie_poisson_bracket(const Polynomial& p, const Polynomial& q, const LieAlgebra& alg);

// B-gradient in basis components. With pairing coordinates this is the vector
// of partial derivatives.
PolyVector b_gradient(const Polynomial& p, const LieAlgebra& alg);

Eigen::VectorXd evaluate(const PolyVector& v, const Eigen::VectorXd& point);

// coordinate functions x_i = B(., e_i) as polynomials
Polynomial coordinate(const LieAlgebra& alg, int i);

}  // namespace suchain
