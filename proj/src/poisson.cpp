#include "suchain/poisson.hpp"

#include <stdexcept>

namespace suchain {

namespace {

void check_vars(const Polynomial& p, const LieAlgebra& alg) {
  if (!p.vars()) return;
  const auto& names = *p.vars();
  if (names.size() < alg.labels.size()) throw std::invalid_argument("polynomial is not over the algebra coordinates");
  for (std::size_t i = 0; i < alg.labels.size(); ++i)
    if (names[i] != alg.labels[i]) throw std::invalid_argument("polynomial is not over the algebra coordinates");
}

}  // namespace

Polynomial lie_poisson_bracket(const Polynomial& p, const Polynomial& q, const LieAlgebra& alg) {
  check_vars(p, alg);
  check_vars(q, alg);
  VarNames vars = p.vars() ? p.vars() : q.vars();
  if (p.vars() && q.vars() && *p.vars() != *q.vars()) throw std::invalid_argument("bracket: variable mismatch");
  if (!vars) return Polynomial(alg.vars);
  const bool same = vars == alg.vars || *vars == *alg.vars;
  std::vector<Polynomial> dp(alg.dim), dq(alg.dim);
  for (int i = 0; i < alg.dim; ++i) {
    dp[i] = p.vars() ? p.derivative(i) : Polynomial(vars);
    dq[i] = q.vars() ? q.derivative(i) : Polynomial(vars);
  }
  Polynomial r(vars);
  for (int i = 0; i < alg.dim; ++i) {
    if (dp[i].is_zero()) continue;
    for (int j = 0; j < alg.dim; ++j) {
      if (dq[j].is_zero()) continue;
      const Polynomial& a = alg.ad_linear[i * alg.dim + j];
      if (a.is_zero()) continue;
      r += (same ? a : a.rebind(vars)) * (dp[i] * dq[j]);
    }
  }
  return r;
}

PolyVector b_gradient(const Polynomial& p, const LieAlgebra& alg) {
  check_vars(p, alg);
  PolyVector g;
  for (int i = 0; i < alg.dim; ++i) g.push_back(p.derivative(i));
  return g;
}

Eigen::VectorXd evaluate(const PolyVector& v, const Eigen::VectorXd& point) {
  Eigen::VectorXd r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r(i) = v[i].evaluate(point);
  return r;
}

Polynomial coordinate(const LieAlgebra& alg, int i) { return Polynomial::variable(alg.vars, i); }

}  // namespace suchain
