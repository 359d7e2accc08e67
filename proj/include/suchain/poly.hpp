#pragma once

#include "suchain/scalar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace suchain {

constexpr int kMaxVars = 10;
constexpr int kDegreeCap = 8;

using Exponents = std::array<std::uint8_t, kMaxVars>;

// graded lex, larger monomial first
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

int total_degree(const Exponents& e);

using VarNames = std::shared_ptr<const std::vector<std::string>>;
VarNames make_vars(std::vector<std::string> names);

class Polynomial {
public:
  using Terms = std::map<Exponents, Q3, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(VarNames vars) : vars_(std::move(vars)) {}
  static Polynomial constant(VarNames vars, const Q3& c);
  static Polynomial variable(VarNames vars, int i);

  const VarNames& vars() const { return vars_; }
  int nvars() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  bool is_homogeneous() const;
  Q3 coeff(const Exponents& e) const;

  void add_term(const Exponents& e, const Q3& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Q3& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Q3& c) { return a *= c; }
  friend Polynomial operator*(const Q3& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(int k) const;
  Polynomial derivative(int i) const;
  // replace variable i by subs[i] (all substitutes share one variable set)
  Polynomial substitute(const std::vector<Polynomial>& subs) const;
  // same terms, re-labelled onto a variable set with identical leading names
  Polynomial rebind(VarNames vars) const;

  Q3 evaluate(const VectorQ& point) const;
  double evaluate(const Eigen::VectorXd& point) const;

  // canonical text "c * x1^2 x3 + ..."
  std::string str() const;
  static Polynomial parse(const std::string& text, VarNames vars);

private:
  void check_compatible(const Polynomial& o) const;
  VarNames vars_;
  Terms terms_;
};

std::vector<std::pair<int, Polynomial>> homogeneous_components(const Polynomial& p);

// polynomial map g* -> g, component i along basis element i
using PolyVector = std::vector<Polynomial>;

// exact complex polynomial, used to expand traces of matrix products
struct CPoly {
  Polynomial re, im;
  friend CPoly operator+(const CPoly& a, const CPoly& b) { return {a.re + b.re, a.im + b.im}; }
  friend CPoly operator-(const CPoly& a, const CPoly& b) { return {a.re - b.re, a.im - b.im}; }
  friend CPoly operator*(const CPoly& a, const CPoly& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  CPoly conj() const { return {re, -im}; }
};

}  // namespace suchain
