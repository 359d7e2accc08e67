#pragma once

#include <gmpxx.h>
#include <Eigen/Core>

#include <complex>
#include <iosfwd>
#include <string>

namespace suchain {

// Element a + b*sqrt(3) of Q(sqrt3).
class Q3 {
public:
  Q3() : a_(0), b_(0) {}
  Q3(long v) : a_(v), b_(0) {}
  Q3(int v) : a_(v), b_(0) {}
  Q3(const mpq_class& a) : a_(a), b_(0) { a_.canonicalize(); }
  Q3(const mpq_class& a, const mpq_class& b) : a_(a), b_(b) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static Q3 frac(long p, long q) { return Q3(mpq_class(p, q)); }
  static Q3 sqrt3(const mpq_class& c = 1) { return Q3(0, c); }

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& root3_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  double to_double() const;

  Q3 operator-() const { return Q3(-a_, -b_); }
  Q3& operator+=(const Q3& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Q3& operator-=(const Q3& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  Q3& operator*=(const Q3& o);
  Q3& operator/=(const Q3& o);
  Q3 inverse() const;

  friend Q3 operator+(Q3 x, const Q3& y) { return x += y; }
  friend Q3 operator-(Q3 x, const Q3& y) { return x -= y; }
  friend Q3 operator*(Q3 x, const Q3& y) { return x *= y; }
  friend Q3 operator/(Q3 x, const Q3& y) { return x /= y; }
  friend bool operator==(const Q3& x, const Q3& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const Q3& x, const Q3& y) { return !(x == y); }
  // order by value, used only by Eigen and for sign tests
  friend bool operator<(const Q3& x, const Q3& y) { return (y - x).sign() > 0; }
  friend bool operator>(const Q3& x, const Q3& y) { return y < x; }
  friend bool operator<=(const Q3& x, const Q3& y) { return !(y < x); }
  friend bool operator>=(const Q3& x, const Q3& y) { return !(x < y); }

  int sign() const;

  // "p/q" or "(p/q)+(r/s)√3"
  std::string str() const;
  static Q3 parse(const std::string& s);

private:
  mpq_class a_, b_;
};

std::ostream& operator<<(std::ostream& os, const Q3& x);

inline Q3 abs(const Q3& x) { return x.sign() < 0 ? -x : x; }

// exact complex number over Q(sqrt3), used for matrix representations
struct CQ3 {
  Q3 re, im;
  CQ3() = default;
  CQ3(Q3 r, Q3 i = Q3()) : re(std::move(r)), im(std::move(i)) {}
  friend CQ3 operator+(const CQ3& x, const CQ3& y) { return {x.re + y.re, x.im + y.im}; }
  friend CQ3 operator-(const CQ3& x, const CQ3& y) { return {x.re - y.re, x.im - y.im}; }
  friend CQ3 operator*(const CQ3& x, const CQ3& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  CQ3 conj() const { return {re, -im}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

}  // namespace suchain

namespace Eigen {
template <>
struct NumTraits<suchain::Q3> : GenericNumTraits<suchain::Q3> {
  using Real = suchain::Q3;
  using NonInteger = suchain::Q3;
  using Nested = suchain::Q3;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace suchain {
using MatrixQ = Eigen::Matrix<Q3, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Q3, Eigen::Dynamic, 1>;

Eigen::MatrixXd to_double(const MatrixQ& m);
Eigen::VectorXd to_double(const VectorQ& v);
}  // namespace suchain
