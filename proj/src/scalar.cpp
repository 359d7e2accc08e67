#include "suchain/scalar.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace suchain {

namespace {
const double kRoot3 = std::sqrt(3.0);
}

double Q3::to_double() const { return a_.get_d() + b_.get_d() * kRoot3; }

Q3& Q3::operator*=(const Q3& o) {
  mpq_class a = a_ * o.a_ + 3 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

Q3 Q3::inverse() const {
  // (a + b r)^-1 = (a - b r) / (a^2 - 3 b^2); the norm is nonzero since sqrt3 is irrational
  mpq_class n = a_ * a_ - 3 * b_ * b_;
  if (sgn(n) == 0) throw std::domain_error("Q3: division by zero");
  return Q3(a_ / n, -b_ / n);
}

Q3& Q3::operator/=(const Q3& o) { return *this *= o.inverse(); }

int Q3::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt3 have opposite signs; compare a^2 with 3 b^2
  int c = cmp(a_ * a_, 3 * b_ * b_);
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

std::string Q3::str() const {
  if (sgn(b_) == 0) return a_.get_str();
  return "(" + a_.get_str() + ")+(" + b_.get_str() + ")√3";
}

Q3 Q3::parse(const std::string& s) {
  auto rat = [](const std::string& t) {
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + t);
    q.canonicalize();
    return q;
  };
  if (!s.empty() && s.front() == '(') {
    auto close1 = s.find(')');
    auto open2 = s.find("+(", close1);
    auto close2 = s.find(')', open2 + 2);
    if (close1 == std::string::npos || open2 != close1 + 1 || close2 == std::string::npos ||
        s.substr(close2 + 1) != "√3")
      throw std::invalid_argument("bad Q(sqrt3) literal: " + s);
    return Q3(rat(s.substr(1, close1 - 1)), rat(s.substr(open2 + 2, close2 - open2 - 2)));
  }
  return Q3(rat(s));
}

std::ostream& operator<<(std::ostream& os, const Q3& x) { return os << x.str(); }

Eigen::MatrixXd to_double(const MatrixQ& m) {
  Eigen::MatrixXd r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_double();
  return r;
}

Eigen::VectorXd to_double(const VectorQ& v) {
  Eigen::VectorXd r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = v(i).to_double();
  return r;
}

}  // namespace suchain
