#include "suchain/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace suchain {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

int total_degree(const Exponents& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

VarNames make_vars(std::vector<std::string> names) {
  if (names.size() > static_cast<std::size_t>(kMaxVars)) throw std::length_error("too many variables");
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

Polynomial Polynomial::constant(VarNames vars, const Q3& c) {
  Polynomial p(std::move(vars));
  p.add_term(Exponents{}, c);
  return p;
}

Polynomial Polynomial::variable(VarNames vars, int i) {
  Polynomial p(std::move(vars));
  Exponents e{};
  e[i] = 1;
  p.add_term(e, Q3(1));
  return p;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = degree();
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

Q3 Polynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Q3(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Q3& c) {
  if (c.is_zero()) return;
  if (total_degree(e) > kDegreeCap) throw std::length_error("polynomial degree cap exceeded");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (vars_ == o.vars_ || !o.vars_) return;
  if (!vars_ || *vars_ != *o.vars_) throw std::invalid_argument("polynomial variable mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  if (!vars_) vars_ = o.vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  if (!vars_) vars_ = o.vars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Q3& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial r(a.vars_ ? a.vars_ : b.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int i = 0; i < kMaxVars; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) { return (a - b).is_zero(); }

Polynomial Polynomial::pow(int k) const {
  Polynomial r = constant(vars_, Q3(1));
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::derivative(int i) const {
  Polynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents f = e;
    --f[i];
    r.add_term(f, c * Q3(static_cast<long>(e[i])));
  }
  return r;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& subs) const {
  if (static_cast<int>(subs.size()) != nvars()) throw std::invalid_argument("substitute: size mismatch");
  VarNames target = subs.empty() ? vars_ : subs.front().vars();
  Polynomial r(target);
  // cache powers per variable
  std::vector<std::vector<Polynomial>> powers(subs.size());
  for (const auto& [e, c] : terms_) {
    Polynomial t = constant(target, c);
    for (int i = 0; i < nvars(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, Q3(1)));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * subs[i]);
      t = t * pw[e[i]];
    }
    r += t;
  }
  return r;
}

Polynomial Polynomial::rebind(VarNames vars) const {
  Polynomial r(vars);
  for (const auto& [e, c] : terms_) {
    for (int i = static_cast<int>(vars->size()); i < kMaxVars; ++i)
      if (e[i]) throw std::invalid_argument("rebind: variable dropped with nonzero exponent");
    r.add_term(e, c);
  }
  return r;
}

Q3 Polynomial::evaluate(const VectorQ& point) const {
  if (point.size() != nvars()) throw std::invalid_argument("evaluate: point length mismatch");
  Q3 s(0);
  for (const auto& [e, c] : terms_) {
    Q3 t = c;
    for (int i = 0; i < nvars(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point(i);
    s += t;
  }
  return s;
}

double Polynomial::evaluate(const Eigen::VectorXd& point) const {
  if (point.size() != nvars()) throw std::invalid_argument("evaluate: point length mismatch");
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (int i = 0; i < nvars(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point(i);
    s += t;
  }
  return s;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    bool any = false;
    for (int i = 0; i < nvars(); ++i) {
      if (e[i] == 0) continue;
      os << (any ? " " : " * ") << (*vars_)[i];
      if (e[i] > 1) os << '^' << static_cast<int>(e[i]);
      any = true;
    }
  }
  return os.str();
}

Polynomial Polynomial::parse(const std::string& text, VarNames vars) {
  Polynomial p(vars);
  if (text == "0") return p;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(" + ", pos);
    std::string term = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? text.size() : next + 3;
    std::size_t star = term.find(" * ");
    Q3 c = Q3::parse(term.substr(0, star));
    Exponents e{};
    if (star != std::string::npos) {
      std::istringstream is(term.substr(star + 3));
      std::string f;
      while (is >> f) {
        auto caret = f.find('^');
        std::string name = f.substr(0, caret);
        int k = caret == std::string::npos ? 1 : std::stoi(f.substr(caret + 1));
        auto it = std::find(vars->begin(), vars->end(), name);
        if (it == vars->end()) throw std::invalid_argument("unknown variable: " + name);
        e[it - vars->begin()] = static_cast<std::uint8_t>(e[it - vars->begin()] + k);
      }
    }
    p.add_term(e, c);
  }
  return p;
}

std::vector<std::pair<int, Polynomial>> homogeneous_components(const Polynomial& p) {
  std::map<int, Polynomial, std::greater<int>> parts;
  for (const auto& [e, c] : p.terms()) {
    int d = total_degree(e);
    auto it = parts.find(d);
    if (it == parts.end()) it = parts.emplace(d, Polynomial(p.vars())).first;
    it->second.add_term(e, c);
  }
  return {parts.begin(), parts.end()};
}

}  // namespace suchain
