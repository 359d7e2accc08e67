#include "suchain/linalg.hpp"

#include <Eigen/SVD>

namespace suchain {

namespace {

void axpy(SparseRowQ& r, const Q3& a, const SparseRowQ& p) {
  for (const auto& [c, v] : p) {
    auto it = r.find(c);
    if (it == r.end()) {
      r.emplace(c, -(a * v));
    } else {
      it->second -= a * v;
      if (it->second.is_zero()) r.erase(it);
    }
  }
}

}  // namespace

SparseRowQ EchelonQ::reduce(SparseRowQ row) const {
  // pivot rows only touch columns >= their pivot, so an ascending sweep terminates
  auto it = row.begin();
  while (it != row.end()) {
    auto pit = pivots_.find(it->first);
    if (pit == pivots_.end()) {
      ++it;
      continue;
    }
    int c = it->first;
    Q3 a = it->second;
    axpy(row, a, pit->second);
    it = row.upper_bound(c);
  }
  return row;
}

bool EchelonQ::add(SparseRowQ row) {
  for (auto it = row.begin(); it != row.end();)
    it = it->second.is_zero() ? row.erase(it) : std::next(it);
  // full reduction against pivots, then the leading free column becomes a pivot
  row = reduce(std::move(row));
  if (row.empty()) return false;
  int lead = row.begin()->first;
  Q3 inv = row.begin()->second.inverse();
  for (auto& [c, v] : row) v *= inv;
  pivots_.emplace(lead, std::move(row));
  return true;
}

std::vector<VectorQ> EchelonQ::nullspace() const {
  // back substitution to reduced form
  std::map<int, SparseRowQ> red;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseRowQ r = it->second;
    for (auto jt = r.upper_bound(it->first); jt != r.end();) {
      auto pit = red.find(jt->first);
      if (pit == red.end()) {
        ++jt;
        continue;
      }
      int c = jt->first;
      Q3 a = jt->second;
      axpy(r, a, pit->second);
      jt = r.upper_bound(c);
    }
    red.emplace(it->first, std::move(r));
  }
  std::vector<VectorQ> out;
  for (int f = 0; f < ncols_; ++f) {
    if (red.count(f)) continue;
    VectorQ v = VectorQ::Constant(ncols_, Q3(0));
    v(f) = Q3(1);
    for (const auto& [pc, r] : red) {
      auto it = r.find(f);
      if (it != r.end()) v(pc) = -it->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<VectorQ> nullspace(const MatrixQ& m) {
  EchelonQ e(static_cast<int>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    SparseRowQ r;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r.emplace(static_cast<int>(j), m(i, j));
    e.add(std::move(r));
  }
  return e.nullspace();
}

int rank(const MatrixQ& m) { return static_cast<int>(m.cols()) - static_cast<int>(nullspace(m).size()); }

int numeric_rank(const Eigen::MatrixXd& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

Eigen::MatrixXd numeric_nullspace(const Eigen::MatrixXd& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double smax = s.size() ? s(0) : 0.0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * smax && smax > 0) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

}  // namespace suchain
