#pragma once

#include "suchain/scalar.hpp"

#include <map>
#include <vector>

namespace suchain {

using SparseRowQ = std::map<int, Q3>;

// Incremental row echelon form over Q(sqrt3). Rows are added one at a time;
// pivots are kept normalized to 1.
class EchelonQ {
public:
  explicit EchelonQ(int ncols) : ncols_(ncols) {}
  // returns true if the row was independent of the rows seen so far
  bool add(SparseRowQ row);
  // reduce a row against the current pivots (result has no pivot columns)
  SparseRowQ reduce(SparseRowQ row) const;
  int rank() const { return static_cast<int>(pivots_.size()); }
  int cols() const { return ncols_; }
  // basis of the right nullspace, one vector per free column in ascending order
  std::vector<VectorQ> nullspace() const;
  const std::map<int, SparseRowQ>& pivots() const { return pivots_; }

private:
  int ncols_;
  std::map<int, SparseRowQ> pivots_;  // pivot column -> row with leading 1
};

std::vector<VectorQ> nullspace(const MatrixQ& m);
int rank(const MatrixQ& m);

// numeric rank: singular values above tol * largest
int numeric_rank(const Eigen::MatrixXd& m, double tol = 1e-10);
Eigen::MatrixXd numeric_nullspace(const Eigen::MatrixXd& m, double tol = 1e-10);

}  // namespace suchain
