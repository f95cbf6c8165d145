#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace parab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense matrix of exact rationals. Row-major, sized at construction.
class QMat {
public:
  QMat() = default;
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

  bool is_zero() const;

  /// Horizontal concatenation [this | other]; row counts must agree.
  QMat hcat(const QMat& other) const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

/// Rank by fraction-free (Bareiss) elimination. Rows are scaled to a common
/// integer denominator first; all divisions in the sweep are exact.
int rank_of(const QMat& m);

/// Basis of the right nullspace {x : m x = 0}, as columns.
std::vector<std::vector<Rat>> nullspace_of(const QMat& m);

/// dim(colspace(a) + colspace(b)); row counts must agree.
int dim_sum(const QMat& a, const QMat& b);

/// dim(colspace(a) ∩ colspace(b)); row counts must agree.
int dim_intersection(const QMat& a, const QMat& b);

/// Sparse column-major matrix of exact rationals.
class SparseQMat {
public:
  SparseQMat() = default;
  SparseQMat(int rows, int cols) : rows_(rows), cols_(cols), cols_data_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int r, int c, const Rat& v) {
    if (v != 0) cols_data_[c].emplace_back(r, v);
  }

  const std::vector<std::pair<int, Rat>>& column(int c) const { return cols_data_[c]; }

  /// Collapses duplicate row entries within each column.
  void compress();

  bool is_zero() const;

  /// y = this * x for a sparse vector x given as (index, value) pairs.
  std::vector<std::pair<int, Rat>> apply(const std::vector<std::pair<int, Rat>>& x) const;

  /// this * other (both compressed).
  SparseQMat multiply(const SparseQMat& other) const;

  /// Dense block with the given row/column index subsets.
  QMat block(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<std::pair<int, Rat>>> cols_data_;
};

}  // namespace parab
