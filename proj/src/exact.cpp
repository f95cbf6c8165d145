#include "parab/exact.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace parab {

bool QMat::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

QMat QMat::hcat(const QMat& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("hcat: row mismatch");
  QMat out(rows_, cols_ + other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c);
    for (int c = 0; c < other.cols_; ++c) out.at(r, cols_ + c) = other.at(r, c);
  }
  return out;
}

namespace {

// Integer matrix with the same rank as m: each row scaled by the lcm of its
// entry denominators.
std::vector<std::vector<Int>> to_int_rows(const QMat& m) {
  std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    Int scale = 1;
    for (int c = 0; c < m.cols(); ++c) {
      Int den = denominator(m.at(r, c));
      scale = lcm(scale, den);
    }
    for (int c = 0; c < m.cols(); ++c) {
      const Rat& v = m.at(r, c);
      rows[r][c] = numerator(v) * (scale / denominator(v));
    }
  }
  return rows;
}

}  // namespace

int rank_of(const QMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto a = to_int_rows(m);
  const int nrows = m.rows(), ncols = m.cols();
  int rank = 0;
  Int prev = 1;
  for (int c = 0; c < ncols && rank < nrows; ++c) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < nrows; ++r) {
      for (int j = c + 1; j < ncols; ++j) {
        Int num = a[rank][c] * a[r][j] - a[r][c] * a[rank][j];
        a[r][j] = num / prev;  // exact by Bareiss
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rat>> nullspace_of(const QMat& m) {
  const int nrows = m.rows(), ncols = m.cols();
  // Reduced row echelon form over the rationals.
  std::vector<std::vector<Rat>> a(nrows, std::vector<Rat>(ncols));
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < ncols; ++c) a[r][c] = m.at(r, c);

  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < ncols && row < nrows; ++c) {
    int pivot = -1;
    for (int r = row; r < nrows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[row], a[pivot]);
    Rat inv = a[row][c];
    for (int j = c; j < ncols; ++j) a[row][j] /= inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rat f = a[r][c];
      for (int j = c; j < ncols; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[free] = 1;
    for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

int dim_sum(const QMat& a, const QMat& b) { return rank_of(a.hcat(b)); }

int dim_intersection(const QMat& a, const QMat& b) {
  return rank_of(a) + rank_of(b) - rank_of(a.hcat(b));
}

void SparseQMat::compress() {
  for (auto& col : cols_data_) {
    if (col.empty()) continue;
    std::sort(col.begin(), col.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<int, Rat>> out;
    for (auto& e : col) {
      if (!out.empty() && out.back().first == e.first)
        out.back().second += e.second;
      else
        out.push_back(e);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& e) { return e.second == 0; }),
              out.end());
    col = std::move(out);
  }
}

bool SparseQMat::is_zero() const {
  for (const auto& col : cols_data_)
    for (const auto& e : col)
      if (e.second != 0) return false;
  return true;
}

std::vector<std::pair<int, Rat>> SparseQMat::apply(
    const std::vector<std::pair<int, Rat>>& x) const {
  std::map<int, Rat> acc;
  for (const auto& [c, xv] : x)
    for (const auto& [r, av] : cols_data_[c]) acc[r] += av * xv;
  std::vector<std::pair<int, Rat>> out;
  for (auto& [r, v] : acc)
    if (v != 0) out.emplace_back(r, v);
  return out;
}

SparseQMat SparseQMat::multiply(const SparseQMat& other) const {
  if (cols_ != other.rows()) throw std::invalid_argument("multiply: shape mismatch");
  SparseQMat out(rows_, other.cols());
  for (int c = 0; c < other.cols(); ++c) {
    auto col = apply(other.column(c));
    for (auto& [r, v] : col) out.add(r, c, v);
  }
  out.compress();
  return out;
}

QMat SparseQMat::block(const std::vector<int>& row_ids, const std::vector<int>& col_ids) const {
  std::map<int, int> row_pos;
  for (size_t k = 0; k < row_ids.size(); ++k) row_pos[row_ids[k]] = int(k);
  QMat out(int(row_ids.size()), int(col_ids.size()));
  for (size_t k = 0; k < col_ids.size(); ++k) {
    for (const auto& [r, v] : cols_data_[col_ids[k]]) {
      auto it = row_pos.find(r);
      if (it != row_pos.end()) out.at(it->second, int(k)) = v;
    }
  }
  return out;
}

}  // namespace parab
