#include "khcube/sparse_matrix.hpp"

#include <algorithm>
#include <map>

#include "khcube/errors.hpp"

namespace khcube {

SparseIntMatrix SparseIntMatrix::from_triplets(int rows, int cols, std::vector<MatrixEntry> entries) {
  SparseIntMatrix m(rows, cols);
  for (const auto& e : entries)
    if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
      throw ContractViolation("matrix entry position out of range");
  std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (auto& e : entries) {
    if (!m.entries_.empty() && m.entries_.back().row == e.row && m.entries_.back().col == e.col) {
      m.entries_.back().value += e.value;
      if (m.entries_.back().value.is_zero()) m.entries_.pop_back();
    } else if (!e.value.is_zero()) {
      m.entries_.push_back(std::move(e));
    }
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<Integer>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  SparseIntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw ContractViolation("ragged dense matrix");
    for (int j = 0; j < c; ++j)
      if (!rows[i][j].is_zero()) m.entries_.push_back({i, j, rows[i][j]});
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::identity(int n) {
  SparseIntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.entries_.push_back({i, i, Integer(1)});
  return m;
}

Integer SparseIntMatrix::at(int row, int col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                             [](const MatrixEntry& e, std::pair<int, int> key) {
                               return std::pair{e.row, e.col} < key;
                             });
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return Integer(0);
}

std::vector<std::vector<Integer>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_));
  for (const auto& e : entries_) d[e.row][e.col] = e.value;
  return d;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  std::vector<MatrixEntry> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
  return from_triplets(cols_, rows_, std::move(t));
}

SparseIntMatrix SparseIntMatrix::negated() const {
  SparseIntMatrix m = *this;
  for (auto& e : m.entries_) e.value = -e.value;
  return m;
}

SparseIntMatrix SparseIntMatrix::submatrix(std::span<const int> rows, std::span<const int> cols) const {
  std::vector<int> row_pos(rows_, -1), col_pos(cols_, -1);
  for (int k = 0; k < static_cast<int>(rows.size()); ++k) row_pos[rows[k]] = k;
  for (int k = 0; k < static_cast<int>(cols.size()); ++k) col_pos[cols[k]] = k;
  std::vector<MatrixEntry> out;
  for (const auto& e : entries_)
    if (row_pos[e.row] >= 0 && col_pos[e.col] >= 0) out.push_back({row_pos[e.row], col_pos[e.col], e.value});
  return from_triplets(static_cast<int>(rows.size()), static_cast<int>(cols.size()), std::move(out));
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols_ != b.rows_) throw ContractViolation("matrix product dimension mismatch");
  std::vector<std::size_t> row_start(b.rows_ + 1, 0);
  for (const auto& e : b.entries_) ++row_start[e.row + 1];
  for (int r = 0; r < b.rows_; ++r) row_start[r + 1] += row_start[r];

  std::vector<MatrixEntry> out;
  std::map<int, Integer> acc;
  std::size_t k = 0;
  while (k < a.entries_.size()) {
    int r = a.entries_[k].row;
    acc.clear();
    for (; k < a.entries_.size() && a.entries_[k].row == r; ++k) {
      const auto& e = a.entries_[k];
      for (std::size_t j = row_start[e.col]; j < row_start[e.col + 1]; ++j)
        acc[b.entries_[j].col] += e.value * b.entries_[j].value;
    }
    for (auto& [c, v] : acc)
      if (!v.is_zero()) out.push_back({r, c, std::move(v)});
  }
  SparseIntMatrix m(a.rows_, b.cols_);
  m.entries_ = std::move(out);
  return m;
}

SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ContractViolation("matrix sum dimension mismatch");
  std::vector<MatrixEntry> all = a.entries_;
  all.insert(all.end(), b.entries_.begin(), b.entries_.end());
  return SparseIntMatrix::from_triplets(a.rows_, a.cols_, std::move(all));
}

}  // namespace khcube
