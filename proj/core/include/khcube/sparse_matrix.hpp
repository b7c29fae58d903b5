#pragma once

#include <span>
#include <vector>

#include "khcube/integer.hpp"

namespace khcube {

struct MatrixEntry {
  int row = 0;
  int col = 0;
  Integer value;
  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Integer matrix in coordinate form, kept sorted row-major with no zeros.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  /// Duplicate positions are summed; zeros are dropped.
  static SparseIntMatrix from_triplets(int rows, int cols, std::vector<MatrixEntry> entries);
  static SparseIntMatrix from_dense(const std::vector<std::vector<Integer>>& rows);
  static SparseIntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<MatrixEntry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Integer at(int row, int col) const;
  std::vector<std::vector<Integer>> to_dense() const;

  SparseIntMatrix transpose() const;
  SparseIntMatrix negated() const;
  SparseIntMatrix submatrix(std::span<const int> rows, std::span<const int> cols) const;

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

}  // namespace khcube
