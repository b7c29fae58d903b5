#pragma once

// Sparse Gaussian elimination shared by the integer Smith form and the
// modular rank. Rows are sorted (col, value) lists; each column keeps a list
// of rows that may touch it, cleaned lazily.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "khcube/integer.hpp"
#include "khcube/sparse_matrix.hpp"

namespace khcube::detail {

struct IntegerOps {
  using value_type = Integer;
  static constexpr bool euclidean = true;
  value_type from(const Integer& v) const { return v; }
  bool is_zero(const value_type& v) const { return v.is_zero(); }
  bool is_unit(const value_type& v) const { return v.is_unit(); }
  // factor such that x + factor * p == 0 for a unit p
  value_type cancel(const value_type& x, const value_type& p) const { return -(x * p); }
  void axpy(value_type& y, const value_type& a, const value_type& x) const { y += a * x; }
};

struct ModOps {
  using value_type = std::uint32_t;
  static constexpr bool euclidean = false;
  std::uint32_t p;
  value_type from(const Integer& v) const { return v.mod(p); }
  bool is_zero(value_type v) const { return v == 0; }
  bool is_unit(value_type v) const { return v != 0; }
  value_type inv(value_type a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    for (; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return static_cast<value_type>(r);
  }
  value_type cancel(value_type x, value_type piv) const {
    return static_cast<value_type>((p - x) % p * std::uint64_t{inv(piv)} % p);
  }
  void axpy(value_type& y, value_type a, value_type x) const {
    y = static_cast<value_type>((y + std::uint64_t{a} * x) % p);
  }
};

template <class Ops>
class Eliminator {
 public:
  using T = typename Ops::value_type;
  struct Cell {
    int col;
    T val;
  };
  using Row = std::vector<Cell>;

  Eliminator(const SparseIntMatrix& m, Ops ops)
      : nrows_(m.rows()), ncols_(m.cols()), rows_(m.rows()), row_alive_(m.rows(), 1),
        col_alive_(m.cols(), 1), col_rows_(m.cols()), stamp_(m.rows(), -1), ops_(ops) {
    for (const auto& e : m.entries()) {
      T v = ops_.from(e.value);
      if (ops_.is_zero(v)) continue;
      rows_[e.row].push_back({e.col, std::move(v)});
      col_rows_[e.col].push_back(e.row);
    }
  }

  /// Pivot values in elimination order. For the integers their absolute values
  /// are the Smith diagonal up to the final divisibility normalization.
  std::vector<T> run() {
    unit_phase();
    if constexpr (Ops::euclidean) euclid_phase();
    return std::move(pivots_);
  }

 private:
  int nrows_, ncols_;
  std::vector<Row> rows_;
  std::vector<char> row_alive_, col_alive_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<int> stamp_;
  int stamp_counter_ = 0;
  std::vector<T> pivots_;
  Ops ops_;

  const T* find(int r, int c) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Cell& x, int k) { return x.col < k; });
    return it != row.end() && it->col == c ? &it->val : nullptr;
  }

  // Live rows of column c; also compacts the stored list.
  const std::vector<int>& live_rows(int c) {
    auto& list = col_rows_[c];
    ++stamp_counter_;
    std::size_t keep = 0;
    for (int r : list) {
      if (!row_alive_[r] || stamp_[r] == stamp_counter_ || !find(r, c)) continue;
      stamp_[r] = stamp_counter_;
      list[keep++] = r;
    }
    list.resize(keep);
    return list;
  }

  // rows_[r] += a * rows_[p]
  void add_row(int r, const T& a, int p) {
    const Row& src = rows_[p];
    Row& dst = rows_[r];
    Row out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
      if (j == src.size() || (i < dst.size() && dst[i].col < src[j].col)) {
        out.push_back(std::move(dst[i++]));
      } else if (i == dst.size() || src[j].col < dst[i].col) {
        T v{};
        ops_.axpy(v, a, src[j].val);
        if (!ops_.is_zero(v)) {
          col_rows_[src[j].col].push_back(r);
          out.push_back({src[j].col, std::move(v)});
        }
        ++j;
      } else {
        T v = std::move(dst[i].val);
        ops_.axpy(v, a, src[j].val);
        if (!ops_.is_zero(v)) out.push_back({dst[i].col, std::move(v)});
        ++i, ++j;
      }
    }
    dst = std::move(out);
  }

  void retire(int r, int c) {
    row_alive_[r] = 0;
    col_alive_[c] = 0;
    rows_[r].clear();
    rows_[r].shrink_to_fit();
  }

  void unit_phase() {
    bool progress = true;
    while (progress) {
      progress = false;
      using Key = std::pair<std::size_t, int>;
      std::priority_queue<Key, std::vector<Key>, std::greater<>> pq;
      for (int c = 0; c < ncols_; ++c)
        if (col_alive_[c] && !col_rows_[c].empty()) pq.push({col_rows_[c].size(), c});
      while (!pq.empty()) {
        auto [k, c] = pq.top();
        pq.pop();
        if (!col_alive_[c]) continue;
        const auto& live = live_rows(c);
        if (live.empty()) continue;
        if (live.size() > k) {
          pq.push({live.size(), c});
          continue;
        }
        int best = -1;
        for (int r : live) {
          if (!ops_.is_unit(*find(r, c))) continue;
          if (best < 0 || rows_[r].size() < rows_[best].size()) best = r;
        }
        if (best < 0) continue;
        T p = *find(best, c);
        std::vector<int> others(live.begin(), live.end());
        for (int r : others) {
          if (r == best) continue;
          T f = ops_.cancel(*find(r, c), p);
          add_row(r, f, best);
        }
        pivots_.push_back(p);
        retire(best, c);
        progress = true;
      }
    }
  }

  // Remaining entries have no unit in any live column; pivot on the smallest
  // magnitude and run Euclid on its row and column until it stands alone.
  void euclid_phase() {
    while (true) {
      int pr = -1, pc = -1;
      for (int r = 0; r < nrows_; ++r) {
        if (!row_alive_[r]) continue;
        for (const auto& cell : rows_[r]) {
          if (!col_alive_[cell.col]) continue;
          if (pr < 0 || Integer::compare_abs(cell.val, *find(pr, pc)) < 0 ||
              (Integer::compare_abs(cell.val, *find(pr, pc)) == 0 && rows_[r].size() < rows_[pr].size())) {
            pr = r;
            pc = cell.col;
          }
        }
      }
      if (pr < 0) return;
      reduce_pivot(pr, pc);
    }
  }

  void reduce_pivot(int pr, int pc) {
    while (true) {
      T p = *find(pr, pc);
      bool moved = false;
      std::vector<int> others(live_rows(pc));
      for (int r : others) {
        if (r == pr) continue;
        Integer q, rem;
        Integer::divmod(*find(r, pc), p, q, rem);
        if (!q.is_zero()) add_row(r, -q, pr);
        if (!rem.is_zero()) moved = true;
      }
      if (moved) {
        // every row is reduced; continue from the smallest remainder
        int best = -1;
        for (int r : live_rows(pc))
          if (r != pr && (best < 0 || Integer::compare_abs(*find(r, pc), *find(best, pc)) < 0)) best = r;
        pr = best;
        continue;
      }
      // Column pc is zero outside row pr: column operations touch only this row.
      Row& row = rows_[pr];
      Row kept;
      int next_col = -1;
      Integer next_val;
      for (auto& cell : row) {
        if (cell.col == pc) {
          kept.push_back(std::move(cell));
          continue;
        }
        Integer q, rem;
        Integer::divmod(cell.val, p, q, rem);
        if (rem.is_zero()) continue;
        if (next_col < 0 || Integer::compare_abs(rem, next_val) < 0) {
          next_col = cell.col;
          next_val = rem;
        }
        kept.push_back({cell.col, std::move(rem)});
      }
      row = std::move(kept);
      if (next_col < 0) {
        pivots_.push_back(p.abs());
        retire(pr, pc);
        return;
      }
      pc = next_col;
    }
  }
};

}  // namespace khcube::detail
