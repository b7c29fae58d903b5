#include <algorithm>

#include "khcube/errors.hpp"
#include "khcube/homalg.hpp"
#include "sparse_elim.hpp"

namespace khcube {

namespace {

// Turns a list of nonzero pivots into invariant factors d1 | d2 | ...
std::vector<Integer> divisibility_chain(std::vector<Integer> d) {
  for (auto& x : d) x = x.abs();
  auto units = std::stable_partition(d.begin(), d.end(), [](const Integer& x) { return x.is_unit(); });
  std::size_t first = units - d.begin();
  for (std::size_t i = first; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g = Integer::gcd(d[i], d[j]);
      if (g == d[i]) continue;
      Integer l = Integer::exact_div(d[i], g) * d[j];
      d[i] = std::move(g);
      d[j] = std::move(l);
    }
  std::sort(d.begin() + first, d.end());
  return d;
}

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& m) {
  detail::Eliminator<detail::IntegerOps> elim(m, {});
  SnfResult r;
  r.diagonal = divisibility_chain(elim.run());
  r.rank = static_cast<int>(r.diagonal.size());
  return r;
}

int rank_over(const SparseIntMatrix& m, const Ring& ring) {
  if (ring.kind == Ring::Kind::Fp) {
    detail::Eliminator<detail::ModOps> elim(m, detail::ModOps{ring.p});
    return static_cast<int>(elim.run().size());
  }
  detail::Eliminator<detail::IntegerOps> elim(m, {});
  return static_cast<int>(elim.run().size());
}

DenseSnf smith_with_transforms(const SparseIntMatrix& m, int max_dim) {
  const int R = m.rows(), C = m.cols();
  if (R > max_dim || C > max_dim) throw ResourceError("dense Smith form is capped at " + std::to_string(max_dim) + " rows and columns");
  DenseSnf out;
  auto& A = out.D;
  A = m.to_dense();
  auto identity = [](int n) {
    std::vector<std::vector<Integer>> I(n, std::vector<Integer>(n));
    for (int i = 0; i < n; ++i) I[i][i] = 1;
    return I;
  };
  out.U = identity(R);
  out.V = identity(C);
  auto& U = out.U;
  auto& V = out.V;

  auto row_axpy = [&](int dst, const Integer& a, int src) {  // row dst += a * row src
    for (int j = 0; j < C; ++j) A[dst][j] += a * A[src][j];
    for (int j = 0; j < R; ++j) U[dst][j] += a * U[src][j];
  };
  auto col_axpy = [&](int dst, const Integer& a, int src) {
    for (int i = 0; i < R; ++i) A[i][dst] += a * A[i][src];
    for (int i = 0; i < C; ++i) V[i][dst] += a * V[i][src];
  };
  auto swap_rows = [&](int a, int b) {
    std::swap(A[a], A[b]);
    std::swap(U[a], U[b]);
  };
  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < R; ++i) std::swap(A[i][a], A[i][b]);
    for (int i = 0; i < C; ++i) std::swap(V[i][a], V[i][b]);
  };

  for (int t = 0; t < std::min(R, C); ++t) {
    int pi = -1, pj = -1;
    for (int i = t; i < R; ++i)
      for (int j = t; j < C; ++j)
        if (!A[i][j].is_zero() && (pi < 0 || Integer::compare_abs(A[i][j], A[pi][pj]) < 0)) pi = i, pj = j;
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    while (true) {
      bool dirty = false;
      for (int i = t + 1; i < R; ++i) {
        if (A[i][t].is_zero()) continue;
        Integer q, r;
        Integer::divmod(A[i][t], A[t][t], q, r);
        row_axpy(i, -q, t);
        if (!r.is_zero()) dirty = true;
      }
      if (dirty) {
        int best = t;
        for (int i = t + 1; i < R; ++i)
          if (!A[i][t].is_zero() && Integer::compare_abs(A[i][t], A[best][t]) < 0) best = i;
        swap_rows(t, best);
        continue;
      }
      for (int j = t + 1; j < C; ++j) {
        if (A[t][j].is_zero()) continue;
        Integer q, r;
        Integer::divmod(A[t][j], A[t][t], q, r);
        col_axpy(j, -q, t);
        if (!r.is_zero()) dirty = true;
      }
      if (dirty) {
        int best = t;
        for (int j = t + 1; j < C; ++j)
          if (!A[t][j].is_zero() && Integer::compare_abs(A[t][j], A[t][best]) < 0) best = j;
        swap_cols(t, best);
        continue;
      }
      int bad = -1;
      for (int i = t + 1; i < R && bad < 0; ++i)
        for (int j = t + 1; j < C; ++j) {
          Integer q, r;
          Integer::divmod(A[i][j], A[t][t], q, r);
          if (!r.is_zero()) {
            bad = i;
            break;
          }
        }
      if (bad < 0) break;
      row_axpy(t, Integer(1), bad);
    }
    if (A[t][t].sign() < 0) {
      for (int j = 0; j < C; ++j) A[t][j] = -A[t][j];
      for (int j = 0; j < R; ++j) U[t][j] = -U[t][j];
    }
    out.diagonal.push_back(A[t][t]);
  }
  return out;
}

std::vector<Integer> prime_power_decomposition(const Integer& n) {
  if (n.sign() <= 0) throw ContractViolation("prime power decomposition needs a positive integer");
  std::vector<Integer> out;
  mpz_class x = n.to_mpz();
  for (unsigned long p = 2; p < 100000 && x > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(x.get_mpz_t(), p) == 0) continue;
    mpz_class pk = 1;
    while (mpz_divisible_ui_p(x.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), p);
      pk *= p;
    }
    out.push_back(Integer(pk));
  }
  // Whatever survives trial division is either a prime (power) or a composite
  // with only large factors; the latter is kept whole.
  if (x > 1) out.push_back(Integer(x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace khcube
