#include "khcube/chain_complex.hpp"

#include <string>

#include "khcube/errors.hpp"
#include "khcube/homalg.hpp"

namespace khcube {

namespace {

void append_shifted(std::vector<MatrixEntry>& out, const SparseIntMatrix& m, int row0, int col0,
                    int sign = 1) {
  for (const auto& e : m.entries()) out.push_back({e.row + row0, e.col + col0, sign < 0 ? -e.value : e.value});
}

}  // namespace

ChainComplex ChainComplex::zero(int dim, const Ring& ring) {
  return {ring, std::vector<int>(dim, 0), SparseIntMatrix(dim, dim)};
}

bool vanishes_over(const SparseIntMatrix& m, const Ring& ring) {
  if (ring.kind != Ring::Kind::Fp) return m.is_zero();
  for (const auto& e : m.entries())
    if (e.value.mod(ring.p) != 0) return false;
  return true;
}

void check_complex(const ChainComplex& c, bool check_degrees) {
  const int n = c.dim();
  if (c.d.rows() != n || c.d.cols() != n)
    throw ContractViolation("differential is " + std::to_string(c.d.rows()) + "x" + std::to_string(c.d.cols()) +
                            " on a basis of " + std::to_string(n));
  if (static_cast<int>(c.degree.size()) != n) throw ContractViolation("complex: degree list has the wrong length");
  for (const auto& e : c.d.entries()) {
    if (!check_degrees) break;
    if (c.ring.kind == Ring::Kind::Fp && e.value.mod(c.ring.p) == 0) continue;
    if (c.degree[e.row] != c.degree[e.col] + 1)
      throw ContractViolation("differential entry from generator " + std::to_string(e.col) +
                              " does not raise degree by one");
  }
  if (!vanishes_over(c.d * c.d, c.ring)) throw ContractViolation("d^2 != 0");
}

std::int64_t homology_rank(const ChainComplex& c) {
  return c.dim() - 2 * static_cast<std::int64_t>(rank_over(c.d, c.ring));
}

std::map<int, std::int64_t> homology_ranks(const ChainComplex& c) {
  std::map<int, std::vector<int>> by_degree;
  for (int i = 0; i < c.dim(); ++i) by_degree[c.degree[i]].push_back(i);
  std::map<int, std::int64_t> rank_out;
  for (const auto& [n, src] : by_degree) {
    auto tgt = by_degree.find(n + 1);
    if (tgt == by_degree.end()) continue;
    rank_out[n] = rank_over(c.d.submatrix(tgt->second, src), c.ring);
  }
  std::map<int, std::int64_t> out;
  for (const auto& [n, src] : by_degree) {
    std::int64_t h = static_cast<std::int64_t>(src.size());
    if (auto it = rank_out.find(n); it != rank_out.end()) h -= it->second;
    if (auto it = rank_out.find(n - 1); it != rank_out.end()) h -= it->second;
    if (h) out[n] = h;
  }
  return out;
}

std::int64_t induced_rank(const ChainComplex& a, const ChainComplex& b, const SparseIntMatrix& f) {
  if (f.rows() != b.dim() || f.cols() != a.dim()) throw ContractViolation("induced_rank: map has the wrong shape");
  // Columns: A then B. Rows: B then A.
  std::vector<MatrixEntry> entries;
  append_shifted(entries, f, 0, 0);
  append_shifted(entries, b.d, 0, a.dim());
  append_shifted(entries, a.d, b.dim(), 0);
  auto m = SparseIntMatrix::from_triplets(a.dim() + b.dim(), a.dim() + b.dim(), std::move(entries));
  return rank_over(m, a.ring) - rank_over(a.d, a.ring) - rank_over(b.d, b.ring);
}

ChainComplex mapping_cone(const ChainComplex& a, const ChainComplex& b, const SparseIntMatrix& f, bool anti_chain,
                          int f_degree) {
  if (!(a.ring == b.ring)) throw ContractViolation("mapping_cone: complexes over different rings");
  if (f.rows() != b.dim() || f.cols() != a.dim()) throw ContractViolation("mapping_cone: map has the wrong shape");
  SparseIntMatrix defect = anti_chain ? b.d * f + f * a.d : b.d * f + (f * a.d).negated();
  for (const auto& e : defect.entries()) {
    if (a.ring.kind == Ring::Kind::Fp && e.value.mod(a.ring.p) == 0) continue;
    throw ContractViolation(std::string("mapping_cone: map is not ") + (anti_chain ? "an anti-chain" : "a chain") +
                            " map at source generator " + std::to_string(e.col));
  }
  ChainComplex c;
  c.ring = a.ring;
  for (int x : a.degree) c.degree.push_back(x + f_degree - 1);
  c.degree.insert(c.degree.end(), b.degree.begin(), b.degree.end());
  std::vector<MatrixEntry> entries;
  append_shifted(entries, a.d, 0, 0, anti_chain ? 1 : -1);
  append_shifted(entries, f, a.dim(), 0);
  append_shifted(entries, b.d, a.dim(), a.dim());
  c.d = SparseIntMatrix::from_triplets(c.dim(), c.dim(), std::move(entries));
  return c;
}

std::vector<FlatSector> flatten_by_q(const BigradedComplex& c, const Ring& ring) {
  std::map<int, FlatSector> sectors;
  std::map<Bidegree, int> offset;
  for (const auto& [b, basis] : c.blocks) {  // (h, q) order, so h ascending inside each sector
    auto& s = sectors[b.q];
    s.q = b.q;
    offset[b] = static_cast<int>(s.basis.size());
    for (const auto& e : basis) {
      s.basis.push_back(e);
      s.complex.degree.push_back(b.h);
    }
  }
  std::map<int, std::vector<MatrixEntry>> entries;
  for (const auto& [src, m] : c.differentials) {
    Bidegree dst{src.h + 1, src.q};
    append_shifted(entries[src.q], m, offset.at(dst), offset.at(src));
  }
  std::vector<FlatSector> out;
  for (auto& [q, s] : sectors) {
    s.complex.ring = ring;
    const int n = s.complex.dim();
    s.complex.d = SparseIntMatrix::from_triplets(n, n, std::move(entries[q]));
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace khcube
