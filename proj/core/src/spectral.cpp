#include "khcube/spectral.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <span>
#include <string>

#include "khcube/errors.hpp"
#include "khcube/homalg.hpp"
#include "khcube/khcomplex.hpp"
#include "khcube/parallel.hpp"

namespace khcube {

namespace {

int sector_of(const FilteredComplex& fc, int i) { return fc.sector.empty() ? 0 : fc.sector[i]; }
int degree_of(const FilteredComplex& fc, int i) { return fc.graded ? fc.degree[i] : 0; }

// One (sector, degree) block with its generators sorted by ascending weight
// (weights negated when d lowers them, so d never lowers the stored weight).
struct Block {
  int sector = 0, degree = 0;
  std::vector<int> index;
  std::vector<int> weight;
};

// Ranks of pieces of d out of one block: sources of weight >= a, targets of weight < b.
class PieceRanks {
 public:
  PieceRanks(const FilteredComplex& fc, const Block* src, const Block* dst) : fc_(fc), src_(src), dst_(dst) {}

  std::int64_t operator()(int a, int b) {
    if (!src_ || !dst_) return 0;
    auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<int> rows, cols;
    for (std::size_t k = 0; k < src_->index.size(); ++k)
      if (src_->weight[k] >= a) cols.push_back(src_->index[k]);
    for (std::size_t k = 0; k < dst_->index.size(); ++k)
      if (dst_->weight[k] < b) rows.push_back(dst_->index[k]);
    std::int64_t r = rows.empty() || cols.empty() ? 0 : rank_over(fc_.d.submatrix(rows, cols), fc_.ring);
    memo_.emplace(key, r);
    return r;
  }

 private:
  const FilteredComplex& fc_;
  const Block* src_;
  const Block* dst_;
  std::map<std::pair<int, int>, std::int64_t> memo_;
};

}  // namespace

void check_filtered(const FilteredComplex& fc) {
  const int n = fc.dim();
  if (static_cast<int>(fc.degree.size()) != n || (!fc.sector.empty() && static_cast<int>(fc.sector.size()) != n))
    throw ContractViolation("filtered complex: per-generator arrays differ in length");
  if (fc.d.rows() != n || fc.d.cols() != n) throw ContractViolation("filtered complex: d has the wrong shape");
  for (const auto& e : fc.d.entries()) {
    if (fc.ring.kind == Ring::Kind::Fp && e.value.mod(fc.ring.p) == 0) continue;
    if (fc.graded && fc.degree[e.row] != fc.degree[e.col] + 1)
      throw ContractViolation("filtered complex: d does not raise degree by one at generator " + std::to_string(e.col));
    if (sector_of(fc, e.row) != sector_of(fc, e.col))
      throw ContractViolation("filtered complex: d leaves the sector at generator " + std::to_string(e.col));
    bool ok = fc.d_raises_weight ? fc.weight[e.row] >= fc.weight[e.col] : fc.weight[e.row] <= fc.weight[e.col];
    if (!ok) throw ContractViolation("filtered complex: d breaks the filtration at generator " + std::to_string(e.col));
  }
  if (!vanishes_over(fc.d * fc.d, fc.ring)) throw ContractViolation("filtered complex: d^2 != 0");
}

std::int64_t homology_rank(const FilteredComplex& fc) {
  return fc.dim() - 2 * static_cast<std::int64_t>(rank_over(fc.d, fc.ring));
}

std::vector<SpectralPage> spectral_pages(const FilteredComplex& fc, int r_max, int threads) {
  check_filtered(fc);
  if (r_max < 1) throw ContractViolation("spectral_pages needs r_max >= 1");

  std::map<std::pair<int, int>, Block> blocks;
  for (int i = 0; i < fc.dim(); ++i) {
    auto& b = blocks[{sector_of(fc, i), degree_of(fc, i)}];
    b.sector = sector_of(fc, i);
    b.degree = degree_of(fc, i);
    b.index.push_back(i);
    b.weight.push_back(fc.d_raises_weight ? fc.weight[i] : -fc.weight[i]);
  }
  std::vector<const Block*> list;
  for (const auto& [k, b] : blocks) list.push_back(&b);
  auto find = [&](int s, int n) -> const Block* {
    auto it = blocks.find({s, n});
    return it == blocks.end() ? nullptr : &it->second;
  };
  const int step = fc.graded ? 1 : 0;

  // dims[r - 1][block][(weight)] for r = 1 .. r_max + 1
  using WeightMap = std::map<int, std::int64_t>;
  std::vector<std::vector<WeightMap>> dims(list.size());
  std::vector<std::int64_t> full_rank(list.size());
  parallel_for(list.size(), threads, [&](std::size_t k) {
    const Block& b = *list[k];
    PieceRanks out(fc, &b, find(b.sector, b.degree + step));
    PieceRanks in(fc, find(b.sector, b.degree - step), &b);
    std::vector<int> weights = b.weight;
    std::sort(weights.begin(), weights.end());
    weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
    auto dim_from = [&](int p) {
      return static_cast<std::int64_t>(std::count_if(b.weight.begin(), b.weight.end(), [&](int w) { return w >= p; }));
    };
    // Z_r^p = {x in F_p : dx in F_{p+r}},  B_s^p = F_p ∩ d(F_{p-s}).
    auto Z = [&](int r, int p) { return dim_from(p) - out(p, p + r); };
    auto B = [&](int s, int p) { return in(p - s, INT_MAX) - in(p - s, p); };
    dims[k].resize(r_max + 1);
    for (int r = 1; r <= r_max + 1; ++r)
      for (int p : weights) {
        std::int64_t e = Z(r, p) - Z(r - 1, p + 1) - B(r - 1, p) + B(r, p + 1);
        if (e) dims[k][r - 1][p] = e;
      }
    full_rank[k] = out(INT_MIN, INT_MAX);
  });

  std::int64_t h_total = fc.dim();
  for (auto r : full_rank) h_total -= 2 * r;

  auto original_weight = [&](int w) { return fc.d_raises_weight ? w : -w; };
  std::vector<SpectralPage> pages;
  for (int r = 1; r <= r_max; ++r) {
    SpectralPage page;
    page.r = r;
    // rank out of (n, p) = (E_r - E_{r+1})(n, p) - rank into (n, p); walk p upwards.
    std::map<std::tuple<int, int, int>, std::int64_t> out_rank;  // (sector, degree, weight)
    for (std::size_t k = 0; k < list.size(); ++k) {
      const Block& b = *list[k];
      for (const auto& [p, e] : dims[k][r - 1]) {
        page.ranks[{b.degree, original_weight(p)}] += e;
        page.total += e;
      }
    }
    // Blocks are ordered by (sector, degree), so incoming ranks are known first
    // when graded; ungraded blocks feed themselves and are walked by weight.
    for (std::size_t k = 0; k < list.size(); ++k) {
      const Block& b = *list[k];
      std::map<int, std::int64_t> weights;
      for (const auto& [p, e] : dims[k][r - 1]) weights[p] += 0;
      for (const auto& [p, e] : dims[k][r]) weights[p] += 0;
      for (const auto& [p, unused] : weights) {
        auto at = [&](int rr) {
          auto it = dims[k][rr - 1].find(p);
          return it == dims[k][rr - 1].end() ? std::int64_t{0} : it->second;
        };
        std::int64_t incoming = 0;
        if (auto it = out_rank.find({b.sector, b.degree - step, p - r}); it != out_rank.end()) incoming = it->second;
        std::int64_t o = at(r) - at(r + 1) - incoming;
        if (o < 0) throw ContractViolation("spectral_pages: inconsistent page ranks");
        out_rank[{b.sector, b.degree, p}] = o;
        if (o) page.d_rank[{b.degree, original_weight(p)}] += o;
      }
    }
    page.converged = page.total == h_total;
    pages.push_back(std::move(page));
  }
  return pages;
}

FilteredComplex cube_filtration(const BigradedComplex& c, const Ring& ring) {
  FilteredComplex fc;
  fc.ring = ring;
  fc.d_raises_weight = c.meta.direction == Direction::increasing;
  std::map<Bidegree, int> offset;
  for (const auto& [b, basis] : c.blocks) {
    offset[b] = fc.dim();
    for (const auto& e : basis) {
      fc.degree.push_back(b.h);
      fc.weight.push_back(e.vertex.weight());
      fc.sector.push_back(b.q);
    }
  }
  std::vector<MatrixEntry> entries;
  for (const auto& [src, m] : c.differentials) {
    int r0 = offset.at({src.h + 1, src.q}), c0 = offset.at(src);
    for (const auto& e : m.entries()) entries.push_back({e.row + r0, e.col + c0, e.value});
  }
  fc.d = SparseIntMatrix::from_triplets(fc.dim(), fc.dim(), std::move(entries));
  return fc;
}

FilteredComplex assemble_cube(const CubeOfComplexes& cube, bool graded) {
  const std::size_t nv = std::size_t{1} << cube.n;
  if (cube.vertex.size() != nv) throw ContractViolation("cube of complexes: expected one complex per vertex");
  FilteredComplex fc;
  fc.graded = graded;
  fc.ring = cube.vertex.empty() ? Ring::rationals() : cube.vertex[0].ring;
  std::vector<int> offset(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    offset[v] = fc.dim();
    for (int k = 0; k < cube.vertex[v].dim(); ++k) {
      fc.degree.push_back(graded ? cube.vertex[v].degree[k] : 0);
      fc.weight.push_back(std::popcount(static_cast<std::uint32_t>(v)));
    }
  }
  auto coords = [&](std::uint32_t bits) {
    std::vector<int> x(cube.n);
    for (int i = 0; i < cube.n; ++i) x[i] = (bits >> i) & 1u;
    return x;
  };
  std::vector<MatrixEntry> entries;
  auto add = [&](std::uint32_t u, std::uint32_t v, const SparseIntMatrix& f) {
    if (f.rows() != cube.vertex[v].dim() || f.cols() != cube.vertex[u].dim())
      throw ContractViolation("cube of complexes: map f_vu has the wrong shape");
    auto cv = coords(v), cu = coords(u);
    bool negate = msign(cv, cu) == 1;
    for (const auto& e : f.entries()) entries.push_back({e.row + offset[v], e.col + offset[u], negate ? -e.value : e.value});
  };
  for (std::size_t v = 0; v < nv; ++v) add(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v), cube.vertex[v].d);
  for (const auto& [key, f] : cube.maps) {
    auto [u, v] = key;
    if (u >= nv || v >= nv || u == v || (u & ~v) != 0)
      throw ContractViolation("cube of complexes: maps need u < v coordinatewise");
    add(u, v, f);
  }
  fc.d = SparseIntMatrix::from_triplets(fc.dim(), fc.dim(), std::move(entries));
  return fc;
}

}  // namespace khcube
