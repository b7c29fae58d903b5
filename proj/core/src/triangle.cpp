#include "khcube/triangle.hpp"

#include <string>

#include "khcube/errors.hpp"
#include "khcube/homalg.hpp"
#include "khcube/khcomplex.hpp"

namespace khcube {

namespace {

struct Split {
  ChainComplex sub0, sub1, whole;  // whole is ordered sub0 then sub1
  SparseIntMatrix f;               // sub0 -> sub1
};

Split split_at(const ChainComplex& c, const std::vector<BasisElement>& basis, int bit) {
  std::vector<int> idx0, idx1;
  for (int k = 0; k < c.dim(); ++k) (basis[k].vertex.bit(bit) ? idx1 : idx0).push_back(k);
  auto part = [&](const std::vector<int>& idx) {
    ChainComplex p;
    p.ring = c.ring;
    for (int k : idx) p.degree.push_back(c.degree[k]);
    p.d = c.d.submatrix(idx, idx);
    return p;
  };
  Split s{part(idx0), part(idx1), {}, c.d.submatrix(idx1, idx0)};
  std::vector<int> order = idx0;
  order.insert(order.end(), idx1.begin(), idx1.end());
  s.whole = part(order);
  return s;
}

void check_crossing(const PlanarDiagram& d, int crossing) {
  if (crossing < 1 || crossing > d.n_crossings())
    throw ValidationError("crossing " + std::to_string(crossing) + " is outside 1.." + std::to_string(d.n_crossings()));
}

std::int64_t unreduced_rank_Q(const PlanarDiagram& d, int threads) {
  BuildOptions o;
  o.ring = Ring::rationals();
  o.threads = threads;
  return homology(build_complex(d, o), threads).total_rank();
}

// (-1)^degree on each generator.
SparseIntMatrix parity_embedding(const ChainComplex& from, int rows, int row0) {
  std::vector<MatrixEntry> e;
  for (int k = 0; k < from.dim(); ++k) e.push_back({row0 + k, k, from.degree[k] % 2 ? -1 : 1});
  return SparseIntMatrix::from_triplets(rows, from.dim(), std::move(e));
}

std::string shape(const SparseIntMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

ConeReport cone_decomposition(const PlanarDiagram& d, int crossing, int threads) {
  check_crossing(d, crossing);
  ConeReport r;
  r.crossing = crossing;
  PlanarDiagram d0 = smooth_crossing(d, crossing - 1, 0), d1 = smooth_crossing(d, crossing - 1, 1);
  r.child0 = render_pd(d0);
  r.child1 = render_pd(d1);
  r.rank_child0 = unreduced_rank_Q(d0, threads);
  r.rank_child1 = unreduced_rank_Q(d1, threads);

  BuildOptions o;
  o.ring = Ring::rationals();
  o.threads = threads;
  BigradedComplex c = build_complex(d, o);
  for (const auto& sector : flatten_by_q(c, Ring::rationals())) {
    Split s = split_at(sector.complex, sector.basis, crossing - 1);
    r.rank_d += homology_rank(sector.complex);
    r.rank_sub0 += homology_rank(s.sub0);
    r.rank_sub1 += homology_rank(s.sub1);
    r.rank_f += induced_rank(s.sub0, s.sub1, s.f);
  }
  r.exactness_defect = r.rank_d - (r.rank_sub0 + r.rank_sub1 - 2 * r.rank_f);
  r.children_match = r.rank_sub0 == r.rank_child0 && r.rank_sub1 == r.rank_child1;
  r.bound_ok = r.rank_d <= r.rank_child0 + r.rank_child1;
  return r;
}

TriangleData skein_triangle(const PlanarDiagram& d, int crossing, const Ring& ring) {
  check_crossing(d, crossing);
  BuildOptions o;
  o.ring = ring;
  BigradedComplex bc = build_complex(d, o);
  ChainComplex whole;
  whole.ring = ring;
  std::vector<BasisElement> basis;
  std::map<Bidegree, int> offset;
  for (const auto& [b, gens] : bc.blocks) {
    offset[b] = whole.dim();
    for (const auto& g : gens) {
      basis.push_back(g);
      whole.degree.push_back(b.h);
    }
  }
  std::vector<MatrixEntry> entries;
  for (const auto& [src, m] : bc.differentials) {
    int r0 = offset.at({src.h + 1, src.q}), c0 = offset.at(src);
    for (const auto& e : m.entries()) entries.push_back({e.row + r0, e.col + c0, e.value});
  }
  whole.d = SparseIntMatrix::from_triplets(whole.dim(), whole.dim(), std::move(entries));

  Split s = split_at(whole, basis, crossing - 1);
  const int n2 = s.sub0.dim(), n1 = s.sub1.dim(), n0 = n2 + n1;
  TriangleData t;
  t.c = {s.whole, s.sub1, s.sub0};
  t.f[2] = s.f;
  t.f[1] = parity_embedding(s.sub1, n0, n2);               // y -> (0, ±y)
  t.f[0] = parity_embedding(s.sub0, n0, 0).transpose();    // (x, y) -> ±x
  t.j[2] = parity_embedding(s.sub0, n0, 0);                // x -> (±x, 0)
  t.j[1] = SparseIntMatrix(n2, n1);
  t.j[0] = parity_embedding(s.sub1, n0, n2).transpose();   // (x, y) -> ±y
  return t;
}

OsLemmaVerdict os_lemma_check(const TriangleData& t, bool extended, int dim_cap) {
  OsLemmaVerdict v;
  int total = 0;
  for (const auto& c : t.c) total += c.dim();
  if (total > dim_cap)
    throw ResourceError("triangle data has total dimension " + std::to_string(total) + ", above the cap of " +
                        std::to_string(dim_cap));
  const Ring ring = t.c[0].ring;
  for (int i = 0; i < 3; ++i) {
    if (!(t.c[i].ring == ring)) throw ContractViolation("triangle data mixes coefficient rings");
    check_complex(t.c[i], false);
  }
  auto prev = [](int i, int k) { return ((i - k) % 3 + 3) % 3; };

  auto shape_ok = [&](const std::optional<SparseIntMatrix>& m, int from, int to, const std::string& name) {
    if (!m) return false;
    if (m->cols() != t.c[from].dim() || m->rows() != t.c[to].dim())
      throw ContractViolation(name + " has shape " + shape(*m) + ", expected " + std::to_string(t.c[to].dim()) + "x" +
                              std::to_string(t.c[from].dim()));
    return true;
  };

  // (a) anti-chain maps
  for (int i = 0; i < 3; ++i) {
    if (!shape_ok(t.f[i], i, prev(i, 1), "f" + std::to_string(i))) continue;
    const auto& f = *t.f[i];
    if (!vanishes_over(t.c[prev(i, 1)].d * f + f * t.c[i].d, ring)) {
      v.anti_chain = false;
      v.failures.push_back("f" + std::to_string(i) + " is not an anti-chain map");
    }
  }
  // (b) null-homotopies of f_{i-1} f_i
  for (int i = 0; i < 3; ++i) {
    if (!shape_ok(t.j[i], i, prev(i, 2), "j" + std::to_string(i))) continue;
    if (!t.f[i] || !t.f[prev(i, 1)]) continue;
    const auto& j = *t.j[i];
    auto lhs = t.c[prev(i, 2)].d * j + j * t.c[i].d + *t.f[prev(i, 1)] * *t.f[i];
    if (!vanishes_over(lhs, ring)) {
      v.homotopy = false;
      v.failures.push_back("d j" + std::to_string(i) + " + j" + std::to_string(i) + " d + f f is nonzero");
    }
  }

  bool full = extended;
  for (int i = 0; i < 3; ++i) full = full && t.f[i] && t.j[i];
  if (!full || !v.anti_chain || !v.homotopy) return v;

  // (c) psi_i = f_{i-2} j_i + j_{i-1} f_i : C_i -> C_{i-3} = C_i
  v.quasi_iso = true;
  for (int i = 0; i < 3; ++i) {
    auto psi = *t.f[prev(i, 2)] * *t.j[i] + *t.j[prev(i, 1)] * *t.f[i];
    std::int64_t h = homology_rank(t.c[i]);
    if (induced_rank(t.c[i], t.c[i], psi) != h) {
      v.quasi_iso = false;
      v.failures.push_back("f j + j f is not a quasi-isomorphism on C" + std::to_string(i));
    }
  }
  if (!*v.quasi_iso) return v;

  v.exact = true;
  v.cone_quasi_iso = true;
  for (int i = 0; i < 3; ++i) {
    const int a = prev(i, 1), b = prev(i, 2);
    // Exactness at H(C_{i-1}): rank in + rank out = dim, and the composite vanishes.
    std::int64_t in = induced_rank(t.c[i], t.c[a], *t.f[i]);
    std::int64_t out = induced_rank(t.c[a], t.c[b], *t.f[a]);
    std::int64_t comp = induced_rank(t.c[i], t.c[b], *t.f[a] * *t.f[i]);
    if (in + out != homology_rank(t.c[a]) || comp != 0) {
      v.exact = false;
      v.failures.push_back("homology sequence is not exact at C" + std::to_string(a));
    }
    ChainComplex cone = mapping_cone(t.c[a], t.c[b], *t.f[a], true, 1);
    std::vector<MatrixEntry> phi;
    for (const auto& e : t.f[i]->entries()) phi.push_back(e);
    for (const auto& e : t.j[i]->entries()) phi.push_back({e.row + t.c[a].dim(), e.col, e.value});
    auto Phi = SparseIntMatrix::from_triplets(cone.dim(), t.c[i].dim(), std::move(phi));
    std::int64_t h = homology_rank(t.c[i]);
    if (homology_rank(cone) != h || induced_rank(t.c[i], cone, Phi) != h) {
      v.cone_quasi_iso = false;
      v.failures.push_back("C" + std::to_string(i) + " -> Cone(f" + std::to_string(a) + ") is not a quasi-isomorphism");
    }
  }
  return v;
}

}  // namespace khcube
