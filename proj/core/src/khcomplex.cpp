#include "khcube/khcomplex.hpp"

#include <bit>
#include <sstream>

#include "khcube/errors.hpp"
#include "khcube/homalg.hpp"
#include "khcube/parallel.hpp"

namespace khcube {

namespace {

int changed_index(CubeVertex v, CubeVertex u) {
  std::uint32_t diff = v.bits ^ u.bits;
  if (std::popcount(diff) != 1 || !(v.bits & diff))
    throw ContractViolation("sign rule needs adjacent vertices v = u + e_i0");
  return std::countr_zero(diff);  // 0-based i0 - 1
}

int mod4(int x) { return ((x % 4) + 4) % 4; }

}  // namespace

int sign_delta(CubeVertex v, CubeVertex u) {
  int i = changed_index(v, u);
  return std::popcount(v.bits & ((1u << i) - 1)) & 1;
}

int sign_tilde_delta(CubeVertex v, CubeVertex u) {
  int i = changed_index(v, u);
  return std::popcount(v.bits >> i) & 1;
}

int edge_sign(SignRule rule, CubeVertex v, CubeVertex u) {
  return rule == SignRule::delta ? sign_delta(v, u) : sign_tilde_delta(v, u);
}

int msign(std::span<const int> v, std::span<const int> u) {
  if (v.size() != u.size()) throw ContractViolation("msign: length mismatch");
  long dist = 0, sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < u[i]) throw ContractViolation("msign needs v >= u coordinatewise");
    dist += v[i] - u[i];
    sum += v[i];
  }
  return static_cast<int>((dist * (dist - 1) / 2 + sum) % 2);
}

bool two_face_condition(SignRule rule, int n) {
  const std::uint32_t top = std::uint32_t{1} << n;
  for (std::uint32_t u = 0; u < top; ++u)
    for (int i = 0; i < n; ++i) {
      if (u >> i & 1u) continue;
      for (int j = i + 1; j < n; ++j) {
        if (u >> j & 1u) continue;
        CubeVertex b{u}, v{u | 1u << i}, v2{u | 1u << j}, w{u | 1u << i | 1u << j};
        int lhs = edge_sign(rule, w, v) + edge_sign(rule, v, b);
        int rhs = 1 + edge_sign(rule, w, v2) + edge_sign(rule, v2, b);
        if ((lhs - rhs) % 2 != 0) return false;
      }
    }
  return true;
}

bool sign_rules_differ_by_weight(int n) {
  const std::uint32_t top = std::uint32_t{1} << n;
  for (std::uint32_t v = 0; v < top; ++v)
    for (int i = 0; i < n; ++i) {
      if (!(v >> i & 1u)) continue;
      CubeVertex hi{v}, lo{v & ~(1u << i)};
      if (((sign_tilde_delta(hi, lo) - sign_delta(hi, lo) - hi.weight()) % 2) != 0) return false;
    }
  return true;
}

Bidegree generator_bidegree(const ComplexMeta& meta, CubeVertex v, const TensorGenerator& g) {
  const int N = meta.n_crossings, w = v.weight();
  if (meta.direction == Direction::increasing)
    return {w - meta.n_minus, g.q_weight() + w + meta.n_plus - 2 * meta.n_minus};
  return {N - w - meta.n_plus, g.q_weight() + N - w + meta.n_minus - 2 * meta.n_plus};
}

BigradedComplex build_complex(const PlanarDiagram& d, const BuildOptions& opts) {
  check_crossing_cap(d, opts.crossing_cap);
  if (opts.variant == Variant::reduced && d.n_components() == 0)
    throw ValidationError("the reduced theory needs a marked component; the diagram is empty");

  BigradedComplex c;
  WritheCounts wc = writhe_counts(d);
  c.meta = {render_pd(d), d.fingerprint(), opts.variant, opts.rule, opts.ring, opts.direction,
            d.n_crossings(), wc.n_plus, wc.n_minus, d.n_components()};

  CubeDescriptor cube = enumerate_cube(d, opts.crossing_cap, opts.threads);
  const std::size_t nv = cube.resolutions.size();
  const bool reduced = opts.variant == Variant::reduced;

  // local[k][minus bits] = position of that generator inside its block
  std::vector<std::vector<int>> local(nv);
  for (std::size_t k = 0; k < nv; ++k) {
    const Resolution& r = cube.resolutions[k];
    int qf = reduced ? r.marked_circle : -1;
    local[k].assign(std::size_t{1} << r.n_circles(), -1);
    for (const auto& g : tensor_basis(r.n_circles(), qf)) {
      Bidegree b = generator_bidegree(c.meta, r.vertex, g);
      auto& basis = c.blocks[b];
      local[k][g.minus] = static_cast<int>(basis.size());
      basis.push_back({r.vertex, g});
    }
  }

  // One task per cube edge; each emits (source block, entry) pairs.
  std::vector<std::vector<std::pair<Bidegree, MatrixEntry>>> emitted(cube.edges.size());
  const bool dec = opts.direction == Direction::decreasing;
  parallel_for(cube.edges.size(), opts.threads, [&](std::size_t k) {
    const EdgeCobordism& e = cube.edges[k];
    std::size_t src_k = cube.index_of[(dec ? e.from : e.to).bits];
    std::size_t dst_k = cube.index_of[(dec ? e.to : e.from).bits];
    const Resolution& src = cube.resolutions[src_k];
    const Resolution& dst = cube.resolutions[dst_k];
    int src_q = reduced ? src.marked_circle : -1;
    int dst_q = reduced ? dst.marked_circle : -1;
    LocalEdgeMap f = local_edge_map(e, opts.direction, src.n_circles(), dst.n_circles(), dst_q);
    Integer s(edge_sign(opts.rule, e.from, e.to) ? -1 : 1);
    std::vector<TensorGenerator> img;
    auto& out = emitted[k];
    for (const auto& g : tensor_basis(src.n_circles(), src_q)) {
      img.clear();
      apply_edge(f, g, img);
      Bidegree b = generator_bidegree(c.meta, src.vertex, g);
      for (const auto& t : img) out.push_back({b, {local[dst_k][t.minus], local[src_k][g.minus], s}});
    }
  });

  std::map<Bidegree, std::vector<MatrixEntry>> buckets;
  for (auto& list : emitted) {
    for (auto& [b, entry] : list) buckets[b].push_back(std::move(entry));
    std::vector<std::pair<Bidegree, MatrixEntry>>().swap(list);
  }
  std::vector<Bidegree> keys;
  for (const auto& [b, v] : buckets) keys.push_back(b);
  std::vector<SparseIntMatrix> mats(keys.size());
  parallel_for(keys.size(), opts.threads, [&](std::size_t k) {
    Bidegree b = keys[k];
    mats[k] = SparseIntMatrix::from_triplets(c.dim({b.h + 1, b.q}), c.dim(b), std::move(buckets[b]));
  });
  for (std::size_t k = 0; k < keys.size(); ++k)
    if (!mats[k].is_zero()) c.differentials.emplace(keys[k], std::move(mats[k]));
  return c;
}

bool verify_d_squared(const BigradedComplex& c, int threads) {
  std::vector<Bidegree> sources;
  for (const auto& [b, m] : c.differentials) sources.push_back(b);
  std::vector<char> ok(sources.size(), 1);
  parallel_for(sources.size(), threads, [&](std::size_t k) {
    const auto& first = c.differentials.at(sources[k]);
    if (first.rows() != c.dim({sources[k].h + 1, sources[k].q}) || first.cols() != c.dim(sources[k])) {
      ok[k] = 0;
      return;
    }
    auto next = c.differentials.find({sources[k].h + 1, sources[k].q});
    if (next != c.differentials.end()) ok[k] = (next->second * first).is_zero();
  });
  return std::all_of(ok.begin(), ok.end(), [](char x) { return x != 0; });
}

int generator_z4_class(const ComplexMeta& meta, const TensorGenerator& g) {
  int k_v = -g.n + meta.n_components - meta.n_minus + meta.n_plus;
  return mod4(-(g.tqft_degree() + k_v));
}

Z4Table z4_collapse(const BigradedComplex& c, const BigradedHomology& h, const PlanarDiagram& d,
                    int threads) {
  if (!h.ring.is_field()) throw ContractViolation("the Z/4 collapse needs homology over a field");
  if (c.meta.direction != Direction::decreasing || c.meta.variant != Variant::unreduced)
    throw ContractViolation("the Z/4 collapse is defined on the unreduced decreasing-mode complex");
  Z4Table t;
  const int b0 = count_components(d);
  for (const auto& [b, g] : h.groups) t.by_bidegree[mod4(b.q - b.h - b0)] += g.free_rank;

  // Regrade every generator by its own class and take homology of the Z/4-graded
  // complex; d preserves q and raises h, so it lowers the class by one.
  std::array<int, 4> dims{};
  std::map<Bidegree, std::vector<int>> cls;
  for (const auto& [b, basis] : c.blocks) {
    auto& v = cls[b];
    for (const auto& e : basis) {
      int z = generator_z4_class(c.meta, e.gen);
      if (z != mod4(b.q - b.h - b0)) t.generatorwise = false;
      v.push_back(z);
    }
  }
  std::map<Bidegree, std::vector<int>> index;
  for (const auto& [b, v] : cls) {
    auto& idx = index[b];
    for (int z : v) idx.push_back(dims[z]++);
  }
  std::array<std::vector<MatrixEntry>, 4> entries;
  bool lowers_by_one = true;
  for (const auto& [src, m] : c.differentials) {
    Bidegree dst{src.h + 1, src.q};
    for (const auto& e : m.entries()) {
      int zs = cls[src][e.col], zt = cls[dst][e.row];
      if (zt != mod4(zs - 1)) lowers_by_one = false;
      entries[zs].push_back({index[dst][e.row], index[src][e.col], e.value});
    }
  }
  std::array<int, 4> rank{};
  if (lowers_by_one) {
    parallel_for(4, threads, [&](std::size_t z) {
      auto m = SparseIntMatrix::from_triplets(dims[(z + 3) % 4], dims[z], std::move(entries[z]));
      rank[z] = rank_over(m, h.ring);
    });
    for (int z = 0; z < 4; ++z) t.by_generator[z] = dims[z] - rank[z] - rank[(z + 1) % 4];
  }
  t.agree = lowers_by_one && t.generatorwise && t.by_bidegree == t.by_generator;
  return t;
}

Z4Table z4_collapse(const PlanarDiagram& d, const Ring& ring, int threads) {
  BuildOptions o;
  o.direction = Direction::decreasing;
  o.ring = ring;
  o.threads = threads;
  BigradedComplex c = build_complex(d, o);
  BigradedHomology h = homology(c, ring, threads);
  return z4_collapse(c, h, d, threads);
}

}  // namespace khcube
