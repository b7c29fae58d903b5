#include "khcube/cube.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "khcube/errors.hpp"
#include "khcube/parallel.hpp"

namespace khcube {

bool cube_less(CubeVertex a, CubeVertex b, int /*n*/) {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  std::uint32_t diff = a.bits ^ b.bits;
  if (!diff) return false;
  return !a.bit(std::countr_zero(diff));
}

std::vector<CubeVertex> cube_vertices(int n) {
  std::vector<CubeVertex> vs(std::size_t{1} << n);
  for (std::uint32_t b = 0; b < vs.size(); ++b) vs[b].bits = b;
  std::sort(vs.begin(), vs.end(), [n](CubeVertex a, CubeVertex b) { return cube_less(a, b, n); });
  return vs;
}

void check_crossing_cap(const PlanarDiagram& d, int crossing_cap) {
  if (d.n_crossings() > crossing_cap || d.n_crossings() > 30) {
    std::ostringstream msg;
    msg << "diagram has " << d.n_crossings() << " crossings, above the cap of "
        << std::min(crossing_cap, 30);
    throw ResourceError(msg.str());
  }
}

Resolution resolve(const PlanarDiagram& d, CubeVertex v) {
  const int n_edges = d.n_edges();
  const int n_labels = n_edges + d.free_loops();
  std::vector<int> parent(n_labels + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int x, int y) {
    x = find(x), y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (int i = 0; i < d.n_crossings(); ++i) {
    auto [a, b, c, e] = d.crossings()[i].edges;
    if (v.bit(i)) {
      join(a, e);
      join(b, c);
    } else {
      join(a, b);
      join(c, e);
    }
  }

  Resolution r;
  r.vertex = v;
  r.circle_of_label.assign(n_labels + 1, -1);
  // Roots are the smallest label of each class, so scanning labels in order
  // creates circles already sorted by smallest label.
  for (int l = 1; l <= n_labels; ++l) {
    int root = find(l);
    if (root == l) {
      r.circle_of_label[l] = r.n_circles();
      r.circles.push_back({});
    } else {
      r.circle_of_label[l] = r.circle_of_label[root];
    }
    r.circles[r.circle_of_label[l]].push_back(l);
  }

  int ncomp = static_cast<int>(d.components().size());
  int base = d.base_component();
  if (base >= 0 && base < ncomp)
    r.marked_circle = r.circle_of_label[d.marked_edge()];
  else if (base >= ncomp)
    r.marked_circle = r.circle_of_label[n_edges + 1 + (base - ncomp)];
  return r;
}

EdgeCobordism edge(const Resolution& from, const Resolution& to, const Crossing& x, int i0) {
  EdgeCobordism e;
  e.from = from.vertex;
  e.to = to.vertex;
  e.changed_crossing = i0;

  std::vector<int> touched_from, touched_to;
  for (int l : x.edges) {
    touched_from.push_back(from.circle_of_label[l]);
    touched_to.push_back(to.circle_of_label[l]);
  }
  auto uniq = [](std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  uniq(touched_from);
  uniq(touched_to);

  if (touched_from.size() == 2 && touched_to.size() == 1) {
    e.kind = CobordismKind::merge;
    e.src_a = touched_from[0];
    e.src_b = touched_from[1];
    e.dst_a = touched_to[0];
  } else if (touched_from.size() == 1 && touched_to.size() == 2) {
    e.kind = CobordismKind::split;
    e.src_a = touched_from[0];
    e.dst_a = touched_to[0];
    e.dst_b = touched_to[1];
  } else {
    throw ContractViolation("cube edge is neither a merge nor a split");
  }

  e.bystander_map.assign(from.n_circles(), -1);
  for (int k = 0; k < from.n_circles(); ++k) {
    if (std::binary_search(touched_from.begin(), touched_from.end(), k)) continue;
    e.bystander_map[k] = to.circle_of_label[from.circles[k].front()];
  }
  return e;
}

EdgeCobordism edge(const PlanarDiagram& d, CubeVertex v, int i0) {
  if (i0 < 1 || i0 > d.n_crossings() || !v.bit(i0 - 1))
    throw ContractViolation("edge needs a vertex with bit i0 set");
  CubeVertex u{v.bits & ~(1u << (i0 - 1))};
  return edge(resolve(d, v), resolve(d, u), d.crossings()[i0 - 1], i0);
}

CubeDescriptor enumerate_cube(const PlanarDiagram& d, int crossing_cap, int threads) {
  check_crossing_cap(d, crossing_cap);
  const int n = d.n_crossings();
  CubeDescriptor cube;
  cube.n_crossings = n;
  auto order = cube_vertices(n);
  cube.resolutions.resize(order.size());
  cube.index_of.assign(order.size(), -1);
  for (std::size_t k = 0; k < order.size(); ++k) cube.index_of[order[k].bits] = static_cast<int>(k);
  parallel_for(order.size(), threads, [&](std::size_t k) { cube.resolutions[k] = resolve(d, order[k]); });

  std::vector<std::size_t> first_edge(order.size() + 1, 0);
  for (std::size_t k = 0; k < order.size(); ++k) first_edge[k + 1] = first_edge[k] + order[k].weight();
  cube.edges.resize(first_edge.back());
  parallel_for(order.size(), threads, [&](std::size_t k) {
    std::size_t slot = first_edge[k];
    const Resolution& from = cube.resolutions[k];
    for (int i = 0; i < n; ++i) {
      if (!from.vertex.bit(i)) continue;
      CubeVertex u{from.vertex.bits & ~(1u << i)};
      cube.edges[slot++] = edge(from, cube.at(u), d.crossings()[i], i + 1);
    }
  });
  return cube;
}

}  // namespace khcube
