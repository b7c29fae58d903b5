#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "khcube/diagram.hpp"

namespace khcube {

inline constexpr int kDefaultCrossingCap = 20;

/// Bit i is the smoothing choice at crossing i (0-based), i.e. coordinate v_{i+1}.
struct CubeVertex {
  std::uint32_t bits = 0;
  int weight() const { return std::popcount(bits); }
  bool bit(int i) const { return (bits >> i) & 1u; }
  friend bool operator==(const CubeVertex&, const CubeVertex&) = default;
};

/// Cube order: increasing weight, then lexicographic in (v_1, ..., v_N).
bool cube_less(CubeVertex a, CubeVertex b, int n);
std::vector<CubeVertex> cube_vertices(int n);

/// The unlink at a vertex. Free loops of the diagram appear as circles carrying
/// virtual labels 2N+1, 2N+2, ... so every circle has a nonempty label set.
struct Resolution {
  CubeVertex vertex;
  std::vector<std::vector<int>> circles;  // sorted labels; circles ordered by smallest label
  std::vector<int> circle_of_label;       // label -> circle index, [0] unused
  int marked_circle = -1;                 // -1 for the empty diagram

  int n_circles() const { return static_cast<int>(circles.size()); }
};

enum class CobordismKind { merge, split };

/// The saddle from K_from (weight w) to K_to (weight w-1) at one crossing.
struct EdgeCobordism {
  CubeVertex from;
  CubeVertex to;
  int changed_crossing = 0;  // 1-based i0
  CobordismKind kind = CobordismKind::merge;
  // merge: sources a, b in `from` -> dest in `to`
  // split: source in `from` -> dests a, b in `to` (a < b)
  int src_a = -1, src_b = -1, dst_a = -1, dst_b = -1;
  std::vector<int> bystander_map;  // circle of `from` -> circle of `to`, -1 if involved
};

struct CubeDescriptor {
  int n_crossings = 0;
  std::vector<Resolution> resolutions;  // in cube order
  std::vector<int> index_of;            // bits -> position in `resolutions`
  std::vector<EdgeCobordism> edges;     // by source vertex in cube order, then i0

  const Resolution& at(CubeVertex v) const { return resolutions[index_of[v.bits]]; }
};

Resolution resolve(const PlanarDiagram& d, CubeVertex v);
EdgeCobordism edge(const PlanarDiagram& d, CubeVertex v, int i0);
EdgeCobordism edge(const Resolution& from, const Resolution& to, const Crossing& x, int i0);
CubeDescriptor enumerate_cube(const PlanarDiagram& d, int crossing_cap = kDefaultCrossingCap,
                              int threads = 1);

void check_crossing_cap(const PlanarDiagram& d, int crossing_cap);

}  // namespace khcube
