#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "khcube/bigraded.hpp"
#include "khcube/chain_complex.hpp"

namespace khcube {

/// Generators carry a degree, a filtration weight and a sector; d has degree
/// +1 (or 0 when `graded` is false), preserves the sector and moves weights
/// monotonically: up when `d_raises_weight`, down otherwise.
struct FilteredComplex {
  Ring ring = Ring::rationals();
  std::vector<int> degree;
  std::vector<int> weight;
  std::vector<int> sector;  // optional; empty means one sector
  SparseIntMatrix d;        // target by source
  bool d_raises_weight = true;
  bool graded = true;

  int dim() const { return static_cast<int>(weight.size()); }
};

/// Throws ContractViolation if d^2 != 0 or an entry breaks the degree, sector or filtration.
void check_filtered(const FilteredComplex& fc);

struct SpectralPage {
  int r = 1;
  std::map<std::pair<int, int>, std::int64_t> ranks;   // (degree, weight) -> dim E_r
  std::map<std::pair<int, int>, std::int64_t> d_rank;  // rank of d_r out of (degree, weight)
  std::int64_t total = 0;
  bool converged = false;  // total equals the homology rank, so no later d_r is nonzero
};

/// Pages 1..r_max from ranks of filtered pieces of d; no subquotients are built.
std::vector<SpectralPage> spectral_pages(const FilteredComplex& fc, int r_max, int threads = 1);
std::int64_t homology_rank(const FilteredComplex& fc);

/// Degree h, weight |v|, sector q. The edge differential shifts |v| by exactly one,
/// so E_1 is the chain group and E_2 is the homology.
FilteredComplex cube_filtration(const BigradedComplex& c, const Ring& ring);

/// A cube of complexes with user-supplied maps f_vu : C_u -> C_v for u < v.
/// The total differential is the sum of (-1)^msign(v,u) f_vu, with f_vv = d_v.
struct CubeOfComplexes {
  int n = 0;
  std::vector<ChainComplex> vertex;  // indexed by vertex bits
  std::map<std::pair<std::uint32_t, std::uint32_t>, SparseIntMatrix> maps;  // (u, v) -> f_vu
};

/// Assembles the total complex filtered by |v|. Degrees are the vertex degrees.
/// Does not check d^2; call check_filtered.
FilteredComplex assemble_cube(const CubeOfComplexes& cube, bool graded = false);

}  // namespace khcube
