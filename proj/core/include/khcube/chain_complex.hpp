#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "khcube/bigraded.hpp"
#include "khcube/ring.hpp"
#include "khcube/sparse_matrix.hpp"

namespace khcube {

/// A small complex over a field: one square matrix (target by source) on the
/// whole basis. Entries are integers read in the ring, so over F_p they are
/// taken mod p.
struct ChainComplex {
  Ring ring = Ring::rationals();
  std::vector<int> degree;  // d has degree +1
  SparseIntMatrix d;

  int dim() const { return static_cast<int>(degree.size()); }
  static ChainComplex zero(int dim, const Ring& ring = Ring::rationals());
};

/// True when every entry of m is zero in the ring.
bool vanishes_over(const SparseIntMatrix& m, const Ring& ring);

/// Throws ContractViolation on shape errors, d^2 != 0, or (when asked) d of the wrong degree.
void check_complex(const ChainComplex& c, bool check_degrees = true);

/// Total homology rank, dim - 2 rank d.
std::int64_t homology_rank(const ChainComplex& c);
/// Homology rank per degree.
std::map<int, std::int64_t> homology_ranks(const ChainComplex& c);

/// Rank of the map on homology induced by f: A -> B, which must send cycles to
/// cycles and boundaries to boundaries (chain or anti-chain maps both do).
/// Uses rank [[f, d_B], [d_A, 0]] - rank d_A - rank d_B.
std::int64_t induced_rank(const ChainComplex& a, const ChainComplex& b, const SparseIntMatrix& f);

/// Cone(f) = A + B with differential [[d_A, 0], [f, d_B]] for an anti-chain map,
/// or [[-d_A, 0], [f, d_B]] for a chain map. A's generators come first and sit
/// in degree deg + f_degree - 1, so the cone differential has degree +1.
/// Throws ContractViolation naming the first generator of A where the
/// (anti-)chain condition fails.
ChainComplex mapping_cone(const ChainComplex& a, const ChainComplex& b, const SparseIntMatrix& f,
                          bool anti_chain = true, int f_degree = 0);

/// One q-sector of a bigraded complex, flattened with its blocks in h order.
struct FlatSector {
  int q = 0;
  ChainComplex complex;
  std::vector<BasisElement> basis;
};

/// Splits a bigraded complex into one flat complex per q. Degrees are h.
std::vector<FlatSector> flatten_by_q(const BigradedComplex& c, const Ring& ring);

}  // namespace khcube
