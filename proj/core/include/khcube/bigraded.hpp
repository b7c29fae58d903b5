#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "khcube/cube.hpp"
#include "khcube/integer.hpp"
#include "khcube/ring.hpp"
#include "khcube/sparse_matrix.hpp"
#include "khcube/tqft.hpp"

namespace khcube {

struct Bidegree {
  int h = 0;
  int q = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

struct BasisElement {
  CubeVertex vertex;
  TensorGenerator gen;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

enum class Variant { unreduced, reduced };
enum class SignRule { delta, tilde_delta };

struct ComplexMeta {
  std::string diagram;
  std::uint64_t fingerprint = 0;
  Variant variant = Variant::unreduced;
  SignRule rule = SignRule::tilde_delta;
  Ring ring = Ring::integers();
  Direction direction = Direction::increasing;
  int n_crossings = 0;
  int n_plus = 0;
  int n_minus = 0;
  int n_components = 0;
};

/// Free modules indexed by (h, q) with d of bidegree (+1, 0).
///
/// `differentials[s]` maps block s to block (s.h + 1, s.q) and is stored
/// target-by-source. Missing entries mean zero maps.
struct BigradedComplex {
  ComplexMeta meta;
  std::map<Bidegree, std::vector<BasisElement>> blocks;
  std::map<Bidegree, SparseIntMatrix> differentials;

  int dim(Bidegree b) const;
  std::size_t total_dim() const;
  /// The differential out of `source`, or an empty matrix of the right shape.
  SparseIntMatrix differential(Bidegree source) const;
};

struct HomologyGroup {
  std::int64_t free_rank = 0;
  std::vector<Integer> torsion;  // prime-power orders, ascending
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Only nonzero groups are stored.
struct BigradedHomology {
  Ring ring = Ring::integers();
  std::map<Bidegree, HomologyGroup> groups;

  std::int64_t total_rank() const;
  std::int64_t rank_at(Bidegree b) const;
  /// Equality of free ranks and torsion at every bidegree.
  friend bool operator==(const BigradedHomology& a, const BigradedHomology& b) {
    return a.groups == b.groups;
  }
};

}  // namespace khcube
