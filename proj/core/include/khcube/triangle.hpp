#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "khcube/chain_complex.hpp"
#include "khcube/diagram.hpp"

namespace khcube {

/// Rank bookkeeping for splitting a diagram's complex at one crossing: the
/// complex of D is the cone of the crossing's edge maps from the 0-side
/// subcube to the 1-side subcube. All ranks are over Q.
struct ConeReport {
  int crossing = 0;  // 1-based
  std::string child0, child1;
  std::int64_t rank_d = 0;
  std::int64_t rank_child0 = 0, rank_child1 = 0;  // separately built child complexes
  std::int64_t rank_sub0 = 0, rank_sub1 = 0;      // subcubes of D's own complex
  std::int64_t rank_f = 0;                         // rank of the map on homology
  /// rank_d - (rank_sub0 + rank_sub1 - 2 rank_f); zero for an exact triangle.
  std::int64_t exactness_defect = 0;
  bool children_match = false;  // subcube ranks equal the child ranks
  bool bound_ok = false;        // rank_d <= rank_child0 + rank_child1

  bool ok() const { return exactness_defect == 0 && children_match && bound_ok; }
};

/// Throws ValidationError for a crossing index outside 1..N.
ConeReport cone_decomposition(const PlanarDiagram& d, int crossing, int threads = 1);

/// Three complexes with anti-chain maps f[i] : C_i -> C_{i-1} and homotopies
/// j[i] : C_i -> C_{i-2}, indices mod 3. Missing maps are simply not checked.
struct TriangleData {
  std::array<ChainComplex, 3> c;
  std::array<std::optional<SparseIntMatrix>, 3> f;
  std::array<std::optional<SparseIntMatrix>, 3> j;
};

inline constexpr int kTriangleDimCap = 512;

struct OsLemmaVerdict {
  bool anti_chain = true;  // (a) every supplied f
  bool homotopy = true;    // (b) d j + j d + f f = 0 wherever j and both f are supplied
  std::optional<bool> quasi_iso;       // (c) f j + j f induces isomorphisms
  std::optional<bool> exact;           // the homology triangle is exact at every spot
  std::optional<bool> cone_quasi_iso;  // s -> (f s, j s) is a quasi-isomorphism into Cone(f_{i-1})
  std::vector<std::string> failures;

  bool hypotheses_hold() const { return anti_chain && homotopy && quasi_iso.value_or(true); }
  bool conclusions_hold() const { return exact.value_or(true) && cone_quasi_iso.value_or(true); }
  bool passed() const { return hypotheses_hold() && conclusions_hold(); }
};

/// Hypothesis (c) and the conclusions need the full periodic family (all three f
/// and j) and `extended`; otherwise they stay unset. Throws ResourceError past `dim_cap`.
OsLemmaVerdict os_lemma_check(const TriangleData& t, bool extended = true, int dim_cap = kTriangleDimCap);

/// The skein triangle at one crossing, extended 3-periodically: C_2 and C_1 are
/// the 0- and 1-side subcubes, C_0 the whole complex (their cone), with the
/// inclusion, projection and homotopies signed by (-1)^h.
TriangleData skein_triangle(const PlanarDiagram& d, int crossing, const Ring& ring = Ring::rationals());

}  // namespace khcube
