#pragma once

#include <optional>
#include <vector>

#include "khcube/diagram.hpp"
#include "khcube/integer.hpp"
#include "khcube/laurent.hpp"

namespace khcube {

inline constexpr int kJonesOracleCap = 14;

struct UnknotCertificate {
  bool is_unknot = false;
  std::int64_t rank = 0;
};

/// Total reduced rank over Q; the knot is trivial exactly when it is 1.
UnknotCertificate unknot_certificate(const PlanarDiagram& d, int threads = 1);

/// |det| of a Goeritz matrix minor. Split diagrams give 0.
Integer determinant(const PlanarDiagram& d);

/// Coefficients from the lowest power up, palindromic, positive leading coefficient.
std::vector<Integer> alexander_polynomial(const PlanarDiagram& d);

/// Unnormalized Jones polynomial in q by a Kauffman bracket state sum.
/// Shares no code with the cube or the TQFT.
Laurent jones_oracle(const PlanarDiagram& d, int cap = kJonesOracleCap);
/// |J(i)| with J the Jones polynomial divided by (q + 1/q).
Integer determinant_from_jones(const Laurent& jones);

struct InvariantReport {
  std::int64_t khr_rank_Q = 0;
  Integer determinant;
  std::vector<Integer> alexander;  // empty for links
  std::optional<Laurent> jones;    // absent above the oracle cap
  bool unknot_certified = false;
  bool bound_cor15_ok = false;  // reduced rank >= sum |a_i|; vacuous for links
  std::optional<bool> det_equality_ok;
};

InvariantReport check_bounds(const PlanarDiagram& d, std::optional<bool> alternating_hint = {},
                             int threads = 1);

/// Sum of |a_i|.
Integer coefficient_norm(const std::vector<Integer>& coefficients);

/// Bareiss fraction-free determinant of a square integer matrix.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

}  // namespace khcube
