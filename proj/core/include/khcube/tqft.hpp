#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "khcube/cube.hpp"
#include "khcube/integer.hpp"
#include "khcube/sparse_matrix.hpp"

namespace khcube {

/// A pure tensor of v+ / v- labels over the circles of a resolution.
///
/// Bit k of `minus` set means factor k carries v-. In the reduced theory one
/// factor may be the quotient V/<v-> = Z; it then always holds the generator 1,
/// which contributes nothing to either grading.
struct TensorGenerator {
  int n = 0;
  std::uint64_t minus = 0;
  int quotient_factor = -1;

  bool is_minus(int k) const { return (minus >> k) & 1u; }
  int n_minus() const;
  /// Z/4 degree: v+ sits in 0, v- in -2. Returned in [0, 4).
  int tqft_degree() const;
  /// (#v+) - (#v-), with a quotient factor counting zero.
  int q_weight() const;

  friend bool operator==(const TensorGenerator&, const TensorGenerator&) = default;
  friend auto operator<=>(const TensorGenerator&, const TensorGenerator&) = default;
};

TensorGenerator make_generator(std::initializer_list<char> labels);  // e.g. {'+', '-'}

class ModuleElement {
 public:
  ModuleElement() = default;
  ModuleElement(const TensorGenerator& g, Integer c = 1) { add(g, std::move(c)); }

  void add(const TensorGenerator& g, const Integer& c);
  ModuleElement& operator+=(const ModuleElement& other);
  friend ModuleElement operator*(const Integer& c, const ModuleElement& x);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }

  const std::map<TensorGenerator, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const TensorGenerator& g) const;

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  std::map<TensorGenerator, Integer> terms_;
};

/// Multiplication V (x) V -> V on a two-factor generator, extended linearly.
ModuleElement m(const TensorGenerator& x);
ModuleElement m(const ModuleElement& x);
/// Comultiplication V -> V (x) V.
ModuleElement delta(const TensorGenerator& x);
ModuleElement delta(const ModuleElement& x);
/// The degree-2 operator: v+ -> 2 v-, v- -> 0.
ModuleElement sigma(const ModuleElement& x);

/// Applies f to the `arity` consecutive factors starting at k, identity elsewhere.
ModuleElement apply_local(const ModuleElement& x, int k, int arity,
                          const std::function<ModuleElement(const TensorGenerator&)>& f);

/// Closed surface evaluation: 2 per torus component, 0 if any component is not a torus.
Integer evaluate_closed_surface(std::span<const int> genera);

/// Passes to the quotient by v- in `marked_factor`.
ModuleElement reduce(const ModuleElement& x, int marked_factor);

enum class Direction { increasing, decreasing };

/// An edge map in a form that is cheap to apply to many generators.
struct LocalEdgeMap {
  bool merge = true;
  int in_a = -1, in_b = -1;    // involved source circles (in_b unused for a split)
  int out_a = -1, out_b = -1;  // involved target circles (out_b unused for a merge)
  std::vector<int> bystander;  // source circle -> target circle, -1 if involved
  int dst_quotient = -1;
};

LocalEdgeMap local_edge_map(const EdgeCobordism& e, Direction dir, int src_circles,
                            int dst_circles, int dst_quotient = -1);

/// Appends the image of x (unsigned, coefficients all +1) to `out`.
void apply_edge(const LocalEdgeMap& f, const TensorGenerator& x,
                std::vector<TensorGenerator>& out);

/// Image of one basis generator under an edge map, unsigned.
///
/// Decreasing: the cobordism K_from -> K_to as recorded. Increasing: the
/// reverse cobordism K_to -> K_from (a merge becomes a split and vice versa).
/// `src_quotient` / `dst_quotient` are the marked circles for the reduced
/// theory, or -1.
std::vector<std::pair<TensorGenerator, int>> edge_image(const EdgeCobordism& e, Direction dir,
                                                       const TensorGenerator& x, int src_circles,
                                                       int dst_circles, int src_quotient = -1,
                                                       int dst_quotient = -1);

/// The edge map between two explicit bases, as a target-by-source matrix.
SparseIntMatrix edge_map(const EdgeCobordism& e, Direction dir,
                         std::span<const TensorGenerator> from_basis,
                         std::span<const TensorGenerator> to_basis, int src_quotient = -1,
                         int dst_quotient = -1);

/// All 2^n generators on n circles (v+ everywhere first), optionally with a quotient factor.
std::vector<TensorGenerator> tensor_basis(int n, int quotient_factor = -1);

}  // namespace khcube
