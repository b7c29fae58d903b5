#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace khcube {

/// Edge labels of one crossing, counterclockwise from the incoming under-strand.
struct Crossing {
  std::array<int, 4> edges{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> defects;
};

struct WritheCounts {
  int n_plus = 0;
  int n_minus = 0;
  friend bool operator==(const WritheCounts&, const WritheCounts&) = default;
};

/// A position on the boundary of a crossing: which crossing and which of its four slots.
struct Slot {
  int crossing = -1;
  int position = -1;
  friend bool operator==(const Slot&, const Slot&) = default;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

/// A link diagram in PD form. Always valid once constructed.
///
/// Edge labels run 1..2N and increase along each component's orientation.
/// Components that meet no crossing are stored only as a count (`free_loops`),
/// which is how crossingless unlinks are represented.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;

  static PlanarDiagram unlink(int n);
  /// Throws ValidationError carrying every defect found.
  static PlanarDiagram from_pd(std::vector<Crossing> crossings, int free_loops = 0);
  /// Tuples list edge ids counterclockwise with the under-strand at positions 0/2,
  /// but carry no orientation. Components are oriented and relabelled canonically.
  static PlanarDiagram from_unoriented(const std::vector<std::array<int, 4>>& tuples,
                                       int free_loops = 0);

  int n_crossings() const { return static_cast<int>(crossings_.size()); }
  int n_edges() const { return 2 * n_crossings(); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  int free_loops() const { return free_loops_; }
  int n_components() const { return static_cast<int>(components_.size()) + free_loops_; }

  /// Oriented edge cycles of the components that meet at least one crossing.
  const std::vector<std::vector<int>>& components() const { return components_; }
  int component_of_edge(int label) const { return edge_component_[label]; }

  int base_component() const { return base_component_; }
  PlanarDiagram with_base_component(int component) const;
  /// Smallest edge label on the base component, or 0 when the base is a free loop.
  int marked_edge() const;

  Slot head(int label) const { return head_[label]; }
  Slot tail(int label) const { return tail_[label]; }
  /// +1 for a positive crossing, -1 for a negative one.
  int crossing_sign(int index) const { return signs_[index]; }

  std::string to_string() const;
  std::uint64_t fingerprint() const;

  friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
    return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_ &&
           a.base_component_ == b.base_component_;
  }

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  int base_component_ = -1;
  std::vector<std::vector<int>> components_;
  std::vector<int> edge_component_;  // indexed by label, [0] unused
  std::vector<Slot> head_;
  std::vector<Slot> tail_;
  std::vector<int> signs_;
};

/// Checks labelling, occurrence counts and traversal consistency of raw tuples.
ValidationReport validate(std::span<const Crossing> crossings);
ValidationReport validate(const PlanarDiagram& d);

/// Parses `PD[X[a,b,c,d],...]` or the unlink shorthand `U<n>`.
/// A PD code may be followed by `U<n>` to add n split unknotted components.
PlanarDiagram parse_pd(std::string_view text);
std::string render_pd(const PlanarDiagram& d);

PlanarDiagram mirror(const PlanarDiagram& d);
WritheCounts writhe_counts(const PlanarDiagram& d);
int count_components(const PlanarDiagram& d);

/// Replaces crossing `index` by its 0- or 1-smoothing (see cube.hpp for the convention).
PlanarDiagram smooth_crossing(const PlanarDiagram& d, int index, int bit);

struct KnotTableRow {
  std::string name;
  std::string pd;
  std::map<std::string, std::string> extra;  // any further columns, by header name
};

/// Reads a UTF-8 CSV knot table with a header row containing `name` and `pd`.
std::vector<KnotTableRow> read_knot_table(const std::filesystem::path& path);
std::vector<KnotTableRow> parse_knot_table(std::string_view csv_text);

}  // namespace khcube
