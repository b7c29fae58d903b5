#include "khcube/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "khcube/errors.hpp"

namespace khcube {

namespace {

struct Orientation {
  std::vector<Slot> head;  // by label
  std::vector<Slot> tail;
  std::vector<std::vector<int>> cycles;
  std::vector<std::string> defects;
};

int edge_at(std::span<const Crossing> xs, Slot s) { return xs[s.crossing].edges[s.position]; }

Slot opposite(Slot s) { return {s.crossing, (s.position + 2) % 4}; }

// Orients every strand: under-passages fix direction locally and propagate
// through over-passages. Components that only pass over get the direction in
// which labels increase, if either does.
Orientation orient(std::span<const Crossing> xs) {
  const int n_edges = 2 * static_cast<int>(xs.size());
  Orientation o;
  o.head.assign(n_edges + 1, Slot{});
  o.tail.assign(n_edges + 1, Slot{});

  std::vector<std::array<Slot, 2>> slots(n_edges + 1);
  std::vector<int> seen(n_edges + 1, 0);
  for (int c = 0; c < static_cast<int>(xs.size()); ++c)
    for (int p = 0; p < 4; ++p) {
      int e = xs[c].edges[p];
      slots[e][seen[e]++] = Slot{c, p};
    }
  auto other = [&](int e, Slot s) { return slots[e][0] == s ? slots[e][1] : slots[e][0]; };

  std::vector<int> queue;
  auto assign = [&](int e, Slot h) {
    if (o.head[e].crossing >= 0) {
      if (o.head[e] != h) {
        std::ostringstream msg;
        msg << "inconsistent traversal: edge " << e << " is forced into both directions";
        o.defects.push_back(msg.str());
      }
      return;
    }
    o.head[e] = h;
    o.tail[e] = other(e, h);
    queue.push_back(e);
  };
  auto drain = [&] {
    while (!queue.empty()) {
      int e = queue.back();
      queue.pop_back();
      Slot t = o.tail[e];
      Slot in = opposite(t);
      assign(edge_at(xs, in), in);
      Slot out = opposite(o.head[e]);
      int f = edge_at(xs, out);
      assign(f, other(f, out));
    }
  };

  for (int c = 0; c < static_cast<int>(xs.size()); ++c) {
    assign(xs[c].edges[0], Slot{c, 0});
    int e2 = xs[c].edges[2];
    assign(e2, other(e2, Slot{c, 2}));
  }
  drain();
  for (int e = 1; e <= n_edges; ++e) {
    if (o.head[e].crossing >= 0) continue;
    int succ = e == n_edges ? 1 : e + 1;
    Slot pick = slots[e][0];
    for (Slot s : slots[e])
      if (edge_at(xs, opposite(s)) == succ) {
        pick = s;
        break;
      }
    assign(e, pick);
    drain();
  }
  if (!o.defects.empty()) return o;

  std::vector<bool> visited(n_edges + 1, false);
  for (int start = 1; start <= n_edges; ++start) {
    if (visited[start]) continue;
    std::vector<int> cycle;
    int e = start;
    while (!visited[e]) {
      visited[e] = true;
      cycle.push_back(e);
      e = edge_at(xs, opposite(o.head[e]));
    }
    for (size_t k = 0; k < cycle.size(); ++k) {
      if (cycle[k] != start + static_cast<int>(k)) {
        std::ostringstream msg;
        msg << "inconsistent traversal: edge " << cycle[k - 1] << " is followed by edge "
            << cycle[k];
        o.defects.push_back(msg.str());
        break;
      }
    }
    o.cycles.push_back(std::move(cycle));
  }
  return o;
}

std::string join_defects(const std::vector<std::string>& defects) {
  std::string out;
  for (const auto& d : defects) {
    if (!out.empty()) out += "; ";
    out += d;
  }
  return out;
}

}  // namespace

// A 4-valent diagram is planar iff its ribbon surface has V - E + F = 2 per
// connected piece, i.e. F = N + 2P. Expects every label to occur exactly twice.
std::optional<std::string> planarity_defect(std::span<const Crossing> xs) {
  const int n = static_cast<int>(xs.size());
  std::vector<std::array<Slot, 2>> ends(2 * n + 1);
  std::vector<int> seen(2 * n + 1, 0);
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) {
      int e = xs[c].edges[p];
      ends[e][seen[e]++] = Slot{c, p};
    }
  auto across = [&](Slot s) {
    const auto& pair = ends[xs[s.crossing].edges[s.position]];
    bool first = pair[0].crossing == s.crossing && pair[0].position == s.position;
    return first ? pair[1] : pair[0];
  };
  std::vector<char> used(4 * n, 0);
  int faces = 0;
  for (int start = 0; start < 4 * n; ++start) {
    if (used[start]) continue;
    ++faces;
    Slot s{start / 4, start % 4};
    while (!used[4 * s.crossing + s.position]) {
      used[4 * s.crossing + s.position] = 1;
      Slot t = across(s);
      s = {t.crossing, (t.position + 3) % 4};
    }
  }
  std::vector<int> parent(n);
  for (int c = 0; c < n; ++c) parent[c] = c;
  std::function<int(int)> root = [&](int c) { return parent[c] == c ? c : parent[c] = root(parent[c]); };
  for (int e = 1; e <= 2 * n; ++e) parent[root(ends[e][0].crossing)] = root(ends[e][1].crossing);
  int pieces = 0;
  for (int c = 0; c < n; ++c) pieces += root(c) == c;
  if (faces == n + 2 * pieces) return std::nullopt;
  std::ostringstream msg;
  msg << "non-planar: " << faces << " faces where a planar diagram has " << n + 2 * pieces;
  return msg.str();
}

ValidationReport validate(std::span<const Crossing> xs) {
  ValidationReport r;
  const int n_edges = 2 * static_cast<int>(xs.size());
  std::map<int, int> count;
  for (size_t c = 0; c < xs.size(); ++c)
    for (int e : xs[c].edges) {
      if (e <= 0) {
        std::ostringstream msg;
        msg << "non-positive label " << e << " in crossing " << c + 1;
        r.defects.push_back(msg.str());
      }
      ++count[e];
    }
  for (auto [label, k] : count) {
    if (k == 2) continue;
    std::ostringstream msg;
    if (k % 2 == 1)
      msg << "odd occurrence: label " << label << " appears " << k << " time" << (k == 1 ? "" : "s");
    else
      msg << "duplicate label: label " << label << " appears " << k << " times";
    r.defects.push_back(msg.str());
  }
  std::vector<int> missing;
  bool out_of_range = false;
  for (int e = 1; e <= n_edges; ++e)
    if (!count.count(e)) missing.push_back(e);
  for (auto [label, k] : count)
    if (label > n_edges) out_of_range = true;
  if (!missing.empty() || out_of_range) {
    std::ostringstream msg;
    msg << "non-contiguous labels: expected 1.." << n_edges;
    if (!missing.empty()) {
      msg << ", missing";
      for (int e : missing) msg << ' ' << e;
    }
    r.defects.push_back(msg.str());
  }
  if (r.defects.empty() && !xs.empty()) {
    Orientation o = orient(xs);
    r.defects = std::move(o.defects);
    if (auto p = planarity_defect(xs)) r.defects.push_back(*p);
  }
  r.ok = r.defects.empty();
  return r;
}

ValidationReport validate(const PlanarDiagram& d) {
  ValidationReport r = validate(std::span<const Crossing>(d.crossings()));
  if (d.free_loops() < 0) r.defects.push_back("negative free loop count");
  if (d.n_components() > 0 && (d.base_component() < 0 || d.base_component() >= d.n_components()))
    r.defects.push_back("base component out of range");
  r.ok = r.defects.empty();
  return r;
}

PlanarDiagram PlanarDiagram::unlink(int n) {
  if (n < 0) throw ValidationError("unlink needs a nonnegative component count");
  PlanarDiagram d;
  d.free_loops_ = n;
  d.base_component_ = n > 0 ? 0 : -1;
  d.edge_component_.assign(1, -1);
  return d;
}

PlanarDiagram PlanarDiagram::from_pd(std::vector<Crossing> crossings, int free_loops) {
  if (free_loops < 0) throw ValidationError("negative free loop count");
  if (crossings.empty()) return unlink(free_loops);
  ValidationReport r = validate(std::span<const Crossing>(crossings));
  if (!r.ok) throw ValidationError("invalid diagram: " + join_defects(r.defects));

  PlanarDiagram d;
  Orientation o = orient(crossings);
  d.crossings_ = std::move(crossings);
  d.free_loops_ = free_loops;
  d.base_component_ = 0;
  d.head_ = std::move(o.head);
  d.tail_ = std::move(o.tail);
  d.components_ = std::move(o.cycles);
  d.edge_component_.assign(d.n_edges() + 1, -1);
  for (int c = 0; c < static_cast<int>(d.components_.size()); ++c)
    for (int e : d.components_[c]) d.edge_component_[e] = c;
  d.signs_.resize(d.crossings_.size());
  for (int i = 0; i < d.n_crossings(); ++i) {
    int b = d.crossings_[i].edges[1];
    d.signs_[i] = d.head_[b] == Slot{i, 1} ? -1 : +1;
  }
  return d;
}

PlanarDiagram PlanarDiagram::from_unoriented(const std::vector<std::array<int, 4>>& tuples,
                                             int free_loops) {
  if (tuples.empty()) return unlink(free_loops);
  std::map<int, std::vector<Slot>> slots;
  for (int c = 0; c < static_cast<int>(tuples.size()); ++c)
    for (int p = 0; p < 4; ++p) slots[tuples[c][p]].push_back(Slot{c, p});
  for (auto& [id, s] : slots)
    if (s.size() != 2) {
      std::ostringstream msg;
      msg << "edge id " << id << " appears " << s.size() << " times";
      throw ValidationError(msg.str());
    }
  auto other = [&](int id, Slot s) {
    const auto& v = slots[id];
    return v[0] == s ? v[1] : v[0];
  };

  std::map<int, int> relabel;
  std::map<int, Slot> head;
  int next_label = 1;
  for (auto& [id, s] : slots) {
    if (relabel.count(id)) continue;
    int e = id;
    Slot h = s[0];
    while (!relabel.count(e)) {
      relabel[e] = next_label++;
      head[e] = h;
      Slot out = opposite(h);
      e = tuples[out.crossing][out.position];
      h = other(e, out);
    }
  }

  std::vector<Crossing> xs(tuples.size());
  for (int c = 0; c < static_cast<int>(tuples.size()); ++c) {
    int a = tuples[c][0];
    bool incoming = head[a] == Slot{c, 0};
    // Edges with both ends at this crossing: the under edge entering at 0 may
    // still have its recorded head at another slot of the same crossing.
    for (int p = 0; p < 4; ++p) xs[c].edges[p] = relabel[tuples[c][incoming ? p : (p + 2) % 4]];
  }
  return from_pd(std::move(xs), free_loops);
}

PlanarDiagram PlanarDiagram::with_base_component(int component) const {
  if (component < 0 || component >= n_components())
    throw ValidationError("base component index out of range");
  PlanarDiagram d = *this;
  d.base_component_ = component;
  return d;
}

int PlanarDiagram::marked_edge() const {
  if (base_component_ < 0 || base_component_ >= static_cast<int>(components_.size())) return 0;
  return components_[base_component_].front();
}

std::string PlanarDiagram::to_string() const { return render_pd(*this); }

std::uint64_t PlanarDiagram::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& x : crossings_)
    for (int e : x.edges) mix(static_cast<std::uint64_t>(e));
  mix(static_cast<std::uint64_t>(free_loops_) + 0x9e37);
  mix(static_cast<std::uint64_t>(base_component_ + 1));
  return h;
}

namespace {

class PdParser {
 public:
  explicit PdParser(std::string_view text) : s_(text) {}

  PlanarDiagram parse() {
    skip();
    std::vector<Crossing> xs;
    int loops = 0;
    if (peek() == 'U') {
      loops = unlink_count();
    } else {
      expect("PD");
      expect("[");
      do {
        xs.push_back(crossing());
      } while (accept(','));
      expect("]");
      if (peek() == 'U') loops = unlink_count();
    }
    skip();
    if (pos_ != s_.size()) fail("end of input");
    return PlanarDiagram::from_pd(std::move(xs), loops);
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void fail(std::string_view what) {
    std::ostringstream msg;
    msg << "syntax error at position " << pos_ << ": expected " << what;
    throw ValidationError(msg.str());
  }
  void expect(std::string_view tok) {
    skip();
    for (char ch : tok) {
      if (pos_ >= s_.size() || s_[pos_] != ch) fail("'" + std::string(tok) + "'");
      ++pos_;
      skip();
    }
  }
  bool accept(char ch) {
    if (peek() != ch) return false;
    ++pos_;
    return true;
  }
  int integer() {
    skip();
    size_t begin = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    int v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + begin, s_.data() + pos_, v);
    if (ec != std::errc() || ptr != s_.data() + pos_) {
      pos_ = begin;
      fail("integer");
    }
    return v;
  }
  Crossing crossing() {
    expect("X");
    expect("[");
    Crossing x;
    for (int p = 0; p < 4; ++p) {
      if (p) expect(",");
      x.edges[p] = integer();
    }
    expect("]");
    return x;
  }
  int unlink_count() {
    expect("U");
    int n = integer();
    if (n < 0) fail("nonnegative component count");
    return n;
  }
};

}  // namespace

PlanarDiagram parse_pd(std::string_view text) { return PdParser(text).parse(); }

std::string render_pd(const PlanarDiagram& d) {
  std::ostringstream out;
  if (d.n_crossings() == 0) {
    out << 'U' << d.free_loops();
    return out.str();
  }
  out << "PD[";
  for (int i = 0; i < d.n_crossings(); ++i) {
    const auto& e = d.crossings()[i].edges;
    out << (i ? ",X[" : "X[") << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ']';
  }
  out << ']';
  if (d.free_loops() > 0) out << 'U' << d.free_loops();
  return out.str();
}

PlanarDiagram mirror(const PlanarDiagram& d) {
  std::vector<Crossing> xs = d.crossings();
  for (int i = 0; i < d.n_crossings(); ++i) {
    auto [a, b, c, e] = xs[i].edges;
    // The old over strand becomes the under strand; start at its incoming end.
    xs[i].edges = d.crossing_sign(i) > 0 ? std::array{e, a, b, c} : std::array{b, c, e, a};
  }
  PlanarDiagram m = PlanarDiagram::from_pd(std::move(xs), d.free_loops());
  if (d.base_component() >= 0) m = m.with_base_component(d.base_component());
  return m;
}

WritheCounts writhe_counts(const PlanarDiagram& d) {
  WritheCounts w;
  for (int i = 0; i < d.n_crossings(); ++i) (d.crossing_sign(i) > 0 ? w.n_plus : w.n_minus)++;
  return w;
}

int count_components(const PlanarDiagram& d) { return d.n_components(); }

PlanarDiagram smooth_crossing(const PlanarDiagram& d, int index, int bit) {
  if (index < 0 || index >= d.n_crossings())
    throw ValidationError("crossing index out of range");
  std::vector<int> parent(d.n_edges() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto [a, b, c, e] = d.crossings()[index].edges;
  if (bit == 0) {
    parent[find(a)] = find(b);
    parent[find(c)] = find(e);
  } else {
    parent[find(a)] = find(e);
    parent[find(b)] = find(c);
  }
  std::vector<std::array<int, 4>> tuples;
  std::vector<bool> used(d.n_edges() + 1, false);
  for (int i = 0; i < d.n_crossings(); ++i) {
    if (i == index) continue;
    std::array<int, 4> t{};
    for (int p = 0; p < 4; ++p) {
      t[p] = find(d.crossings()[i].edges[p]);
      used[t[p]] = true;
    }
    tuples.push_back(t);
  }
  int closed = 0;
  for (int x : {a, b, c, e}) {
    int r = find(x);
    if (!used[r]) {
      used[r] = true;
      ++closed;
    }
  }
  return PlanarDiagram::from_unoriented(tuples, d.free_loops() + closed);
}

namespace {

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
    } else {
      field += ch;
      any = true;
    }
  }
  if (quoted) throw ValidationError("csv: unterminated quoted field");
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<KnotTableRow> parse_knot_table(std::string_view csv_text) {
  if (csv_text.substr(0, 3) == "\xEF\xBB\xBF") csv_text.remove_prefix(3);
  auto rows = parse_csv(csv_text);
  if (rows.empty()) throw ValidationError("knot table: missing header row");
  const auto& header = rows[0];
  auto name_col = std::find(header.begin(), header.end(), "name");
  auto pd_col = std::find(header.begin(), header.end(), "pd");
  if (name_col == header.end() || pd_col == header.end())
    throw ValidationError("knot table: header must contain 'name' and 'pd'");
  size_t ni = name_col - header.begin(), pi = pd_col - header.begin();

  std::vector<KnotTableRow> out;
  for (size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != header.size()) {
      std::ostringstream msg;
      msg << "knot table: row " << r + 1 << " has " << rows[r].size() << " fields, header has "
          << header.size();
      throw ValidationError(msg.str());
    }
    KnotTableRow row{rows[r][ni], rows[r][pi], {}};
    for (size_t k = 0; k < header.size(); ++k)
      if (k != ni && k != pi) row.extra[header[k]] = rows[r][k];
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<KnotTableRow> read_knot_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open knot table " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_knot_table(buf.str());
}

}  // namespace khcube
