#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <stdexcept>
#include <map>
#include <utility>

namespace khtest {

using khcube::Integer;

std::filesystem::path data_dir() { return KHCUBE_DATA_DIR; }

khcube::PlanarDiagram random_braid_closure(std::mt19937_64& rng, int n, int max_strands) {
  const int strands = std::uniform_int_distribution<int>(2, std::max(2, max_strands))(rng);
  int next_id = 1;
  std::vector<int> start(strands), cur(strands);
  for (int p = 0; p < strands; ++p) start[p] = cur[p] = next_id++;
  std::vector<std::array<int, 4>> tuples;
  for (int k = 0; k < n; ++k) {
    int i = std::uniform_int_distribution<int>(0, strands - 2)(rng);
    bool left_under = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    // Strands run upwards; the one entering bottom-left leaves top-right.
    int a_in = cur[i], b_in = cur[i + 1], a_out = next_id++, b_out = next_id++;
    if (left_under) {
      tuples.push_back({a_in, b_in, a_out, b_out});
    } else {
      tuples.push_back({b_in, a_out, b_out, a_in});
    }
    cur[i] = b_out;
    cur[i + 1] = a_out;
  }
  // Close up: the top of each position is glued to its bottom.
  std::map<int, int> glue;
  int free_loops = 0;
  for (int p = 0; p < strands; ++p) {
    if (cur[p] == start[p]) {
      ++free_loops;
    } else {
      glue[cur[p]] = start[p];
    }
  }
  for (auto& t : tuples)
    for (int& e : t)
      if (auto it = glue.find(e); it != glue.end()) e = it->second;
  return khcube::PlanarDiagram::from_unoriented(tuples, free_loops);
}

khcube::SparseIntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, double density, int range) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> value(-range, range);
  std::vector<khcube::MatrixEntry> e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (keep(rng)) e.push_back({r, c, value(rng)});
  return khcube::SparseIntMatrix::from_triplets(rows, cols, std::move(e));
}

int dense_rank(Dense m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  Integer prev(1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (!m[r][c].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int k = c + 1; k < cols; ++k) m[r][k] = Integer::exact_div(m[rank][c] * m[r][k] - m[r][c] * m[rank][k], prev);
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

std::vector<Integer> dense_smith(Dense a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<Integer> diag;
  for (int t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block
      int pr = -1, pc = -1;
      for (int r = t; r < rows; ++r)
        for (int c = t; c < cols; ++c)
          if (!a[r][c].is_zero() && (pr < 0 || Integer::compare_abs(a[r][c], a[pr][pc]) < 0)) {
            pr = r;
            pc = c;
          }
      if (pr < 0) goto done;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (int r = t + 1; r < rows; ++r) {
        Integer q, rem;
        Integer::divmod(a[r][t], a[t][t], q, rem);
        for (int c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        clean = clean && a[r][t].is_zero();
      }
      for (int c = t + 1; c < cols; ++c) {
        Integer q, rem;
        Integer::divmod(a[t][c], a[t][t], q, rem);
        for (int r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        clean = clean && a[t][c].is_zero();
      }
      if (!clean) continue;
      // divisibility: fold in any entry the pivot does not divide
      int bad_r = -1;
      for (int r = t + 1; r < rows && bad_r < 0; ++r)
        for (int c = t + 1; c < cols; ++c) {
          Integer q, rem;
          Integer::divmod(a[r][c], a[t][t], q, rem);
          if (!rem.is_zero()) {
            bad_r = r;
            break;
          }
        }
      if (bad_r < 0) break;
      for (int c = t; c < cols; ++c) a[t][c] += a[bad_r][c];
    }
    diag.push_back(a[t][t].abs());
  }
done:
  return diag;
}

namespace {

std::vector<Integer> prime_powers(Integer n) {
  std::vector<Integer> out;
  for (std::int64_t p = 2; Integer(p) * Integer(p) <= n; ++p) {
    Integer pp(1);
    while (true) {
      Integer q, r;
      Integer::divmod(n, Integer(p), q, r);
      if (!r.is_zero()) break;
      n = q;
      pp *= Integer(p);
    }
    if (!(pp == Integer(1))) out.push_back(pp);
  }
  if (!(n == Integer(1))) out.push_back(n);
  return out;
}

}  // namespace

khcube::BigradedHomology dense_homology(const khcube::BigradedComplex& c) {
  khcube::BigradedHomology h;
  h.ring = khcube::Ring::integers();
  for (const auto& [b, basis] : c.blocks) {
    auto out = c.differential(b);
    auto in = c.differential({b.h - 1, b.q});
    int r_out = dense_rank(out.to_dense());
    auto snf = dense_smith(in.to_dense());
    int r_in = 0;
    khcube::HomologyGroup g;
    for (const auto& x : snf) {
      if (x.is_zero()) continue;
      ++r_in;
      if (!(x == Integer(1)))
        for (auto& pp : prime_powers(x)) g.torsion.push_back(pp);
    }
    std::sort(g.torsion.begin(), g.torsion.end());
    g.free_rank = static_cast<std::int64_t>(basis.size()) - r_out - r_in;
    if (g.free_rank || !g.torsion.empty()) h.groups[b] = g;
  }
  return h;
}

}  // namespace khtest

namespace khtest {

std::vector<Term> parse_polynomial(std::string_view s) {
  std::vector<Term> out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && s[i] == ' ') ++i;
  };
  auto number = [&] {
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return std::stoi(std::string(s.substr(start, i - start)));
  };
  skip();
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    Term t{Integer(sign), {}};
    bool need_factor = true;
    while (need_factor && i < s.size()) {
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        t.coef = t.coef * Integer(number());
      } else if (std::isalpha(static_cast<unsigned char>(s[i]))) {
        char var = s[i++];
        int e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          if (s[i] == '(') {
            ++i;
            e = number();
            ++i;  // ')'
          } else {
            e = number();
          }
        }
        t.exp[var] += e;
      } else {
        throw std::runtime_error("bad polynomial near position " + std::to_string(i));
      }
      skip();
      need_factor = i < s.size() && s[i] == '*';
      if (need_factor) {
        ++i;
        skip();
      }
    }
    out.push_back(std::move(t));
    skip();
  }
  return out;
}

std::vector<Integer> parse_alexander(std::string_view text) {
  std::map<int, Integer> c;
  for (const auto& t : parse_polynomial(text)) {
    int e = t.exp.count('t') ? t.exp.at('t') : 0;
    c[e] += t.coef;
  }
  std::vector<Integer> out;
  if (c.empty()) return out;
  for (int e = c.begin()->first; e <= c.rbegin()->first; ++e) out.push_back(c.count(e) ? c[e] : Integer(0));
  return out;
}

khcube::BigradedHomology parse_khovanov(std::string_view text, const khcube::Ring& ring) {
  khcube::BigradedHomology h;
  h.ring = ring;
  for (const auto& t : parse_polynomial(text)) {
    auto get = [&](char v) { return t.exp.count(v) ? t.exp.at(v) : 0; };
    khcube::Bidegree b{get('t'), get('q')};
    auto& g = h.groups[b];
    if (int k = get('T'); k > 0) {
      for (long long c = std::stoll(t.coef.to_string()); c > 0; --c) g.torsion.push_back(Integer(k));
      std::sort(g.torsion.begin(), g.torsion.end());
    } else {
      g.free_rank += std::stoll(t.coef.to_string());
    }
  }
  return h;
}

std::vector<std::map<std::string, std::string>> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  auto split = [](std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> f;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') {
        quoted = !quoted;
      } else if (ch == ',' && !quoted) {
        f.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    f.push_back(cur);
    return f;
  };
  std::string line;
  std::getline(in, line);
  const auto header = split(line);
  std::vector<std::map<std::string, std::string>> rows;
  while (std::getline(in, line)) {
    auto f = split(line);
    if (f.size() == 1 && f[0].empty()) continue;
    if (f.size() != header.size()) throw std::runtime_error("bad row in " + path.string() + ": " + line);
    auto& row = rows.emplace_back();
    for (std::size_t k = 0; k < f.size(); ++k) row[header[k]] = f[k];
  }
  return rows;
}

std::map<std::string, ReferenceRow> reference_table() {
  std::map<std::string, ReferenceRow> out;
  for (auto& f : read_csv(data_dir() / "reference" / "knotinfo_invariants.csv")) {
    ReferenceRow r;
    r.name = f.at("name");
    r.determinant = Integer(static_cast<std::int64_t>(std::stoll(f.at("determinant"))));
    r.alexander = parse_alexander(f.at("alexander"));
    r.kh_integral = parse_khovanov(f.at("kh_integral"), khcube::Ring::integers());
    r.khr_rational = parse_khovanov(f.at("khr_rational"), khcube::Ring::rationals());
    out[r.name] = std::move(r);
  }
  return out;
}

}  // namespace khtest
