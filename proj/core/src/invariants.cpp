#include "khcube/invariants.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "khcube/errors.hpp"
#include "khcube/homalg.hpp"
#include "khcube/khcomplex.hpp"

namespace khcube {

namespace {

int other_slot(const PlanarDiagram& d, int slot) {
  int label = d.crossings()[slot / 4].edges[slot % 4];
  Slot h = d.head(label), t = d.tail(label);
  int a = 4 * h.crossing + h.position, b = 4 * t.crossing + t.position;
  return a == slot ? b : a;
}

std::int64_t reduced_rank_Q(const PlanarDiagram& d, int threads) {
  BuildOptions o;
  o.variant = Variant::reduced;
  o.ring = Ring::rationals();
  o.threads = threads;
  return homology(build_complex(d, o), threads).total_rank();
}

}  // namespace

UnknotCertificate unknot_certificate(const PlanarDiagram& d, int threads) {
  if (d.n_components() != 1) throw ContractViolation("the unknot certificate applies to knots only");
  UnknotCertificate c;
  c.rank = reduced_rank_Q(d, threads);
  c.is_unknot = c.rank == 1;
  return c;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Integer(1);
  Integer sign(1), prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int swap = -1;
      for (int i = k + 1; i < n && swap < 0; ++i)
        if (!m[i][k].is_zero()) swap = i;
      if (swap < 0) return Integer(0);
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = Integer::exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer determinant(const PlanarDiagram& d) {
  const int N = d.n_crossings();
  if (N == 0) return Integer(d.free_loops() <= 1 ? 1 : 0);
  if (d.free_loops() > 0) return Integer(0);

  // A disconnected projection is a split diagram.
  std::vector<int> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int s = 0; s < 4 * N; ++s) parent[find(s / 4)] = find(other_slot(d, s) / 4);
  for (int c = 0; c < N; ++c)
    if (find(c) != find(0)) return Integer(0);

  // Faces by walking corners: corner k of a crossing sits between positions k
  // and k+1; leave along position k+1 and continue at the arrival position.
  std::vector<int> face(4 * N, -1);
  int n_faces = 0;
  for (int start = 0; start < 4 * N; ++start) {
    if (face[start] >= 0) continue;
    for (int corner = start; face[corner] < 0;) {
      face[corner] = n_faces;
      corner = other_slot(d, 4 * (corner / 4) + (corner % 4 + 1) % 4);
    }
    ++n_faces;
  }

  // Two-colour the faces: corners k and k+2 share a colour, k and k+1 do not.
  std::vector<int> colour(n_faces, -1);
  std::vector<std::vector<std::pair<int, int>>> adj(n_faces);
  for (int c = 0; c < N; ++c)
    for (int k = 0; k < 4; ++k) {
      int f = face[4 * c + k], g = face[4 * c + (k + 1) % 4];
      adj[f].push_back({g, 1});
      adj[g].push_back({f, 1});
    }
  colour[face[0]] = 0;
  std::vector<int> stack{face[0]};
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (auto [g, diff] : adj[f]) {
      int want = colour[f] ^ diff;
      if (colour[g] < 0) {
        colour[g] = want;
        stack.push_back(g);
      } else if (colour[g] != want) {
        throw ContractViolation("faces admit no checkerboard colouring");
      }
    }
  }

  std::vector<int> white_index(n_faces, -1);
  int n_white = 0;
  for (int f = 0; f < n_faces; ++f)
    if (colour[f] == 0) white_index[f] = n_white++;
  std::vector<std::vector<Integer>> G(n_white, std::vector<Integer>(n_white));
  for (int c = 0; c < N; ++c) {
    // Corners 1 and 3 are the regions swept by the over strand turning counterclockwise.
    bool odd_white = colour[face[4 * c + 1]] == 0;
    int eta = odd_white ? 1 : -1;
    int i = white_index[face[4 * c + (odd_white ? 1 : 0)]];
    int j = white_index[face[4 * c + (odd_white ? 3 : 2)]];
    if (i == j) continue;
    G[i][j] -= Integer(eta);
    G[j][i] -= Integer(eta);
    G[i][i] += Integer(eta);
    G[j][j] += Integer(eta);
  }
  if (n_white <= 1) return Integer(1);
  G.pop_back();
  for (auto& row : G) row.pop_back();
  return bareiss_determinant(std::move(G)).abs();
}

std::vector<Integer> alexander_polynomial(const PlanarDiagram& d) {
  if (d.n_components() != 1) throw ContractViolation("the Alexander polynomial here is for knots only");
  const int N = d.n_crossings();
  if (N == 0) return {Integer(1)};

  // Wirtinger arcs: edges joined through over-passes.
  std::vector<int> parent(d.n_edges() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& x : d.crossings()) parent[find(x.edges[1])] = find(x.edges[3]);
  std::map<int, int> arc_of_root;
  for (int e = 1; e <= d.n_edges(); ++e) arc_of_root.try_emplace(find(e), static_cast<int>(arc_of_root.size()));
  const int n_arcs = static_cast<int>(arc_of_root.size());
  auto arc = [&](int e) { return arc_of_root.at(find(e)); };

  // Fox derivative rows, entries c0 + c1 t.
  struct Lin {
    Integer c0, c1;
  };
  std::vector<std::vector<Lin>> M(N, std::vector<Lin>(n_arcs));
  for (int r = 0; r < N; ++r) {
    const auto& x = d.crossings()[r].edges;
    int k = arc(x[1]), i = arc(x[0]), j = arc(x[2]);
    // Rows sum to zero at t = 1; the over arc gets (1 - t) or (t - 1) by sign.
    int s = d.crossing_sign(r);
    M[r][k].c0 += Integer(s);
    M[r][k].c1 -= Integer(s);
    if (s > 0) {
      M[r][i].c1 += Integer(1);
      M[r][j].c0 -= Integer(1);
    } else {
      M[r][i].c0 += Integer(1);
      M[r][j].c1 -= Integer(1);
    }
  }
  const int m = std::min(N, n_arcs) - 1;
  if (m <= 0) return {Integer(1)};

  // Degree is at most m: evaluate at m + 1 points and interpolate.
  const int n_points = m + 1;
  std::vector<mpq_class> xs(n_points), ys(n_points);
  for (int p = 0; p < n_points; ++p) {
    Integer t(p + 2);
    std::vector<std::vector<Integer>> A(m, std::vector<Integer>(m));
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) A[r][c] = M[r][c].c0 + M[r][c].c1 * t;
    xs[p] = p + 2;
    ys[p] = mpq_class(bareiss_determinant(std::move(A)).to_mpz());
  }
  // Newton divided differences, then expand to the monomial basis.
  std::vector<mpq_class> coef = ys;
  for (int j = 1; j < n_points; ++j)
    for (int i = n_points - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<mpq_class> poly(n_points, 0);
  for (int i = n_points - 1; i >= 0; --i) {
    // poly = poly * (t - xs[i]) + coef[i]
    std::vector<mpq_class> next(n_points, 0);
    for (int k = 0; k < n_points; ++k) {
      if (k + 1 < n_points) next[k + 1] += poly[k];
      next[k] -= poly[k] * xs[i];
    }
    next[0] += coef[i];
    poly = std::move(next);
  }

  std::vector<Integer> out;
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) throw ContractViolation("Alexander interpolation produced a non-integer coefficient");
    out.push_back(Integer(mpz_class(c.get_num())));
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  auto first = std::find_if(out.begin(), out.end(), [](const Integer& v) { return !v.is_zero(); });
  out.erase(out.begin(), first);
  if (out.empty()) throw ContractViolation("Alexander polynomial of a knot cannot vanish");
  if (out.back().sign() < 0)
    for (auto& c : out) c = -c;
  if (!std::equal(out.begin(), out.end(), out.rbegin()))
    throw ContractViolation("Alexander polynomial is not symmetric; diagram orientation is inconsistent");
  return out;
}

Laurent jones_oracle(const PlanarDiagram& d, int cap) {
  const int N = d.n_crossings();
  if (N > cap) {
    std::ostringstream msg;
    msg << "Jones state sum is capped at " << cap << " crossings";
    throw ResourceError(msg.str());
  }
  std::vector<int> partner(4 * N);
  for (int s = 0; s < 4 * N; ++s) partner[s] = other_slot(d, s);

  // counts[(a-exponent, loops)]
  std::map<std::pair<int, int>, std::int64_t> counts;
  std::vector<std::uint32_t> seen(4 * N, 0);
  std::uint32_t stamp = 0;
  for (std::uint32_t state = 0; state < (1u << N); ++state) {
    ++stamp;
    int loops = 0;
    for (int s = 0; s < 4 * N; ++s) {
      if (seen[s] == stamp) continue;
      ++loops;
      int y = s;
      do {
        seen[y] = stamp;
        int z = partner[y];
        seen[z] = stamp;
        int c = z / 4, p = z % 4;
        // A-smoothing pairs positions 0-1 and 2-3; B-smoothing pairs 0-3 and 1-2.
        int q = (state >> c) & 1u ? 3 - p : p ^ 1;
        y = 4 * c + q;
      } while (y != s);
    }
    int ones = std::popcount(state);
    counts[{N - 2 * ones, loops + d.free_loops()}] += 1;
  }

  // Bracket in A, with d = -A^2 - A^-2 per loop.
  Laurent loop = Laurent::monomial(-1, 2) + Laurent::monomial(-1, -2);
  Laurent bracket;
  for (const auto& [key, n] : counts)
    bracket += Laurent::monomial(Integer(n), key.first) * loop.pow(key.second);

  int writhe = 0;
  for (int i = 0; i < N; ++i) writhe += d.crossing_sign(i);
  Laurent f = bracket.shifted(-3 * writhe);
  if (writhe % 2) f = Laurent() - f;

  // A^{2k} -> (-q)^{-k}
  Laurent out;
  for (const auto& [e, c] : f.terms()) {
    if (e % 2) throw ContractViolation("odd power of A after writhe normalization");
    int k = e / 2;
    out.add(-k, k % 2 ? -c : c);
  }
  return out;
}

Integer determinant_from_jones(const Laurent& jones) {
  Laurent J = jones.divided_by(Laurent::monomial(1, 1) + Laurent::monomial(1, -1));
  Integer re(0), im(0);
  for (const auto& [e, c] : J.terms()) {
    switch (((e % 4) + 4) % 4) {
      case 0: re += c; break;
      case 1: im += c; break;
      case 2: re -= c; break;
      case 3: im -= c; break;
    }
  }
  if (!re.is_zero() && !im.is_zero()) throw ContractViolation("J(i) is not a real or imaginary integer");
  return re.is_zero() ? im.abs() : re.abs();
}

Integer coefficient_norm(const std::vector<Integer>& coefficients) {
  Integer s(0);
  for (const auto& c : coefficients) s += c.abs();
  return s;
}

InvariantReport check_bounds(const PlanarDiagram& d, std::optional<bool> alternating_hint, int threads) {
  InvariantReport r;
  r.khr_rank_Q = d.n_components() > 0 ? reduced_rank_Q(d, threads) : 0;
  r.determinant = determinant(d);
  bool knot = d.n_components() == 1;
  if (knot) r.alexander = alexander_polynomial(d);
  if (d.n_crossings() <= kJonesOracleCap) r.jones = jones_oracle(d);
  r.unknot_certified = knot && r.khr_rank_Q == 1;
  r.bound_cor15_ok = !knot || Integer(r.khr_rank_Q) >= coefficient_norm(r.alexander);
  if (alternating_hint.value_or(false)) r.det_equality_ok = Integer(r.khr_rank_Q) == r.determinant;
  return r;
}

}  // namespace khcube
