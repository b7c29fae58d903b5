#include <string>

#include "khcube/homalg.hpp"
#include "khcube/invariants.hpp"
#include "khcube/khcomplex.hpp"
#include "khcube/spectral.hpp"
#include "khcube/triangle.hpp"
#include "khcube_cli/cli.hpp"

namespace khcube::cli {

namespace {

BigradedHomology kh(const PlanarDiagram& d, Ring ring, const RunConfig& cfg, Direction dir = Direction::increasing,
                    Variant variant = Variant::unreduced, SignRule rule = SignRule::tilde_delta) {
  BuildOptions o;
  o.ring = ring;
  o.direction = dir;
  o.variant = variant;
  o.rule = rule;
  o.crossing_cap = cfg.max_crossings;
  o.threads = cfg.threads;
  return homology(build_complex(d, o), ring, cfg.threads);
}

BigradedHomology negate_degrees(const BigradedHomology& h) {
  BigradedHomology out;
  out.ring = h.ring;
  for (const auto& [b, g] : h.groups) out.groups[{-b.h, -b.q}] = g;
  return out;
}

}  // namespace

std::vector<Check> verify_battery(const PlanarDiagram& d, const RunConfig& cfg) {
  std::vector<Check> out;
  auto add = [&](std::string name, bool ok, std::string detail = {}) { out.push_back({std::move(name), ok, std::move(detail)}); };
  const int N = d.n_crossings();
  const Ring Z = Ring::integers(), Q = Ring::rationals(), F2 = Ring::prime_field(2);

  // diagram
  PlanarDiagram m = mirror(d);
  WritheCounts w = writhe_counts(d), wm = writhe_counts(m);
  add("mirror_preserves_components", count_components(m) == count_components(d));
  add("mirror_swaps_writhe", w.n_plus == wm.n_minus && w.n_minus == wm.n_plus);

  // khcomplex
  if (N <= 16) {
    add("two_face_delta", two_face_condition(SignRule::delta, N));
    add("two_face_tilde_delta", two_face_condition(SignRule::tilde_delta, N));
    add("sign_rules_differ_by_weight", sign_rules_differ_by_weight(N));
  }
  for (SignRule rule : {SignRule::delta, SignRule::tilde_delta})
    for (Direction dir : {Direction::increasing, Direction::decreasing}) {
      BuildOptions o;
      o.rule = rule;
      o.direction = dir;
      o.crossing_cap = cfg.max_crossings;
      o.threads = cfg.threads;
      add(std::string("d_squared_") + (rule == SignRule::delta ? "delta" : "tilde") + (dir == Direction::increasing ? "_inc" : "_dec"),
          verify_d_squared(build_complex(d, o), cfg.threads));
    }
  BigradedHomology hz = kh(d, Z, cfg);
  add("sign_rule_independence", kh(d, Z, cfg, Direction::increasing, Variant::unreduced, SignRule::delta) == hz);
  add("mode_duality", kh(d, Z, cfg, Direction::decreasing) == kh(m, Z, cfg));
  BigradedHomology hq = kh(d, Q, cfg);
  add("mirror_symmetry_Q", hq == negate_degrees(kh(m, Q, cfg)));
  if (N <= kJonesOracleCap) {
    Laurent chi;
    for (const auto& [q, v] : euler_characteristic(hz)) chi.add(q, Integer(v));
    Laurent j = jones_oracle(d);
    add("euler_characteristic_is_jones", chi == j, j.to_string('q'));
  }
  Z4Table z4 = z4_collapse(d, Q, cfg.threads);
  add("z4_binnings_agree", z4.agree);
  if (d.n_components() > 0) {
    std::int64_t un = kh(d, F2, cfg).total_rank(), red = kh(d, F2, cfg, Direction::increasing, Variant::reduced).total_rank();
    add("reduced_unreduced_F2_parity", un == 2 * red, std::to_string(un) + " = 2 x " + std::to_string(red));
  }

  // homalg: torsion orders are prime powers and free ranks match Q
  bool torsion_ok = true;
  for (const auto& [b, g] : hz.groups)
    for (const auto& t : g.torsion) torsion_ok = torsion_ok && prime_power_decomposition(t).size() == 1;
  add("torsion_prime_powers", torsion_ok);
  bool free_ok = true;
  for (const auto& [b, g] : hz.groups) free_ok = free_ok && hq.rank_at(b) >= g.free_rank;
  add("rational_rank_dominates_free_rank", free_ok && hq.total_rank() >= hz.total_rank());

  // spectral
  {
    BuildOptions o;
    o.ring = Q;
    o.crossing_cap = cfg.max_crossings;
    auto pages = spectral_pages(cube_filtration(build_complex(d, o), Q), 2, cfg.threads);
    bool mono = pages[1].total <= pages[0].total;
    add("spectral_E2_is_homology", pages[1].total == hq.total_rank() && pages[1].converged && mono,
        "E2 rank " + std::to_string(pages[1].total));
  }
  if (N <= 10)
    for (int i = 1; i <= N; ++i) {
      ConeReport r = cone_decomposition(d, i, cfg.threads);
      add("cone_exact_at_" + std::to_string(i), r.ok(), "defect " + std::to_string(r.exactness_defect));
    }

  // invariants
  if (d.n_components() == 1) {
    InvariantReport r = check_bounds(d, {}, cfg.threads);
    add("cor15_bound", r.bound_cor15_ok, std::to_string(r.khr_rank_Q) + " >= " + coefficient_norm(r.alexander).to_string());
    if (r.jones) add("determinant_paths_agree", determinant_from_jones(*r.jones) == r.determinant, r.determinant.to_string());
    add("determinant_mirror_invariant", determinant(m) == r.determinant);
    add("alexander_mirror_invariant", alexander_polynomial(m) == r.alexander);
  }
  return out;
}

}  // namespace khcube::cli
