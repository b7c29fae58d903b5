#include "khcube_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>

#include "khcube/errors.hpp"
#include "khcube/homalg.hpp"
#include "khcube/invariants.hpp"
#include "khcube/khcomplex.hpp"
#include "khcube/parallel.hpp"
#include "khcube/triangle.hpp"
#include "khcube_cli/json_io.hpp"

namespace khcube::cli {

namespace {

// A property check failed; the JSON payload has already been written.
struct PropertyFailure {};

Json config_to_json(const RunConfig& cfg, const Ring& ring) {
  return {{"subcommand", cfg.subcommand},
          {"ring", ring.to_string()},
          {"variant", cfg.reduced ? "reduced" : "unreduced"},
          {"signs", cfg.rule == SignRule::delta ? "delta" : "tilde"},
          {"direction", cfg.direction == Direction::increasing ? "inc" : "dec"},
          {"max_crossings", cfg.max_crossings}};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot open " + path + " for writing");
  f << text;
}

void emit(const RunConfig& cfg, const Json& j, std::ostream& out) {
  if (cfg.output.empty()) {
    out << render(j);
  } else {
    write_file(cfg.output, render(j));
  }
}

BuildOptions build_options(const RunConfig& cfg, const Ring& ring) {
  BuildOptions o;
  o.variant = cfg.reduced ? Variant::reduced : Variant::unreduced;
  o.rule = cfg.rule;
  o.ring = ring;
  o.direction = cfg.direction;
  o.crossing_cap = cfg.max_crossings;
  o.threads = cfg.threads;
  return o;
}

void dumps(const RunConfig& cfg, const PlanarDiagram& d, const BigradedComplex& c) {
  if (!cfg.dump_complex.empty()) write_file(cfg.dump_complex, render(complex_to_json(c)));
  if (!cfg.dump_cube.empty()) write_file(cfg.dump_cube, render(cube_to_json(enumerate_cube(d, cfg.max_crossings, cfg.threads))));
}

Json base_document(const RunConfig& cfg, const PlanarDiagram& d, const Ring& ring) {
  return {{"diagram", render_pd(d)}, {"config", config_to_json(cfg, ring)}};
}

int cmd_kh(const RunConfig& cfg, std::ostream& out) {
  PlanarDiagram d = parse_pd(cfg.input);
  Ring ring = cfg.ring.value_or(Ring::integers());
  BigradedComplex c = build_complex(d, build_options(cfg, ring));
  dumps(cfg, d, c);
  BigradedHomology h = homology(c, ring, cfg.threads);
  Json doc = base_document(cfg, d, ring);
  doc["homology"] = homology_to_json(h);
  doc["total_rank"] = h.total_rank();
  if (ring.is_field()) doc["poincare"] = poincare_polynomial(h);
  emit(cfg, doc, out);
  return ok;
}

int cmd_khr(RunConfig cfg, std::ostream& out) {
  cfg.reduced = true;
  PlanarDiagram d = parse_pd(cfg.input);
  Ring ring = cfg.ring.value_or(Ring::rationals());
  BigradedComplex c = build_complex(d, build_options(cfg, ring));
  dumps(cfg, d, c);
  BigradedHomology h = homology(c, ring, cfg.threads);
  Json doc = base_document(cfg, d, ring);
  doc["homology"] = homology_to_json(h);
  doc["total_rank"] = h.total_rank();
  if (ring.is_field()) doc["poincare"] = poincare_polynomial(h);
  if (d.n_components() == 1) {
    // The certificate is defined by the rational rank.
    std::int64_t rank_Q = ring.kind == Ring::Kind::Q ? h.total_rank() : unknot_certificate(d, cfg.threads).rank;
    doc["invariants"] = {{"khr_rank_Q", rank_Q}, {"unknot_certified", rank_Q == 1}};
  }
  emit(cfg, doc, out);
  return ok;
}

int cmd_z4(RunConfig cfg, std::ostream& out) {
  PlanarDiagram d = parse_pd(cfg.input);
  Ring ring = cfg.ring.value_or(Ring::rationals());
  if (!ring.is_field()) throw ValidationError("z4 needs field coefficients (--ring Q, F2 or Fp=<p>)");
  cfg.direction = Direction::decreasing;
  cfg.reduced = false;
  BigradedComplex c = build_complex(d, build_options(cfg, ring));
  dumps(cfg, d, c);
  BigradedHomology h = homology(c, ring, cfg.threads);
  Z4Table t = z4_collapse(c, h, d, cfg.threads);
  Json doc = base_document(cfg, d, ring);
  doc["homology"] = homology_to_json(h);
  doc["z4"] = z4_to_json(t);
  emit(cfg, doc, out);
  if (!t.agree) throw PropertyFailure{};
  return ok;
}

int cmd_triangle(const RunConfig& cfg, std::ostream& out) {
  PlanarDiagram d = parse_pd(cfg.input);
  check_crossing_cap(d, cfg.max_crossings);
  ConeReport r = cone_decomposition(d, cfg.crossing, cfg.threads);
  Json doc = base_document(cfg, d, Ring::rationals());
  doc["triangle"] = cone_to_json(r);
  if (!cfg.emit_family.empty()) write_file(cfg.emit_family, render(triangle_to_json(skein_triangle(d, cfg.crossing))));
  emit(cfg, doc, out);
  if (!r.ok()) throw PropertyFailure{};
  return ok;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  PlanarDiagram d = parse_pd(cfg.input);
  check_crossing_cap(d, cfg.max_crossings);
  auto checks = verify_battery(d, cfg);
  Json list = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    all = all && c.ok;
  }
  Json doc = base_document(cfg, d, cfg.ring.value_or(Ring::integers()));
  doc["checks"] = list;
  doc["all_ok"] = all;
  emit(cfg, doc, out);
  if (!all) throw PropertyFailure{};
  return ok;
}

struct RowResult {
  Json json;
  bool cor15_violation = false, cor16_violation = false, unknot_violation = false;
  std::string error;
};

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  auto rows = read_knot_table(cfg.input);
  auto wants = [&](const char* name) { return std::find(cfg.checks.begin(), cfg.checks.end(), name) != cfg.checks.end(); };
  for (const auto& c : cfg.checks)
    if (c != "cor15" && c != "cor16" && c != "unknot") throw ValidationError("unknown check '" + c + "'");
  std::vector<RowResult> results(rows.size());
  // Rows run in parallel; each row's own work is sequential.
  parallel_for(rows.size(), cfg.threads, [&](std::size_t k) {
    const auto& row = rows[k];
    RowResult& res = results[k];
    try {
      PlanarDiagram d = parse_pd(row.pd);
      check_crossing_cap(d, cfg.max_crossings);
      std::optional<bool> alt;
      if (auto it = row.extra.find("alternating"); it != row.extra.end()) alt = it->second == "Y";
      Json j = {{"name", row.name}, {"diagram", render_pd(d)}, {"n_crossings", d.n_crossings()}};
      if (d.n_components() == 1) {
        InvariantReport r = check_bounds(d, alt, 1);
        j["invariants"] = invariants_to_json(r);
        j["sum_abs_alexander"] = coefficient_norm(r.alexander).to_string();
        res.cor15_violation = wants("cor15") && !r.bound_cor15_ok;
        res.cor16_violation = wants("cor16") && r.det_equality_ok && !*r.det_equality_ok;
        // Rows named 0_1 or unknot* are expected to certify; every other row must not.
        bool expect_unknot = row.name == "0_1" || row.name.rfind("unknot", 0) == 0;
        res.unknot_violation = wants("unknot") && r.unknot_certified != expect_unknot;
      } else {
        j["determinant"] = determinant(d).to_string();
      }
      res.json = std::move(j);
    } catch (const std::exception& e) {
      res.error = e.what();
      res.json = {{"name", row.name}, {"error", e.what()}};
    }
  });
  Json list = Json::array();
  int v15 = 0, v16 = 0, vu = 0, errors = 0;
  for (const auto& r : results) {
    list.push_back(r.json);
    v15 += r.cor15_violation;
    v16 += r.cor16_violation;
    vu += r.unknot_violation;
    errors += !r.error.empty();
  }
  Json summary = {{"rows", rows.size()}, {"errors", errors}, {"checks", cfg.checks}};
  Json violations;
  if (wants("cor15")) violations["cor15"] = v15;
  if (wants("cor16")) violations["cor16"] = v16;
  if (wants("unknot")) violations["unknot"] = vu;
  summary["violations"] = violations.is_null() ? Json::object() : violations;
  Json doc = {{"table", cfg.input}, {"config", config_to_json(cfg, Ring::rationals())}, {"rows", list}, {"summary", summary}};
  emit(cfg, doc, out);
  if (errors) return validation_failure;
  if (v15 + v16 + vu) throw PropertyFailure{};
  return ok;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  auto rows = read_knot_table(cfg.input);
  Ring ring = cfg.ring.value_or(Ring::integers());
  Json list = Json::array();
  double total = 0;
  for (const auto& row : rows) {
    PlanarDiagram d = parse_pd(row.pd);
    auto t0 = std::chrono::steady_clock::now();
    BigradedHomology h = homology(build_complex(d, build_options(cfg, ring)), ring, cfg.threads);
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += s;
    list.push_back({{"name", row.name}, {"n_crossings", d.n_crossings()}, {"seconds", s}, {"total_rank", h.total_rank()}});
  }
  Json doc = {{"table", cfg.input}, {"config", config_to_json(cfg, ring)}, {"threads", cfg.threads}, {"rows", list},
              {"total_seconds", total}};
  emit(cfg, doc, out);
  return ok;
}

int cmd_oslemma(const RunConfig& cfg, std::ostream& out) {
  std::ifstream f(cfg.input);
  if (!f) throw ValidationError("cannot read " + cfg.input);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  TriangleData t = triangle_from_json(j);
  OsLemmaVerdict v = os_lemma_check(t, cfg.extended);
  Json doc = {{"input", cfg.input}, {"verdict", verdict_to_json(v)}};
  emit(cfg, doc, out);
  if (!v.passed()) throw PropertyFailure{};
  return ok;
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& ring_text, std::string& signs, std::string& direction) {
  sub->add_option("--ring", ring_text, "coefficients: Z, Q, F2 or Fp=<p>");
  sub->add_flag("--reduced", cfg.reduced, "reduced theory at the marked component");
  sub->add_option("--signs", signs, "sign rule")->check(CLI::IsMember({"delta", "tilde"}));
  sub->add_option("--direction", direction, "cube direction")->check(CLI::IsMember({"inc", "dec"}));
  sub->add_option("--max-crossings", cfg.max_crossings, "crossing cap")->check(CLI::PositiveNumber);
  sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--dump-complex", cfg.dump_complex, "write the chain complex as JSON");
  sub->add_option("--dump-cube", cfg.dump_cube, "write the cube of resolutions as JSON");
  sub->add_option("-o,--output", cfg.output, "write the report here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string ring_text, signs = "tilde", direction = "inc", checks;
  CLI::App app{"Khovanov homology from planar diagram codes"};
  app.require_subcommand(1);
  struct Subcommand {
    const char* name;
    const char* help;
    const char* input;
  };
  const Subcommand subcommands[] = {
      {"kh", "bigraded Khovanov homology", "PD code or U<n>"},
      {"khr", "reduced homology and the unknot certificate", "PD code or U<n>"},
      {"z4", "Z/4 collapse of the bigrading, checked generatorwise", "PD code or U<n>"},
      {"triangle", "skein exact triangle at one crossing", "PD code"},
      {"verify", "all property checks for one diagram", "PD code or U<n>"},
      {"table", "invariant reports for every row of a knot table", "CSV path"},
      {"bench", "timings for every row of a knot table", "CSV path"},
      {"oslemma", "check the exact-triangle lemma on JSON triangle data", "JSON path"},
  };
  for (const auto& s : subcommands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", cfg.input, s.input)->required();
    add_common(sub, cfg, ring_text, signs, direction);
    if (std::string(s.name) == "triangle") {
      sub->add_option("--crossing", cfg.crossing, "1-based crossing index");
      sub->add_option("--emit-family", cfg.emit_family, "write the periodic skein family as triangle JSON");
    }
    if (std::string(s.name) == "table") sub->add_option("--check", checks, "comma list of cor15, cor16, unknot");
    if (std::string(s.name) == "oslemma") {
      sub->add_flag_function(
          "--basic", [&cfg](std::int64_t) { cfg.extended = false; },
          "check only the anti-chain and homotopy conditions");
    }
  }

  std::vector<const char*> raw;
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : validation_failure;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.rule = signs == "delta" ? SignRule::delta : SignRule::tilde_delta;
  cfg.direction = direction == "dec" ? Direction::decreasing : Direction::increasing;
  std::stringstream ss(checks);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) cfg.checks.push_back(item);

  try {
    if (!ring_text.empty()) cfg.ring = Ring::parse(ring_text);
    const std::string& c = cfg.subcommand;
    if (c == "kh") return cmd_kh(cfg, out);
    if (c == "khr") return cmd_khr(cfg, out);
    if (c == "z4") return cmd_z4(cfg, out);
    if (c == "triangle") return cmd_triangle(cfg, out);
    if (c == "verify") return cmd_verify(cfg, out);
    if (c == "table") return cmd_table(cfg, out);
    if (c == "bench") return cmd_bench(cfg, out);
    return cmd_oslemma(cfg, out);
  } catch (const PropertyFailure&) {
    err << "khcube: property check failed\n";
    return property_failure;
  } catch (const ValidationError& e) {
    err << "khcube: " << e.what() << "\n";
    return validation_failure;
  } catch (const ResourceError& e) {
    err << "khcube: " << e.what() << "\n";
    return resource_abort;
  } catch (const ContractViolation& e) {
    err << "khcube: " << e.what() << "\n";
    return validation_failure;
  }
}

}  // namespace khcube::cli
