#include "khcube_cli/json_io.hpp"

#include <string>

#include "khcube/errors.hpp"

namespace khcube::cli {

namespace {

std::string vertex_string(CubeVertex v, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if (v.bit(i)) s[i] = '1';
  return s;
}

std::string generator_string(const TensorGenerator& g) {
  std::string s;
  for (int k = 0; k < g.n; ++k) s += k == g.quotient_factor ? '1' : g.is_minus(k) ? '-' : '+';
  return s;
}

Json matrix_entries(const SparseIntMatrix& m) {
  Json out = Json::array();
  for (const auto& e : m.entries()) out.push_back(Json::array({e.row, e.col, integer_to_json(e.value)}));
  return out;
}

SparseIntMatrix matrix_from(const Json& j, int rows, int cols, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + ": expected a list of [row, col, value] triplets");
  std::vector<MatrixEntry> entries;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer())
      throw ValidationError(what + ": malformed triplet " + t.dump());
    int r = t[0].get<int>(), c = t[1].get<int>();
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      throw ValidationError(what + ": entry " + t.dump() + " is outside " + std::to_string(rows) + "x" + std::to_string(cols));
    entries.push_back({r, c, integer_from_json(t[2])});
  }
  return SparseIntMatrix::from_triplets(rows, cols, std::move(entries));
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v.is_small()) return v.small_value();
  return v.to_string();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer::parse(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

Json homology_to_json(const BigradedHomology& h) {
  Json out = Json::array();
  for (const auto& [b, g] : h.groups) {
    Json torsion = Json::array();
    for (const auto& t : g.torsion) torsion.push_back(t.to_string());
    out.push_back({{"h", b.h}, {"q", b.q}, {"free", g.free_rank}, {"torsion", torsion}});
  }
  return out;
}

Json z4_to_json(const Z4Table& t) {
  Json a, b;
  for (int z = 0; z < 4; ++z) {
    a[std::to_string(z)] = t.by_bidegree[z];
    b[std::to_string(z)] = t.by_generator[z];
  }
  return {{"by_bidegree", a}, {"by_generator", b}, {"generatorwise", t.generatorwise}, {"agree", t.agree}};
}

Json invariants_to_json(const InvariantReport& r) {
  Json alex = Json::array();
  for (const auto& c : r.alexander) alex.push_back(c.to_string());
  Json out = {{"khr_rank_Q", r.khr_rank_Q},
              {"determinant", r.determinant.to_string()},
              {"alexander", alex},
              {"unknot_certified", r.unknot_certified},
              {"bound_cor15_ok", r.bound_cor15_ok}};
  out["jones"] = r.jones ? Json(r.jones->to_string('q')) : Json(nullptr);
  out["det_equality_ok"] = r.det_equality_ok ? Json(*r.det_equality_ok) : Json(nullptr);
  return out;
}

Json cone_to_json(const ConeReport& r) {
  return {{"crossing", r.crossing},
          {"child0", r.child0},
          {"child1", r.child1},
          {"rank", r.rank_d},
          {"rank_child0", r.rank_child0},
          {"rank_child1", r.rank_child1},
          {"rank_subcube0", r.rank_sub0},
          {"rank_subcube1", r.rank_sub1},
          {"rank_induced_map", r.rank_f},
          {"exactness_defect", r.exactness_defect},
          {"children_match", r.children_match},
          {"bound_ok", r.bound_ok}};
}

Json verdict_to_json(const OsLemmaVerdict& v) {
  auto opt = [](const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); };
  return {{"anti_chain", v.anti_chain},
          {"homotopy", v.homotopy},
          {"quasi_iso", opt(v.quasi_iso)},
          {"exact", opt(v.exact)},
          {"cone_quasi_iso", opt(v.cone_quasi_iso)},
          {"hypotheses_hold", v.hypotheses_hold()},
          {"conclusions_hold", v.conclusions_hold()},
          {"passed", v.passed()},
          {"failures", v.failures}};
}

Json complex_to_json(const BigradedComplex& c) {
  const auto& m = c.meta;
  Json meta = {{"diagram", m.diagram},
               {"variant", m.variant == Variant::reduced ? "reduced" : "unreduced"},
               {"signs", m.rule == SignRule::delta ? "delta" : "tilde"},
               {"ring", m.ring.to_string()},
               {"direction", m.direction == Direction::increasing ? "inc" : "dec"},
               {"n_crossings", m.n_crossings},
               {"n_plus", m.n_plus},
               {"n_minus", m.n_minus},
               {"n_components", m.n_components}};
  Json blocks = Json::array();
  for (const auto& [b, basis] : c.blocks) {
    Json gens = Json::array();
    for (const auto& e : basis)
      gens.push_back({{"vertex", vertex_string(e.vertex, m.n_crossings)}, {"generator", generator_string(e.gen)}});
    blocks.push_back({{"h", b.h}, {"q", b.q}, {"basis", gens}});
  }
  Json diffs = Json::array();
  for (const auto& [b, mat] : c.differentials)
    diffs.push_back({{"h", b.h}, {"q", b.q}, {"rows", mat.rows()}, {"cols", mat.cols()}, {"entries", matrix_entries(mat)}});
  return {{"meta", meta}, {"blocks", blocks}, {"differentials", diffs}};
}

Json cube_to_json(const CubeDescriptor& cube) {
  Json res = Json::array();
  for (const auto& r : cube.resolutions)
    res.push_back({{"vertex", vertex_string(r.vertex, cube.n_crossings)},
                   {"circles", r.circles},
                   {"marked_circle", r.marked_circle}});
  Json edges = Json::array();
  for (const auto& e : cube.edges)
    edges.push_back({{"from", vertex_string(e.from, cube.n_crossings)},
                     {"to", vertex_string(e.to, cube.n_crossings)},
                     {"crossing", e.changed_crossing},
                     {"kind", e.kind == CobordismKind::merge ? "merge" : "split"}});
  return {{"n_crossings", cube.n_crossings}, {"resolutions", res}, {"edges", edges}};
}

TriangleData triangle_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("triangle data must be a JSON object");
  Ring ring = Ring::rationals();
  if (j.contains("ring")) ring = Ring::parse(j.at("ring").get<std::string>());
  if (!ring.is_field()) throw ValidationError("triangle data needs field coefficients");
  if (!j.contains("complexes") || !j["complexes"].is_array() || j["complexes"].size() != 3)
    throw ValidationError("triangle data needs exactly three complexes");
  TriangleData t;
  for (int i = 0; i < 3; ++i) {
    const Json& c = j["complexes"][i];
    ChainComplex& cc = t.c[i];
    cc.ring = ring;
    if (c.contains("degrees")) {
      cc.degree = c["degrees"].get<std::vector<int>>();
    } else if (c.contains("dim")) {
      cc.degree.assign(c["dim"].get<int>(), 0);
    } else {
      throw ValidationError("complex " + std::to_string(i) + " needs \"degrees\" or \"dim\"");
    }
    cc.d = matrix_from(c.value("d", Json::array()), cc.dim(), cc.dim(), "complex " + std::to_string(i));
  }
  auto maps = [&](const char* key, int shift, std::array<std::optional<SparseIntMatrix>, 3>& out) {
    if (!j.contains(key)) return;
    const Json& list = j[key];
    if (!list.is_array() || list.size() != 3) throw ValidationError(std::string("\"") + key + "\" must list three maps");
    for (int i = 0; i < 3; ++i) {
      if (list[i].is_null()) continue;
      int to = ((i - shift) % 3 + 3) % 3;
      out[i] = matrix_from(list[i], t.c[to].dim(), t.c[i].dim(), std::string(key) + std::to_string(i));
    }
  };
  maps("f", 1, t.f);
  maps("j", 2, t.j);
  return t;
}

Json triangle_to_json(const TriangleData& t) {
  Json complexes = Json::array();
  for (const auto& c : t.c) complexes.push_back({{"degrees", c.degree}, {"d", matrix_entries(c.d)}});
  auto maps = [](const std::array<std::optional<SparseIntMatrix>, 3>& ms) {
    Json out = Json::array();
    for (const auto& m : ms) out.push_back(m ? matrix_entries(*m) : Json(nullptr));
    return out;
  };
  return {{"ring", t.c[0].ring.to_string()}, {"complexes", complexes}, {"f", maps(t.f)}, {"j", maps(t.j)}};
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace khcube::cli
