#include <doctest.h>

#include "khcube/diagram.hpp"
#include "khcube/errors.hpp"
#include "oracles.hpp"

using namespace khcube;

namespace {
const char* kTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
const char* kTrefoilRight = "PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]";
const char* kHopf = "PD[X[4,1,3,2],X[2,3,1,4]]";
}  // namespace

TEST_CASE("parse_pd accepts kinks, knots and unlink shorthand") {
  auto kink = parse_pd("PD[X[1,1,2,2]]");
  CHECK(kink.n_crossings() == 1);
  CHECK(kink.n_components() == 1);

  auto t = parse_pd(kTrefoil);
  CHECK(t.n_crossings() == 3);
  CHECK(t.n_components() == 1);

  auto u2 = parse_pd("U2");
  CHECK(u2.n_crossings() == 0);
  CHECK(u2.n_components() == 2);
  CHECK(parse_pd("U0").n_components() == 0);

  auto split = parse_pd(std::string(kTrefoil) + "U1");
  CHECK(split.n_components() == 2);
  CHECK(split.free_loops() == 1);
}

TEST_CASE("parse_pd reports every defect") {
  try {
    parse_pd("PD[X[1,4,2,3]]");
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    std::string what = e.what();
    CHECK(what.find("odd occurrence") != std::string::npos);
    CHECK(what.find("non-contiguous") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_pd("PD[X[1,2,3]]"), ValidationError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,1,2,2]"), ValidationError);
  CHECK_THROWS_AS(parse_pd("hello"), ValidationError);
  try {
    parse_pd("PD[X[1,1,2,2]]]");
    FAIL("expected a syntax error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("validate flags inconsistent traversal") {
  // Both ends of edge 1 are incoming under-strand slots.
  std::vector<Crossing> clash{{{1, 2, 3, 4}}, {{1, 4, 3, 2}}};
  CHECK_FALSE(validate(clash).ok);
  // Each strand closes on itself through opposite slots: a torus, not a plane.
  std::vector<Crossing> torus{{{1, 2, 1, 2}}};
  auto r = validate(torus);
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.defects.empty());
  CHECK(r.defects.back().find("non-planar") != std::string::npos);
  std::vector<Crossing> good{{{1, 1, 2, 2}}};
  CHECK(validate(good).ok);
}

TEST_CASE("render and parse round trip") {
  for (const char* s : {kTrefoil, kTrefoilRight, kHopf, "PD[X[1,2,2,1]]"}) {
    auto d = parse_pd(s);
    CHECK(parse_pd(render_pd(d)) == d);
  }
  CHECK(render_pd(parse_pd("U3")) == "U3");
}

TEST_CASE("writhe, components and mirror") {
  auto t = parse_pd(kTrefoilRight);
  CHECK(writhe_counts(t) == WritheCounts{3, 0});
  auto m = mirror(t);
  CHECK(writhe_counts(m) == WritheCounts{0, 3});
  CHECK(mirror(m) == t);
  CHECK(count_components(m) == count_components(t));

  auto hopf = parse_pd(kHopf);
  CHECK(count_components(hopf) == 2);
  auto wc = writhe_counts(hopf);
  CHECK(wc.n_plus + wc.n_minus == 2);
  CHECK(wc.n_plus * wc.n_minus == 0);
}

TEST_CASE("edge labels increase along each component and the base holds edge 1") {
  auto t = parse_pd(kTrefoil);
  REQUIRE(t.components().size() == 1);
  const auto& c = t.components()[0];
  for (std::size_t k = 0; k + 1 < c.size(); ++k) CHECK(c[k + 1] == c[k] + 1);
  CHECK(t.marked_edge() == 1);
  auto hopf = parse_pd(kHopf);
  CHECK(hopf.component_of_edge(1) == hopf.base_component());
  auto other = hopf.with_base_component(1);
  CHECK(other.component_of_edge(other.marked_edge()) == 1);
}

TEST_CASE("smoothing a crossing") {
  auto t = parse_pd(kTrefoil);
  auto a = smooth_crossing(t, 0, 0), b = smooth_crossing(t, 0, 1);
  CHECK(a.n_crossings() == 2);
  CHECK(b.n_crossings() == 2);
  // One smoothing of a trefoil crossing is a Hopf link, the other an unknot.
  CHECK(a.n_components() + b.n_components() == 3);
  auto kink = parse_pd("PD[X[1,1,2,2]]");
  CHECK(smooth_crossing(kink, 0, 0).n_components() + smooth_crossing(kink, 0, 1).n_components() == 3);
}

TEST_CASE("knot tables") {
  auto rows = parse_knot_table("name,pd,alternating\n3_1,\"PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]\",Y\n0_1,U1,Y\n");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].name == "3_1");
  CHECK(rows[0].extra.at("alternating") == "Y");
  CHECK(parse_pd(rows[1].pd).n_components() == 1);
  CHECK_THROWS_AS(parse_knot_table("name,code\nx,U1\n"), ValidationError);

  auto bundled = read_knot_table(khtest::data_dir() / "knots9.csv");
  CHECK(bundled.size() == 85);
  for (const auto& r : bundled) CHECK(parse_pd(r.pd).n_components() == 1);
}

TEST_CASE("random braid closures are valid diagrams") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    auto d = khtest::random_braid_closure(rng, 1 + k % 10);
    CHECK(validate(d).ok);
    CHECK(parse_pd(render_pd(d)) == d);
  }
}
