#include <doctest.h>

#include "khcube/cube.hpp"
#include "khcube/errors.hpp"

using namespace khcube;

namespace {
const char* kTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
const char* kFigure8 = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";
const char* kHopf = "PD[X[4,1,3,2],X[2,3,1,4]]";
}  // namespace

TEST_CASE("cube order is by weight, then lexicographic in v_1..v_N") {
  auto v = cube_vertices(3);
  REQUIRE(v.size() == 8);
  CHECK(v[0].bits == 0b000);
  CHECK(v[1].bits == 0b100);  // (0,0,1) before (0,1,0) before (1,0,0)
  CHECK(v[3].bits == 0b001);
  CHECK(v[7].bits == 0b111);
  for (std::size_t k = 0; k + 1 < v.size(); ++k) CHECK(cube_less(v[k], v[k + 1], 3));
}

TEST_CASE("resolutions count circles") {
  auto t = parse_pd(kTrefoil);
  auto all0 = resolve(t, {0b000}), all1 = resolve(t, {0b111});
  CHECK(all0.n_circles() + all1.n_circles() == 5);  // 2 and 3, in some order of chirality
  CHECK(std::min(all0.n_circles(), all1.n_circles()) == 2);
  auto u2 = resolve(parse_pd("U2"), {0});
  CHECK(u2.n_circles() == 2);
  CHECK(u2.marked_circle == 0);
  // Circles are ordered by their smallest label.
  for (std::uint32_t b = 0; b < 8; ++b) {
    auto r = resolve(t, {b});
    for (int k = 0; k + 1 < r.n_circles(); ++k) CHECK(r.circles[k].front() < r.circles[k + 1].front());
    CHECK(r.circle_of_label[t.marked_edge()] == r.marked_circle);
  }
}

TEST_CASE("edges merge or split exactly one pair of circles") {
  for (const char* pd : {kTrefoil, kHopf, kFigure8}) {
    auto d = parse_pd(pd);
    auto cube = enumerate_cube(d);
    for (const auto& e : cube.edges) {
      const auto& from = cube.at(e.from);
      const auto& to = cube.at(e.to);
      int diff = from.n_circles() - to.n_circles();
      CHECK((diff == 1 || diff == -1));
      CHECK((e.kind == CobordismKind::merge) == (diff == 1));
      int bystanders = 0;
      for (int k = 0; k < from.n_circles(); ++k)
        if (e.bystander_map[k] >= 0) {
          ++bystanders;
          CHECK(from.circles[k] == to.circles[e.bystander_map[k]]);
        }
      CHECK(bystanders == std::min(from.n_circles(), to.n_circles()) - 1);
    }
  }
  auto h = parse_pd(kHopf);
  auto e1 = edge(h, {0b01}, 1), e2 = edge(h, {0b01}, 1);
  CHECK(e1.to.bits == 0b00);
  CHECK(e1.kind == e2.kind);
  CHECK(e1.bystander_map == e2.bystander_map);
}

TEST_CASE("enumerate_cube sizes and the crossing cap") {
  auto t = enumerate_cube(parse_pd(kTrefoil));
  CHECK(t.resolutions.size() == 8);
  CHECK(t.edges.size() == 12);
  auto k = enumerate_cube(parse_pd("PD[X[1,2,2,1]]"));
  CHECK(k.resolutions.size() == 2);
  CHECK(k.edges.size() == 1);
  auto f = enumerate_cube(parse_pd(kFigure8), kDefaultCrossingCap, 2);
  CHECK(f.resolutions.size() == 16);
  CHECK(f.edges.size() == 32);
  try {
    enumerate_cube(parse_pd(kFigure8), 3);
    FAIL("expected the cap to trip");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
}
