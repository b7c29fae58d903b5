#include <doctest.h>


#include "khcube/homalg.hpp"
#include "khcube/invariants.hpp"
#include "khcube/khcomplex.hpp"
#include "oracles.hpp"

using namespace khcube;

namespace {
const char* kTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
const char* kFigure8 = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";

std::vector<Integer> ints(std::initializer_list<int> xs) {
  std::vector<Integer> v;
  for (int x : xs) v.emplace_back(x);
  return v;
}
}  // namespace

TEST_CASE("unknot certificate") {
  for (const char* pd : {"U1", "PD[X[1,1,2,2]]", "PD[X[1,2,2,1]]"}) {
    auto c = unknot_certificate(parse_pd(pd));
    CHECK(c.is_unknot);
    CHECK(c.rank == 1);
  }
  auto t = unknot_certificate(parse_pd(kTrefoil));
  CHECK_FALSE(t.is_unknot);
  CHECK(t.rank == 3);
  for (const auto& r : read_knot_table(khtest::data_dir() / "unknots.csv")) CHECK_MESSAGE(unknot_certificate(parse_pd(r.pd)).is_unknot, r.name);
}

TEST_CASE("determinants and Alexander polynomials") {
  CHECK(determinant(parse_pd("U1")) == Integer(1));
  CHECK(determinant(parse_pd(kTrefoil)) == Integer(3));
  CHECK(determinant(parse_pd(kFigure8)) == Integer(5));
  CHECK(determinant(parse_pd("U2")) == Integer(0));
  CHECK(alexander_polynomial(parse_pd(kTrefoil)) == ints({1, -1, 1}));
  CHECK(alexander_polynomial(parse_pd(kFigure8)) == ints({1, -3, 1}));
  CHECK(alexander_polynomial(parse_pd("U1")) == ints({1}));
  CHECK(coefficient_norm(ints({1, -3, 1})) == Integer(5));
  CHECK(bareiss_determinant({{Integer(2), Integer(1)}, {Integer(1), Integer(3)}}) == Integer(5));
}

TEST_CASE("Jones polynomial oracle") {
  Laurent unknot = Laurent::monomial(1, 1) + Laurent::monomial(1, -1);
  CHECK(jones_oracle(parse_pd("U1")) == unknot);
  CHECK(jones_oracle(parse_pd("U2")) == unknot * unknot);
  CHECK(jones_oracle(parse_pd("PD[X[1,1,2,2]]")) == unknot);
  CHECK(determinant_from_jones(jones_oracle(parse_pd(kTrefoil))) == Integer(3));
  CHECK(determinant_from_jones(jones_oracle(parse_pd(kFigure8))) == Integer(5));
}

TEST_CASE("bounds on the trefoil") {
  auto r = check_bounds(parse_pd(kTrefoil), true);
  CHECK(r.khr_rank_Q == 3);
  CHECK(r.determinant == Integer(3));
  CHECK(r.bound_cor15_ok);
  CHECK_FALSE(r.unknot_certified);
  REQUIRE(r.jones);
  CHECK(r.det_equality_ok.value_or(false));
  CHECK_FALSE(check_bounds(parse_pd(kTrefoil)).det_equality_ok.has_value());
}

TEST_CASE("table invariants match the reference values") {
  auto ref = khtest::reference_table();
  int seen = 0;
  for (const auto& r : read_knot_table(khtest::data_dir() / "knots9.csv")) {
    auto it = ref.find(r.name);
    if (it == ref.end()) continue;
    auto d = parse_pd(r.pd);
    CHECK_MESSAGE(determinant(d) == it->second.determinant, r.name);
    CHECK_MESSAGE(alexander_polynomial(d) == it->second.alexander, r.name);
    ++seen;
  }
  CHECK(seen == 84);
}

TEST_CASE("homology of small knots matches the reference up to chirality") {
  auto ref = khtest::reference_table();
  for (const auto& r : read_knot_table(khtest::data_dir() / "knots9.csv")) {
    auto it = ref.find(r.name);
    if (it == ref.end()) continue;
    auto d = parse_pd(r.pd);
    if (d.n_crossings() > 7) continue;
    auto m = mirror(d);
    auto kz = [](const PlanarDiagram& x) { return homology(build_complex(x)); };
    auto kr = [](const PlanarDiagram& x) {
      BuildOptions o;
      o.ring = Ring::rationals();
      o.variant = Variant::reduced;
      return homology(build_complex(x, o), o.ring);
    };
    bool same = kz(d) == it->second.kh_integral, flipped = kz(m) == it->second.kh_integral;
    CHECK_MESSAGE((same || flipped), r.name);
    CHECK_MESSAGE(kr(same ? d : m) == it->second.khr_rational, r.name);
  }
}
