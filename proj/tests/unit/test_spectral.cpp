#include <doctest.h>

#include "khcube/chain_complex.hpp"
#include "khcube/errors.hpp"
#include "khcube/homalg.hpp"
#include "khcube/khcomplex.hpp"
#include "khcube/spectral.hpp"
#include "khcube/triangle.hpp"

using namespace khcube;

namespace {
SparseIntMatrix mat(int rows, int cols, std::vector<MatrixEntry> e) { return SparseIntMatrix::from_triplets(rows, cols, std::move(e)); }

// x -> y with the given weights.
FilteredComplex arrow(int w_x, int w_y) {
  FilteredComplex fc;
  fc.degree = {0, 1};
  fc.weight = {w_x, w_y};
  fc.d = mat(2, 2, {{1, 0, 1}});
  return fc;
}

ChainComplex point(int degree = 0) {
  ChainComplex c = ChainComplex::zero(1);
  c.degree = {degree};
  return c;
}
}  // namespace

TEST_CASE("a two-level filtration dies on the first differential") {
  auto pages = spectral_pages(arrow(0, 1), 3);
  REQUIRE(pages.size() == 3);
  CHECK(pages[0].r == 1);
  CHECK(pages[0].total == 2);
  CHECK(pages[0].d_rank.at({0, 0}) == 1);
  CHECK(pages[1].total == 0);
  CHECK(pages[1].converged);
}

TEST_CASE("a weight gap of two waits for the second differential") {
  auto pages = spectral_pages(arrow(0, 2), 3);
  CHECK(pages[0].total == 2);
  CHECK(pages[1].total == 2);
  CHECK_FALSE(pages[1].converged);
  CHECK(pages[1].d_rank.at({0, 0}) == 1);
  CHECK(pages[2].total == 0);
}

TEST_CASE("a trivial filtration starts at homology") {
  auto pages = spectral_pages(arrow(0, 0), 2);
  CHECK(pages[0].total == 0);
  CHECK(pages[0].converged);
  FilteredComplex bad = arrow(1, 0);
  CHECK_THROWS_AS(check_filtered(bad), ContractViolation);
}

TEST_CASE("the cube filtration has E2 equal to Khovanov homology") {
  for (const char* pd : {"PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]", "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]", "U2"}) {
    BuildOptions o;
    o.ring = Ring::rationals();
    auto c = build_complex(parse_pd(pd), o);
    auto fc = cube_filtration(c, o.ring);
    check_filtered(fc);
    auto pages = spectral_pages(fc, 3, 2);
    auto h = homology(c, o.ring);
    CHECK(pages[0].total == static_cast<std::int64_t>(c.total_dim()));
    CHECK(pages[1].total == h.total_rank());
    CHECK(pages[1].converged);
    CHECK(pages[2].ranks == pages[1].ranks);
  }
}

TEST_CASE("mapping cones") {
  auto a = point(), b = point();
  auto zero = mapping_cone(a, b, mat(1, 1, {}));
  CHECK(homology_rank(zero) == 2);
  CHECK(zero.degree == std::vector<int>{-1, 0});
  auto id = mapping_cone(a, b, SparseIntMatrix::identity(1));
  CHECK(homology_rank(id) == 0);
  CHECK(induced_rank(a, b, SparseIntMatrix::identity(1)) == 1);

  // The kink's complex is the cone of its one edge map.
  auto t = skein_triangle(parse_pd("PD[X[1,2,2,1]]"), 1);
  REQUIRE(t.f[2]);
  auto cone = mapping_cone(t.c[2], t.c[1], *t.f[2]);
  CHECK(homology_rank(cone) == 2);
  CHECK(homology_rank(mapping_cone(t.c[2], t.c[1], t.f[2]->negated())) == 2);

  // x -> y in A, f(y) = z: f d_A + d_B f is nonzero on x.
  ChainComplex arrow_a;
  arrow_a.degree = {0, 1};
  arrow_a.d = mat(2, 2, {{1, 0, 1}});
  CHECK_THROWS_AS(mapping_cone(arrow_a, point(1), mat(1, 2, {{0, 1, 1}})), ContractViolation);
}

TEST_CASE("OS lemma checker") {
  TriangleData empty;
  for (int i = 0; i < 3; ++i) {
    empty.c[i] = ChainComplex::zero(0);
    empty.f[i] = mat(0, 0, {});
    empty.j[i] = mat(0, 0, {});
  }
  CHECK(os_lemma_check(empty).passed());

  auto t = skein_triangle(parse_pd("PD[X[1,2,2,1]]"), 1);
  CHECK(t.c[0].dim() == 6);
  CHECK(t.c[1].dim() == 4);
  CHECK(t.c[2].dim() == 2);
  auto v = os_lemma_check(t);
  CHECK(v.passed());
  CHECK(v.quasi_iso.value_or(false));
  CHECK(v.exact.value_or(false));
  CHECK(v.cone_quasi_iso.value_or(false));

  auto broken = t;
  broken.j[2] = mat(broken.j[2]->rows(), broken.j[2]->cols(), {});
  auto bv = os_lemma_check(broken);
  CHECK_FALSE(bv.homotopy);
  CHECK_FALSE(bv.passed());
  CHECK_FALSE(bv.failures.empty());

  auto basic = os_lemma_check(t, false);
  CHECK(basic.passed());
  CHECK_FALSE(basic.quasi_iso.has_value());

  CHECK_THROWS_AS(os_lemma_check(t, true, 4), ResourceError);
}

TEST_CASE("skein triangles on the trefoil") {
  auto d = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
  for (int i = 1; i <= 3; ++i) {
    CHECK(os_lemma_check(skein_triangle(d, i)).passed());
    auto r = cone_decomposition(d, i);
    CHECK(r.ok());
    CHECK(r.rank_d == 4);
  }
  CHECK_THROWS_AS(cone_decomposition(d, 4), ValidationError);
  CHECK_THROWS_AS(cone_decomposition(d, 0), ValidationError);
}

TEST_CASE("cubes of complexes") {
  // 1-cube with an isomorphism: acyclic, killed on E2.
  CubeOfComplexes one;
  one.n = 1;
  one.vertex = {point(), point()};
  one.maps[{0u, 1u}] = SparseIntMatrix::identity(1);
  auto fc = assemble_cube(one);
  check_filtered(fc);
  auto pages = spectral_pages(fc, 2);
  CHECK(pages[0].total == 2);
  CHECK(pages[1].total == 0);

  // A square of identities with a diagonal map: over F2 all signs vanish.
  CubeOfComplexes sq;
  sq.n = 2;
  for (int k = 0; k < 4; ++k) {
    ChainComplex c = point();
    c.ring = Ring::prime_field(2);
    sq.vertex.push_back(c);
  }
  for (auto [u, v] : {std::pair{0u, 1u}, {0u, 2u}, {1u, 3u}, {2u, 3u}}) sq.maps[{u, v}] = SparseIntMatrix::identity(1);
  auto f2 = assemble_cube(sq);
  check_filtered(f2);
  CHECK(homology_rank(f2) == 0);
}
