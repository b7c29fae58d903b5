#include <doctest.h>

#include <random>

#include "khcube/errors.hpp"
#include "khcube/homalg.hpp"
#include "khcube/invariants.hpp"
#include "khcube/khcomplex.hpp"
#include "oracles.hpp"

using namespace khcube;

namespace {
SparseIntMatrix dense(std::vector<std::vector<int>> rows) {
  khtest::Dense m;
  for (auto& r : rows) {
    m.emplace_back();
    for (int x : r) m.back().emplace_back(x);
  }
  return SparseIntMatrix::from_dense(m);
}

std::vector<Integer> ints(std::initializer_list<int> xs) {
  std::vector<Integer> v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

// Z --x2--> Z in degrees 0 and 1, all in q = 0.
BigradedComplex times_two() {
  BigradedComplex c;
  TensorGenerator g;
  g.n = 1;
  c.blocks[{0, 0}] = {BasisElement{{0}, g}};
  c.blocks[{1, 0}] = {BasisElement{{1}, g}};
  c.differentials[{0, 0}] = dense({{2}});
  return c;
}
}  // namespace

TEST_CASE("Smith normal form") {
  auto s = smith_normal_form(dense({{2, 4}, {6, 8}}));
  CHECK(s.diagonal == ints({2, 4}));
  CHECK(s.rank == 2);
  CHECK(smith_normal_form(SparseIntMatrix::identity(3)).diagonal == ints({1, 1, 1}));
  auto z = smith_normal_form(dense({{0, 0}, {0, 0}, {0, 0}}));
  CHECK(z.rank == 0);
  CHECK(z.diagonal.empty());
  CHECK(rank_over(dense({{2, 4}, {6, 8}}), Ring::prime_field(2)) == 0);
  CHECK(rank_over(dense({{2, 4}, {6, 8}}), Ring::prime_field(3)) == 2);
  CHECK(rank_over(dense({{1, 2}, {2, 4}}), Ring::rationals()) == 1);
}

TEST_CASE("Smith form with transforms") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 30; ++k) {
    int r = 1 + k % 6, c = 1 + (k * 5) % 7;
    auto a = khtest::random_matrix(rng, r, c, 0.6, 5);
    auto t = smith_with_transforms(a);
    auto uav = SparseIntMatrix::from_dense(t.U) * a * SparseIntMatrix::from_dense(t.V);
    CHECK(uav == SparseIntMatrix::from_dense(t.D));
    CHECK(bareiss_determinant(t.U).abs() == Integer(1));
    CHECK(bareiss_determinant(t.V).abs() == Integer(1));
  }
}

TEST_CASE("sparse Smith form agrees with the dense oracle") {
  std::mt19937_64 rng(12345);
  for (int k = 0; k < 200; ++k) {
    int r = 1 + static_cast<int>(rng() % 12), c = 1 + static_cast<int>(rng() % 12);
    auto a = khtest::random_matrix(rng, r, c, 0.3 + 0.05 * (k % 10), 4);
    auto expect = khtest::dense_smith(a.to_dense());
    std::erase_if(expect, [](const Integer& x) { return x.is_zero(); });
    std::sort(expect.begin(), expect.end());
    auto got = smith_normal_form(a);
    CHECK(got.diagonal == expect);
    CHECK(got.rank == khtest::dense_rank(a.to_dense()));
    CHECK(rank_over(a, Ring::rationals()) == got.rank);
  }
}

TEST_CASE("homology of small complexes") {
  auto h = homology(times_two());
  CHECK(h.groups.size() == 1);
  CHECK(h.groups.at({1, 0}).free_rank == 0);
  CHECK(h.groups.at({1, 0}).torsion == ints({2}));
  CHECK(homology(times_two(), Ring::rationals()).total_rank() == 0);
  CHECK(homology(times_two(), Ring::prime_field(2)).total_rank() == 2);

  auto broken = times_two();
  broken.blocks[{2, 0}] = broken.blocks[{1, 0}];
  broken.differentials[{1, 0}] = dense({{1}});
  CHECK_THROWS_AS(homology(broken), ContractViolation);
}

TEST_CASE("Poincare polynomials") {
  BuildOptions o;
  o.ring = Ring::rationals();
  CHECK(poincare_polynomial(homology(build_complex(parse_pd("U1"), o), o.ring)) == "q^-1 + q");
  CHECK(poincare_polynomial(homology(build_complex(parse_pd("U2"), o), o.ring)) == "q^-2 + 2 + q^2");
  CHECK_THROWS_AS(poincare_polynomial(homology(build_complex(parse_pd("U1")))), ContractViolation);
}

TEST_CASE("prime power splitting") {
  auto twelve = prime_power_decomposition(Integer(12));
  std::sort(twelve.begin(), twelve.end());
  CHECK(twelve == ints({3, 4}));
  CHECK(prime_power_decomposition(Integer(8)) == ints({8}));
  CHECK(prime_power_decomposition(Integer(1)).empty());
}

TEST_CASE("integral homology agrees with the dense oracle on small knots") {
  auto rows = read_knot_table(khtest::data_dir() / "knots9.csv");
  int done = 0;
  for (const auto& r : rows) {
    auto d = parse_pd(r.pd);
    if (d.n_crossings() > 7) continue;
    auto c = build_complex(d);
    CHECK_MESSAGE(homology(c) == khtest::dense_homology(c), r.name);
    ++done;
  }
  CHECK(done > 10);
}
