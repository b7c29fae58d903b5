#include <doctest.h>

#include "khcube/cube.hpp"
#include "khcube/tqft.hpp"

using namespace khcube;

namespace {
TensorGenerator g(std::initializer_list<char> s) { return make_generator(s); }
}  // namespace

TEST_CASE("multiplication") {
  CHECK(m(g({'+', '+'})) == ModuleElement(g({'+'})));
  CHECK(m(g({'+', '-'})) == ModuleElement(g({'-'})));
  CHECK(m(g({'-', '+'})) == ModuleElement(g({'-'})));
  CHECK(m(g({'-', '-'})).is_zero());
  ModuleElement x = Integer(2) * ModuleElement(g({'+', '-'})) + Integer(3) * ModuleElement(g({'-', '+'}));
  CHECK(m(x) == Integer(5) * ModuleElement(g({'-'})));
}

TEST_CASE("comultiplication and sigma") {
  CHECK(delta(g({'-'})) == ModuleElement(g({'-', '-'})));
  CHECK(delta(g({'+'})) == ModuleElement(g({'-', '+'})) + ModuleElement(g({'+', '-'})));
  ModuleElement two_minus = Integer(2) * ModuleElement(g({'-'}));
  CHECK(m(delta(g({'+'}))) == two_minus);
  CHECK(sigma(ModuleElement(g({'+'}))) == two_minus);
  CHECK(sigma(ModuleElement(g({'-'}))).is_zero());
  CHECK(sigma(sigma(ModuleElement(g({'+'})))).is_zero());
}

TEST_CASE("gradings of generators") {
  CHECK(g({'+', '+'}).q_weight() == 2);
  CHECK(g({'+', '-'}).q_weight() == 0);
  CHECK(g({'+'}).tqft_degree() == 0);
  CHECK(g({'-'}).tqft_degree() == 2);
  CHECK(g({'-', '-'}).tqft_degree() == 0);
}

TEST_CASE("closed surfaces") {
  int tori[] = {1, 1};
  int sphere[] = {0};
  CHECK(evaluate_closed_surface(tori) == Integer(4));
  CHECK(evaluate_closed_surface(sphere) == Integer(0));
  CHECK(evaluate_closed_surface(std::span<const int>{}) == Integer(1));
}

TEST_CASE("apply_local acts on consecutive factors") {
  ModuleElement x(g({'-', '+', '+'}));
  auto y = apply_local(x, 1, 2, [](const TensorGenerator& t) { return m(t); });
  CHECK(y == ModuleElement(g({'-', '+'})));
}

TEST_CASE("reduction at the marked factor") {
  CHECK(reduce(ModuleElement(g({'+', '-'})), 1).is_zero());
  auto a = reduce(ModuleElement(g({'+', '+'})), 1);
  REQUIRE(a.terms().size() == 1);
  CHECK(a.terms().begin()->first.quotient_factor == 1);
  CHECK_FALSE(a.terms().begin()->first.is_minus(0));
  auto b = reduce(ModuleElement(g({'-', '+'})), 1);
  REQUIRE(b.terms().size() == 1);
  CHECK(b.terms().begin()->first.is_minus(0));
}

TEST_CASE("edge matrices of a kink are m and delta") {
  auto d = parse_pd("PD[X[1,2,2,1]]");
  auto cube = enumerate_cube(d);
  REQUIRE(cube.edges.size() == 1);
  const auto& e = cube.edges[0];
  const auto& from = cube.at(e.from);
  const auto& to = cube.at(e.to);
  auto fb = tensor_basis(from.n_circles()), tb = tensor_basis(to.n_circles());
  auto dec = edge_map(e, Direction::decreasing, fb, tb);
  auto inc = edge_map(e, Direction::increasing, tb, fb);
  CHECK(dec.rows() == static_cast<int>(tb.size()));
  CHECK(inc.rows() == static_cast<int>(fb.size()));
  // One of the two directions is m (rank 2), the other delta (rank 2); both have 3 or 2 nonzeros.
  CHECK(dec.nnz() + inc.nnz() == 6);
}

TEST_CASE("edge maps match a brute-force composition with bystanders") {
  // A 3-crossing diagram: every edge has at least one bystander circle somewhere in the cube.
  auto d = parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]");
  auto cube = enumerate_cube(d);
  for (const auto& e : cube.edges) {
    const auto& from = cube.at(e.from);
    const auto& to = cube.at(e.to);
    auto fb = tensor_basis(from.n_circles()), tb = tensor_basis(to.n_circles());
    auto mat = edge_map(e, Direction::decreasing, fb, tb);
    for (std::size_t c = 0; c < fb.size(); ++c) {
      // Expected image: apply m or delta to the involved labels and carry bystanders over.
      const auto& x = fb[c];
      std::vector<std::pair<std::uint64_t, int>> expect;  // (minus bits in target, coefficient)
      std::uint64_t base = 0;
      for (int k = 0; k < from.n_circles(); ++k)
        if (e.bystander_map[k] >= 0 && x.is_minus(k)) base |= std::uint64_t{1} << e.bystander_map[k];
      if (e.kind == CobordismKind::merge) {
        int minus = x.is_minus(e.src_a) + x.is_minus(e.src_b);
        if (minus == 0) expect.push_back({base, 1});
        if (minus == 1) expect.push_back({base | std::uint64_t{1} << e.dst_a, 1});
      } else {
        std::uint64_t a = std::uint64_t{1} << e.dst_a, b = std::uint64_t{1} << e.dst_b;
        if (x.is_minus(e.src_a)) {
          expect.push_back({base | a | b, 1});
        } else {
          expect.push_back({base | a, 1});
          expect.push_back({base | b, 1});
        }
      }
      int nnz = 0;
      for (std::size_t r = 0; r < tb.size(); ++r)
        if (!mat.at(static_cast<int>(r), static_cast<int>(c)).is_zero()) ++nnz;
      CHECK(nnz == static_cast<int>(expect.size()));
      for (auto [bits, coef] : expect) {
        std::size_t r = 0;
        while (r < tb.size() && tb[r].minus != bits) ++r;
        REQUIRE(r < tb.size());
        CHECK(mat.at(static_cast<int>(r), static_cast<int>(c)) == Integer(coef));
      }
    }
  }
}
