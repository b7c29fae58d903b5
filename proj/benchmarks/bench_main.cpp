#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "khcube/homalg.hpp"
#include "khcube/khcomplex.hpp"

using namespace khcube;

namespace {

PlanarDiagram knot(const char* file, const std::string& name) {
  for (const auto& r : read_knot_table(std::filesystem::path(KHCUBE_DATA_DIR) / file))
    if (r.name == name) return parse_pd(r.pd);
  throw std::runtime_error("no row " + name);
}

const PlanarDiagram& diagram(int which) {
  static const PlanarDiagram d[] = {knot("knots9.csv", "3_1"), knot("knots9.csv", "8_19"), knot("knots12.csv", "12n_1")};
  return d[which];
}

void BM_BuildComplex(benchmark::State& state) {
  const auto& d = diagram(static_cast<int>(state.range(0)));
  BuildOptions o;
  o.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_complex(d, o).total_dim());
}

void BM_Homology(benchmark::State& state) {
  const auto& d = diagram(static_cast<int>(state.range(0)));
  BuildOptions o;
  o.threads = static_cast<int>(state.range(1));
  auto c = build_complex(d, o);
  for (auto _ : state) benchmark::DoNotOptimize(homology(c, o.threads).total_rank());
}

// The largest differential block of a diagram's complex.
void BM_SmithNormalForm(benchmark::State& state) {
  auto c = build_complex(diagram(static_cast<int>(state.range(0))));
  const SparseIntMatrix* big = nullptr;
  for (const auto& [b, m] : c.differentials)
    if (!big || m.nnz() > big->nnz()) big = &m;
  state.counters["rows"] = big->rows();
  state.counters["cols"] = big->cols();
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(*big).rank);
}

void BM_SmithNormalFormRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> v(-3, 3);
  std::bernoulli_distribution keep(0.2);
  std::vector<MatrixEntry> e;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (keep(rng)) e.push_back({r, c, v(rng)});
  auto m = SparseIntMatrix::from_triplets(n, n, std::move(e));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m).rank);
}

}  // namespace

// Argument pairs: diagram (0 = 3_1, 1 = 8_19, 2 = 12n_1), threads.
BENCHMARK(BM_BuildComplex)->Args({0, 1})->Args({1, 1})->Args({2, 1})->Args({2, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Homology)->Args({0, 1})->Args({1, 1})->Args({2, 1})->Args({2, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SmithNormalForm)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
// Dense random integer matrices show coefficient growth; they stay small.
BENCHMARK(BM_SmithNormalFormRandom)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
