#include "subres/instances.hpp"
#include "subres/multi.hpp"
#include "subres/oracle.hpp"
#include "subres/uni.hpp"
#include "support/gen.hpp"

#include <benchmark/benchmark.h>

using namespace subres;
using testgen::Rng;

namespace {

void BM_DeterminantBareiss(benchmark::State& state) {
  Rng rng(1);
  const auto m = testgen::random_matrix(rng, static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_DeterminantBareiss)->DenseRange(2, 7)->Arg(12)->Arg(20);

void BM_DeterminantCofactor(benchmark::State& state) {
  Rng rng(1);
  const auto m = testgen::random_matrix(rng, static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::det_cofactor(m));
}
BENCHMARK(BM_DeterminantCofactor)->DenseRange(2, 7);

void BM_DeltaSUni(benchmark::State& state) {
  Rng rng(2);
  const int d = static_cast<int>(state.range(0));
  const auto f = testgen::random_univariate(rng, d);
  const auto g = testgen::random_univariate(rng, d);
  const int t = d;
  const int k = t + 1 - 2 * std::max(0, t - d + 1);
  const uni::UniProblem p{f, g, t, testgen::random_selection(rng, 1, t, static_cast<std::size_t>(k))};
  for (auto _ : state) benchmark::DoNotOptimize(uni::delta_S_uni(p));
}
BENCHMARK(BM_DeltaSUni)->DenseRange(2, 10, 2);

void BM_Thm1RootSide(benchmark::State& state) {
  Rng rng(3);
  const int d = static_cast<int>(state.range(0));
  const auto roots = testgen::distinct_integers(rng, static_cast<std::size_t>(d));
  const auto f = testgen::random_univariate(rng, d);
  const int t = d;
  const int k = t + 1 - 2 * std::max(0, t - d + 1);
  const auto S = testgen::random_selection(rng, 1, t, static_cast<std::size_t>(k));
  for (auto _ : state) benchmark::DoNotOptimize(uni::thm1_rhs(f, roots, Rational(2), t, S));
}
BENCHMARK(BM_Thm1RootSide)->DenseRange(2, 10, 2);

void BM_DeltaSMulti(benchmark::State& state) {
  Rng rng(4);
  const int d = static_cast<int>(state.range(0));
  const DegreeSystem sys{2, {d, d, d}, 2 * (d - 1) + d};
  std::vector<Polynomial> polys;
  for (int i = 0; i < 3; ++i) polys.push_back(testgen::random_dense(rng, 2, d));
  const auto p = multi::make_problem(sys, polys, {});
  for (auto _ : state) benchmark::DoNotOptimize(multi::delta_S(p));
}
BENCHMARK(BM_DeltaSMulti)->DenseRange(1, 4);

void BM_Thm2RootSide(benchmark::State& state) {
  Rng rng(5);
  const int d = static_cast<int>(state.range(0));
  const int degrees[] = {d, d};
  const auto inst = testgen::grid_instance(rng, degrees);
  auto polys = inst.polys;
  polys.push_back(testgen::random_dense(rng, 2, d));
  const auto p = multi::make_problem({2, {d, d, d}, 2 * (d - 1) + d}, polys, {});
  for (auto _ : state) benchmark::DoNotOptimize(multi::thm2_rhs(p, inst.roots));
}
BENCHMARK(BM_Thm2RootSide)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
