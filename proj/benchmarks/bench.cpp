#include <benchmark/benchmark.h>

#include <vector>

#include "reebsnake/algebra.hpp"
#include "reebsnake/generator.hpp"
#include "reebsnake/genericity.hpp"
#include "reebsnake/level_sweep.hpp"
#include "reebsnake/parser.hpp"
#include "reebsnake/roots.hpp"
#include "reebsnake/snake.hpp"

using namespace reebsnake;

namespace {

const char* kCircle = "x^2+y^2";
const char* kCoste = "x^2+(y^2-x)^2";
const char* kBitangent = "x^10+y^6/6-3*x*y^4/4+x^2*y^2";

void BM_ResultantPolar(benchmark::State& state) {
  auto f = parse_polynomial(kBitangent);
  auto fy = partial(f, Variable::Y);
  for (auto _ : state) benchmark::DoNotOptimize(resultant_y(f, fy));
}
BENCHMARK(BM_ResultantPolar)->Unit(benchmark::kMillisecond);

void BM_ResultantPolarPrs(benchmark::State& state) {
  auto f = parse_polynomial(kBitangent);
  auto fy = partial(f, Variable::Y);
  for (auto _ : state) benchmark::DoNotOptimize(resultant_y_prs(f, fy));
}
BENCHMARK(BM_ResultantPolarPrs)->Unit(benchmark::kMillisecond);

// prod (x - k/n) for k = 1..n: close, equally spaced roots.
void BM_IsolateRoots(benchmark::State& state) {
  const long n = state.range(0);
  UnivariatePolynomial p{Rational(1)};
  for (long k = 1; k <= n; ++k) p = p * UnivariatePolynomial{ratio(-k, n), Rational(1)};
  for (auto _ : state) benchmark::DoNotOptimize(isolate_roots(p));
}
BENCHMARK(BM_IsolateRoots)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_SweepCoste(benchmark::State& state) {
  auto h = rotate(parse_polynomial(kCoste), UnitDirection::from_half_angle(Rational(1, 64)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(h, Rational(1, 32)));
}
BENCHMARK(BM_SweepCoste)->Unit(benchmark::kMillisecond);

void BM_SweepGenerated(benchmark::State& state) {
  auto f = generate_polynomial(static_cast<std::uint64_t>(state.range(0))).f;
  const Rational eps = choose_epsilon(f, UnitDirection::identity());
  for (auto _ : state) benchmark::DoNotOptimize(sweep(f, eps));
}
BENCHMARK(BM_SweepGenerated)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_PipelineCircle(benchmark::State& state) {
  auto f = parse_polynomial(kCircle);
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(f, UnitDirection::identity()));
}
BENCHMARK(BM_PipelineCircle)->Unit(benchmark::kMillisecond);

void BM_PipelineCoste(benchmark::State& state) {
  auto f = parse_polynomial(kCoste);
  PipelineOptions opt;
  opt.epsilon = Rational(1, 32);
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(f, UnitDirection::from_half_angle(Rational(1, 64)), opt));
}
BENCHMARK(BM_PipelineCoste)->Unit(benchmark::kMillisecond);

void BM_DirectionScanCoste(benchmark::State& state) {
  auto f = parse_polynomial(kCoste);
  auto grid = half_angle_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(direction_scan(f, grid));
}
BENCHMARK(BM_DirectionScanCoste)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
