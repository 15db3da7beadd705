#include <benchmark/benchmark.h>

#include <polyvor/polyvor.hpp>

#include <random>

using namespace polyvor;

namespace {

AffinePoint random_point(std::mt19937_64& rng, std::size_t size) {
  std::uniform_int_distribution<long> w(0, 20);
  std::vector<long> raw(size);
  long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : raw) total += (x = w(rng));
  }
  std::vector<Rational> coords;
  for (long x : raw) {
    coords.emplace_back(x, total);
    coords.back().canonicalize();
  }
  return AffinePoint::simplex(coords);
}

}  // namespace

static void BM_WassersteinExact(benchmark::State& state) {
  const auto states = static_cast<std::size_t>(state.range(0));
  const auto d = random_metric(states, 1);
  std::mt19937_64 rng(2);
  const auto mu = random_point(rng, states), nu = random_point(rng, states);
  for (auto _ : state) benchmark::DoNotOptimize(wasserstein_distance(mu, nu, d).cost);
}
BENCHMARK(BM_WassersteinExact)->Arg(3)->Arg(4)->Arg(6)->Arg(10);

static void BM_WassersteinFloat(benchmark::State& state) {
  const auto states = static_cast<std::size_t>(state.range(0));
  const auto d = random_metric(states, 1);
  std::mt19937_64 rng(2);
  const auto mu = random_point(rng, states).to_doubles(), nu = random_point(rng, states).to_doubles();
  for (auto _ : state) benchmark::DoNotOptimize(wasserstein_distance_float(mu, nu, d).cost);
}
BENCHMARK(BM_WassersteinFloat)->Arg(3)->Arg(4)->Arg(6)->Arg(10);

static void BM_BruteForce(benchmark::State& state) {
  const auto states = static_cast<std::size_t>(state.range(0));
  const auto d = random_metric(states, 1);
  std::mt19937_64 rng(2);
  const auto mu = random_point(rng, states), nu = random_point(rng, states);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_distance(mu, nu, d));
}
BENCHMARK(BM_BruteForce)->Arg(3)->Arg(4);

static void BM_GaugeExact(benchmark::State& state) {
  const auto d = random_metric(3, 1);
  const auto gens = ball_generators(d);
  std::mt19937_64 rng(3);
  const auto x = random_point(rng, 3), y = random_point(rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(gauge_distance(x, y, gens));
}
BENCHMARK(BM_GaugeExact);

static void BM_PlanarNormDistance(benchmark::State& state) {
  const auto norm = PlanarNorm::from_metric(random_metric(3, 1));
  const Point3 x{0.2, 0.3, 0.5}, y{0.6, 0.1, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(norm.distance(x, y));
}
BENCHMARK(BM_PlanarNormDistance);

static void BM_BuildBall(benchmark::State& state) {
  const auto d = random_metric(3, 1);
  const auto c = AffinePoint::barycenter(3);
  for (auto _ : state) benchmark::DoNotOptimize(build_ball(c, Rational(1, 3), d).hull_vertices.size());
}
BENCHMARK(BM_BuildBall);

static void BM_Classify(benchmark::State& state) {
  const auto sample = sample_curve(hardy_weinberg_curve(), static_cast<std::size_t>(state.range(0)));
  const auto norm = PlanarNorm::from_metric(make_metric({{0, 2, 1}, {2, 0, 2}, {1, 2, 0}}));
  const Point3 y{0.4, 0.35, 0.25};
  for (auto _ : state) benchmark::DoNotOptimize(classify(y, sample, norm));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Classify)->Arg(101)->Arg(1001)->Arg(4001);

static void BM_Raster(benchmark::State& state) {
  const auto sample = sample_curve(hardy_weinberg_curve(), 1001);
  const auto norm = PlanarNorm::from_metric(make_metric({{0, 2, 1}, {2, 0, 2}, {1, 2, 0}}));
  const auto resolution = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(raster_voronoi(sample, norm, resolution).labels.data());
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_Raster)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_HwTangency(benchmark::State& state) {
  const auto d = random_metric(3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(hw_tangency_points(d).entries.size());
}
BENCHMARK(BM_HwTangency);

BENCHMARK_MAIN();
