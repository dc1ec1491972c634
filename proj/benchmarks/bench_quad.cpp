#include <benchmark/benchmark.h>

#include <cmath>

#include "betaquad/catalog.hpp"
#include "betaquad/quad.hpp"
#include "betaquad/specfun.hpp"
#include "betaquad/verify.hpp"

namespace {

using namespace betaquad;

void BM_Gamma(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::gamma(x));
    x = x < 30 ? x + 0.731 : 0.37;
  }
}
BENCHMARK(BM_Gamma);

void BM_Beta(benchmark::State& state) {
  double a = 0.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::beta(a, 3.1 - a));
    a = a < 3 ? a + 0.173 : 0.2;
  }
}
BENCHMARK(BM_Beta);

void BM_FiniteSingular(benchmark::State& state) {
  const auto spec = quad::IntegralSpec::finite(0, 1, -0.5, -0.25);
  const quad::Integrand f = [](const quad::Abscissa& p) {
    return std::pow(p.from_lo, -0.5) * std::pow(p.from_hi, -0.25);
  };
  for (auto _ : state) benchmark::DoNotOptimize(quad::integrate(f, spec).value);
}
BENCHMARK(BM_FiniteSingular);

void BM_HalfLine(benchmark::State& state) {
  const auto spec = quad::IntegralSpec::half_line_up(0, -0.7);
  const quad::Integrand f = [](const quad::Abscissa& p) {
    return std::pow(p.from_lo, -0.7) / (1 + p.from_lo);
  };
  for (auto _ : state) benchmark::DoNotOptimize(quad::integrate(f, spec).value);
}
BENCHMARK(BM_HalfLine);

void BM_RealLine(benchmark::State& state) {
  const quad::Integrand f = [](double x) { return 0.5 / std::cosh(x / 2); };
  const auto spec = quad::IntegralSpec::real_line();
  for (auto _ : state) benchmark::DoNotOptimize(quad::integrate(f, spec).value);
}
BENCHMARK(BM_RealLine);

void BM_PrincipalValueTwoPoles(benchmark::State& state) {
  const auto spec = quad::IntegralSpec::half_line_up(0, -0.4).with_poles({0.8, 2.1});
  const quad::Integrand g = [](const quad::Abscissa& p) {
    return std::pow(p.from_lo, -0.4);
  };
  for (auto _ : state) benchmark::DoNotOptimize(quad::integrate(g, spec).value);
}
BENCHMARK(BM_PrincipalValueTwoPoles);

void BM_Oracle(benchmark::State& state) {
  const auto spec = quad::IntegralSpec::finite(0, 1, -0.5, -0.25);
  const quad::Integrand f = [](const quad::Abscissa& p) {
    return std::pow(p.from_lo, -0.5) * std::pow(p.from_hi, -0.25);
  };
  for (auto _ : state) benchmark::DoNotOptimize(quad::oracle_integrate(f, spec));
}
BENCHMARK(BM_Oracle);

void BM_VerifyRoster(benchmark::State& state) {
  verify::RunConfig cfg;
  cfg.samples_per_entry = 20;
  cfg.parallelism = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify::verify_all(cfg).passes);
}
BENCHMARK(BM_VerifyRoster)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
