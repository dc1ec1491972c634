#include "betaquad/quad.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"

using namespace betaquad::quad;
using betaquad::testing::kPi;
using betaquad::testing::rel_diff;

namespace {

double tol_bound(const QuadratureResult& r, double tol = kDefaultTolerance) {
  return tol * std::max(1.0, std::fabs(r.value));
}

void check_converged(const QuadratureResult& r, double want, double eps) {
  CHECK(r.converged);
  CHECK(r.status == QuadStatus::converged);
  CHECK(r.evaluations > 0);
  CHECK(r.error_estimate <= tol_bound(r));
  CHECK(std::fabs(r.value - want) <= eps * std::max(1.0, std::fabs(want)));
}

}  // namespace

TEST_CASE("finite interval examples") {
  check_converged(integrate_finite([](double x) { return x; },
                                   IntegralSpec::finite(0, 1)),
                  0.5, 1e-12);
  check_converged(
      integrate_finite(
          [](const Abscissa& p) { return 1 / std::sqrt(p.from_lo * p.from_hi); },
          IntegralSpec::finite(0, 1, -0.5, -0.5)),
      kPi, 1e-12);
  check_converged(
      integrate_finite([](double x) { return x * (1 - x) * (1 - x); },
                       IntegralSpec::finite(0, 1)),
      1.0 / 12, 1e-12);
  // Euler beta integral B(1/2, 3/4), reference from mpmath
  check_converged(
      integrate_finite(
          [](const Abscissa& p) {
            return std::pow(p.from_lo, -0.5) * std::pow(p.from_hi, -0.25);
          },
          IntegralSpec::finite(0, 1, -0.5, -0.25)),
      2.3962804694711844149, 1e-12);
  // strong endpoint singularity: int_0^1 x^(-0.9) dx = 10
  check_converged(
      integrate_finite([](const Abscissa& p) { return std::pow(p.from_lo, -0.9); },
                       IntegralSpec::finite(0, 1, -0.9)),
      10.0, 1e-10);
  check_converged(
      integrate_finite([](const Abscissa& p) {
        return std::sqrt(p.from_lo) * std::log(p.from_lo);
      },
                       IntegralSpec::finite(0, 1, 0.5)),
      -4.0 / 9, 1e-12);
}

TEST_CASE("half-line examples") {
  check_converged(integrate_half_line([](double t) { return 1 / (1 + t * t); },
                                      IntegralSpec::half_line_up(0)),
                  kPi / 2, 1e-12);
  check_converged(
      integrate_half_line(
          [](const Abscissa& p) { return std::pow(p.from_lo, -0.5) / (1 + p.from_lo); },
          IntegralSpec::half_line_up(0, -0.5)),
      kPi, 1e-12);
  // 3.194.7 with m = 0, n = 1, u = v = 1
  check_converged(
      integrate_half_line([](double t) { return std::pow(1 + t, -1.5); },
                          IntegralSpec::half_line_up(0)),
      2.0, 1e-12);
  check_converged(
      integrate_half_line(
          [](const Abscissa& p) { return std::exp(-p.from_lo) / std::sqrt(p.from_lo); },
          IntegralSpec::half_line_up(0, -0.5)),
      std::sqrt(kPi), 1e-12);
  // mirrored half-line: int_-inf^2 e^(x-2) dx = 1
  check_converged(
      integrate_half_line([](double x) { return std::exp(x - 2); },
                          IntegralSpec::half_line_down(2)),
      1.0, 1e-12);
  // shifted lower end: int_3^inf dx / x^2 = 1/3
  check_converged(
      integrate_half_line([](double x) { return 1 / (x * x); },
                          IntegralSpec::half_line_up(3)),
      1.0 / 3, 1e-12);
}

TEST_CASE("real-line examples") {
  check_converged(integrate_real_line([](double x) { return std::exp(-x * x); }),
                  std::sqrt(kPi), 1e-12);
  // e^(-x/2) / (1 + e^(-x)) written without the inf/inf intermediate
  check_converged(
      integrate_real_line([](double x) { return 0.5 / std::cosh(x / 2); }), kPi,
      1e-12);
  const auto odd = integrate_real_line([](double x) {
    const double c = std::cosh(x);
    return x / (c * c);
  });
  CHECK(odd.converged);
  CHECK(std::fabs(odd.value) <= 1e-14);
}

TEST_CASE("overflowing intermediates surface as non_finite") {
  // e^(-x) overflows for x < -709, giving inf / inf
  const auto r = integrate_real_line(
      [](double x) { return std::exp(-x / 2) / (1 + std::exp(-x)); });
  CHECK_FALSE(r.converged);
  CHECK(r.status == QuadStatus::non_finite);
}

TEST_CASE("principal value examples") {
  const auto flat = integrate_pv([](double) { return 1.0; },
                                 IntegralSpec::finite(0, 2).with_poles({1.0}));
  CHECK(flat.converged);
  CHECK(std::fabs(flat.value) <= 1e-14);

  const auto half = integrate_pv(
      [](const Abscissa& p) { return std::pow(p.from_lo, -0.5); },
      IntegralSpec::half_line_up(0, -0.5).with_poles({1.0}));
  CHECK(half.converged);
  CHECK(std::fabs(half.value) <= 1e-10);

  const auto quarter = integrate_pv(
      [](const Abscissa& p) { return std::pow(p.from_lo, -0.75); },
      IntegralSpec::half_line_up(0, -0.75).with_poles({1.0}));
  CHECK(quarter.converged);
  CHECK(rel_diff(quarter.value, -kPi) <= 1e-10);

  // e^(-t/2) / (1 - e^(-t)) = g(t) / t with g(t) = t / (2 sinh(t/2))
  const auto exp_form = integrate_pv(
      [](double t) { return t == 0.0 ? 1.0 : t / (2 * std::sinh(t / 2)); },
      IntegralSpec::real_line().with_poles({0.0}));
  CHECK(exp_form.converged);
  CHECK(std::fabs(exp_form.value) <= 1e-12);

  // two poles: PV int_0^3 dx / ((x - 1)(x - 2)) = -2 ln 2 via partial fractions
  const auto two = integrate_pv([](double) { return 1.0; },
                                IntegralSpec::finite(0, 3).with_poles({1.0, 2.0}));
  CHECK(two.converged);
  CHECK(rel_diff(two.value, -2 * std::log(2.0)) <= 1e-12);
}

TEST_CASE("principal value symmetry about the pole") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-3.0, 3.0), w(0.1, 2.0), k(0.1, 4.0);
  for (int i = 0; i < 50; ++i) {
    const double s = u(rng), half = w(rng), a = k(rng), b = u(rng);
    // even regular part over the pole makes the integrand odd about s
    auto even = [=](double x) {
      const double d = x - s;
      return std::cos(a * d) + b * d * d;
    };
    const auto r = integrate_pv(even, IntegralSpec::finite(s - half, s + half)
                                          .with_poles({s}));
    CAPTURE(s);
    CAPTURE(half);
    CHECK(r.converged);
    CHECK(std::fabs(r.value) <= kDefaultTolerance);
  }
}

TEST_CASE("integrands are never evaluated at endpoints or poles") {
  std::atomic<int> bad{0};
  auto probe = [&](double lo, double hi, double pole) {
    return [&bad, lo, hi, pole](const Abscissa& p) {
      if (p.x == pole) ++bad;
      if (p.from_lo <= 0.0 || p.from_hi <= 0.0) ++bad;
      if (std::isfinite(lo) && p.x == lo && p.from_lo == 0.0) ++bad;
      if (std::isfinite(hi) && p.x == hi && p.from_hi == 0.0) ++bad;
      return std::pow(p.from_lo, -0.5);
    };
  };
  (void)integrate(probe(0, 1, -1), IntegralSpec::finite(0, 1, -0.5));
  (void)integrate(probe(0, kInf, -1), IntegralSpec::half_line_up(0, -0.5));
  CHECK(bad == 0);

  std::atomic<int> at_pole{0};
  (void)integrate_pv(
      [&](const Abscissa& p) {
        if (p.x == 1.0 || p.x == 2.5) ++at_pole;
        if (p.from_lo <= 0.0 || p.from_hi <= 0.0) ++at_pole;
        return 1.0;
      },
      IntegralSpec::finite(0, 4).with_poles({1.0, 2.5}));
  CHECK(at_pole == 0);
}

TEST_CASE("linearity on random smooth integrands") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> c(-2.0, 2.0);
  for (int i = 0; i < 30; ++i) {
    const double c0 = c(rng), c1 = c(rng), c2 = c(rng), d0 = c(rng),
                 d1 = c(rng), alpha = c(rng), beta = c(rng);
    auto f = [=](double x) { return c0 + c1 * std::sin(c2 * x); };
    auto g = [=](double x) { return std::exp(d0 * x) * std::cos(d1 * x); };
    auto h = [=](double x) { return alpha * f(x) + beta * g(x); };
    const auto spec = IntegralSpec::finite(-1, 2);
    const double lhs = integrate(h, spec).value;
    const double rhs =
        alpha * integrate(f, spec).value + beta * integrate(g, spec).value;
    CHECK(std::fabs(lhs - rhs) <=
          2 * kDefaultTolerance * std::max(1.0, std::fabs(lhs)));
  }
}

TEST_CASE("substitution invariance between unit interval and half-line") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.05, 4.0);
  for (int i = 0; i < 40; ++i) {
    const double a = u(rng), b = u(rng);
    const auto unit = integrate(
        [=](const Abscissa& p) {
          return std::pow(p.from_lo, a - 1) * std::pow(p.from_hi, b - 1);
        },
        IntegralSpec::finite(0, 1, a - 1, b - 1));
    const auto line = integrate(
        [=](const Abscissa& p) {
          return std::exp((a - 1) * std::log(p.from_lo) -
                          (a + b) * std::log1p(p.from_lo));
        },
        IntegralSpec::half_line_up(0, a - 1));
    CAPTURE(a);
    CAPTURE(b);
    CHECK(unit.converged);
    CHECK(line.converged);
    CHECK(std::fabs(unit.value - line.value) <=
          2 * kDefaultTolerance * std::max(1.0, std::fabs(unit.value)));
  }
}

TEST_CASE("successive-level differences shrink past level 3") {
  const std::vector<std::pair<Integrand, IntegralSpec>> cases = {
      {[](const Abscissa& p) { return 1 / std::sqrt(p.from_lo * p.from_hi); },
       IntegralSpec::finite(0, 1, -0.5, -0.5)},
      {[](double x) { return x * (1 - x) * (1 - x); }, IntegralSpec::finite(0, 1)},
      {[](const Abscissa& p) { return std::pow(p.from_lo, -0.9); },
       IntegralSpec::finite(0, 1, -0.9)},
      {[](double t) { return 1 / (1 + t * t); }, IntegralSpec::half_line_up(0)},
      {[](double x) { return std::exp(-x * x); }, IntegralSpec::real_line()},
      {[](double x) { return 0.5 / std::cosh(x / 2); }, IntegralSpec::real_line()},
  };
  for (const auto& [f, spec] : cases) {
    const auto r = integrate(f, spec);
    REQUIRE(r.converged);
    const auto& d = r.level_differences;
    for (std::size_t k = 3; k < d.size(); ++k) {
      CAPTURE(k);
      CHECK(d[k] <= d[k - 1]);
    }
    CHECK(r.error_estimate == d.back());
  }
}

TEST_CASE("failure statuses") {
  const auto blowup = integrate_finite(
      [](const Abscissa& p) { return 1 / p.from_lo; }, IntegralSpec::finite(0, 1));
  CHECK_FALSE(blowup.converged);
  CHECK(blowup.status == QuadStatus::max_level);

  Options tight;
  tight.max_evaluations = 50;
  const auto capped = integrate([](double x) { return std::exp(x); },
                                IntegralSpec::finite(0, 1), tight);
  CHECK_FALSE(capped.converged);
  CHECK(capped.status == QuadStatus::eval_limit);
  CHECK(capped.evaluations <= 50);

  const auto nan = integrate_finite([](double x) { return x > 0.3 ? NAN : 1.0; },
                                    IntegralSpec::finite(0, 1));
  CHECK_FALSE(nan.converged);
  CHECK(nan.status == QuadStatus::non_finite);

  // oscillation growth is caught as divergence
  Options wild;
  wild.min_level = 1;
  int calls = 0;
  const auto growing = integrate(
      [&](double) { return std::ldexp(1.0, 4 * (++calls / 64)); },
      IntegralSpec::finite(0, 1), wild);
  CHECK_FALSE(growing.converged);
}

TEST_CASE("integral shape validation") {
  CHECK_THROWS_AS(IntegralSpec::finite(0, 1, -1.0).validate(), spec_error);
  CHECK_THROWS_AS(IntegralSpec::finite(1, 1).validate(), spec_error);
  CHECK_THROWS_AS(IntegralSpec::finite(2, 1).validate(), spec_error);
  CHECK_THROWS_AS(IntegralSpec::finite(0, 1).with_poles({0.0}).validate(),
                  spec_error);
  CHECK_THROWS_AS(IntegralSpec::finite(0, 1).with_poles({0.5, 0.5}).validate(),
                  spec_error);
  CHECK_THROWS_AS(
      IntegralSpec::finite(0, 4).with_poles({1.0, 2.0, 3.0}).validate(),
      spec_error);
  CHECK_THROWS_AS(
      (void)integrate_finite([](double) { return 1.0; },
                             IntegralSpec::finite(0, 2).with_poles({1.0})),
      spec_error);
  CHECK_THROWS((void)integrate([](double x) { return x; },
                               IntegralSpec::finite(0, 1), -1.0));
  CHECK_NOTHROW(IntegralSpec::half_line_up(0, -0.5).with_poles({3.0}).validate());
}

TEST_CASE("oracle agrees with the tanh-sinh engines") {
  const double o1 = oracle_integrate([](double x) { return x; },
                                     IntegralSpec::finite(0, 1));
  CHECK(std::fabs(o1 - 0.5) <= 1e-9);
  const double o2 = oracle_integrate(
      [](const Abscissa& p) { return 1 / std::sqrt(p.from_lo * p.from_hi); },
      IntegralSpec::finite(0, 1, -0.5, -0.5));
  CHECK(std::fabs(o2 - kPi) <= 1e-9);
  const double o3 = oracle_integrate([](double x) { return x * (1 - x) * (1 - x); },
                                     IntegralSpec::finite(0, 1));
  CHECK(std::fabs(o3 - 1.0 / 12) <= 1e-9);
  const double o4 = oracle_integrate([](double t) { return 1 / (1 + t * t); },
                                     IntegralSpec::half_line_up(0));
  CHECK(std::fabs(o4 - kPi / 2) <= 1e-9);
  const double o5 = oracle_integrate([](double x) { return std::exp(-x * x); },
                                     IntegralSpec::real_line());
  CHECK(std::fabs(o5 - std::sqrt(kPi)) <= 1e-9);
  CHECK_THROWS((void)oracle_integrate([](double) { return 1.0; },
                                      IntegralSpec::finite(0, 2).with_poles({1.0})));
}

TEST_CASE("concurrent integrations are independent") {
  auto f = [](const Abscissa& p) {
    return std::pow(p.from_lo, -0.3) * std::pow(p.from_hi, 0.7);
  };
  const auto spec = IntegralSpec::finite(0, 1, -0.3, 0.7);
  const double serial = integrate(f, spec).value;
  std::vector<double> results(16);
  {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < results.size(); ++i) {
      pool.emplace_back([&, i] { results[i] = integrate(f, spec).value; });
    }
  }
  for (double r : results) CHECK(r == serial);
}
