#include "betaquad/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace betaquad::specfun {
namespace {

constexpr double kPi = std::numbers::pi;

// Godfrey's coefficients for the Lanczos sum with g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoef = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

std::string describe(const char* fn, double x) {
  std::ostringstream os;
  os.precision(17);
  os << fn << ": argument " << x;
  return os.str();
}

void require_finite(const char* fn, double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error(describe(fn, x) + " is not finite");
  }
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

double lanczos_sum(double z) {
  double sum = kLanczosCoef[0];
  for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) {
    sum += kLanczosCoef[i] / (z + static_cast<double>(i));
  }
  return sum;
}

// Gamma(x) for x >= 0.5. The power is split in two halves so that
// t^(x - 1/2) does not overflow before e^-t brings it back down.
double gamma_lanczos(double x) {
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  const double half_power = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * kPi) * half_power * std::exp(-t) * half_power *
         lanczos_sum(z);
}

double log_gamma_lanczos(double x) {
  const double z = x - 1.0;
  const double t = z + kLanczosG + 0.5;
  return (z + 0.5) * std::log(t) - t +
         std::log(std::sqrt(2.0 * kPi) * lanczos_sum(z));
}

const std::array<double, 171>& factorial_table() {
  static const std::array<double, 171> table = [] {
    std::array<double, 171> t{};
    t[0] = 1.0;
    for (std::size_t n = 1; n < t.size(); ++n) {
      t[n] = t[n - 1] * static_cast<double>(n);
    }
    return t;
  }();
  return table;
}

}  // namespace

double sin_pi(double x) {
  double r = std::remainder(x, 2.0);  // exact, r in [-1, 1]
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  const double r = std::fabs(std::remainder(x, 2.0));
  if (r < 0.25) {
    return std::cos(kPi * r);
  }
  // 0.5 - r is exact for r in [0.25, 1].
  return std::sin(kPi * (0.5 - r));
}

double cot_pi(double x) { return cos_pi(x) / sin_pi(x); }

double factorial(int n) {
  if (n < 0 || n > 170) {
    throw std::domain_error("factorial: n outside [0, 170]");
  }
  return factorial_table()[static_cast<std::size_t>(n)];
}

double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n || n > 170) {
    throw std::domain_error("binomial: need 0 <= k <= n <= 170");
  }
  k = std::min(k, n - k);
  double result = 1.0;
  for (int i = 1; i <= k; ++i) {
    // Each partial product is C(n - k + i, i), an integer.
    result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return result;
}

double gamma(double x) {
  require_finite("gamma", x);
  if (is_nonpositive_integer(x)) {
    throw pole_error(describe("gamma", x) + " is a pole");
  }
  if (x > kGammaMaxArg) {
    throw overflow_error(describe("gamma", x) + " overflows");
  }
  if (x == std::floor(x)) {
    return factorial(static_cast<int>(x) - 1);
  }
  if (x < 0.5) {
    if (1.0 - x > kGammaMaxArg) {
      int sign = 1;
      const double log_abs = log_abs_gamma(x, &sign);
      return sign * std::exp(log_abs);
    }
    return kPi / (sin_pi(x) * gamma_lanczos(1.0 - x));
  }
  return gamma_lanczos(x);
}

double log_gamma(double x) {
  require_finite("log_gamma", x);
  if (x <= 0.0) {
    throw std::domain_error(describe("log_gamma", x) + " must be positive");
  }
  if (x < 0.5) {
    return std::log(kPi / sin_pi(x)) - log_gamma(1.0 - x);
  }
  if (x <= 100.0) {
    return std::log(gamma(x));
  }
  return log_gamma_lanczos(x);
}

double log_abs_gamma(double x, int* sign) {
  require_finite("log_abs_gamma", x);
  if (is_nonpositive_integer(x)) {
    throw pole_error(describe("log_abs_gamma", x) + " is a pole");
  }
  if (x > 0.0) {
    if (sign != nullptr) *sign = 1;
    return log_gamma(x);
  }
  const double s = sin_pi(x);
  if (sign != nullptr) *sign = s < 0.0 ? -1 : 1;
  return std::log(kPi) - std::log(std::fabs(s)) - log_gamma(1.0 - x);
}

namespace {

struct SignedLog {
  double log_abs;
  int sign;
};

SignedLog signed_log_beta(double a, double b) {
  require_finite("beta", a);
  require_finite("beta", b);
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  const double sum = lo + hi;
  if (is_nonpositive_integer(lo) || is_nonpositive_integer(hi) ||
      is_nonpositive_integer(sum)) {
    std::ostringstream os;
    os.precision(17);
    os << "beta: arguments (" << a << ", " << b << ") hit a gamma pole";
    throw pole_error(os.str());
  }
  int s_lo = 1;
  int s_hi = 1;
  int s_sum = 1;
  const double l_lo = log_abs_gamma(lo, &s_lo);
  const double l_hi = log_abs_gamma(hi, &s_hi);
  const double l_sum = log_abs_gamma(sum, &s_sum);
  return {l_lo + l_hi - l_sum, s_lo * s_hi * s_sum};
}

}  // namespace

double beta(double a, double b) {
  const auto [log_abs, sign] = signed_log_beta(a, b);
  return sign * std::exp(log_abs);
}

double log_beta(double a, double b) { return signed_log_beta(a, b).log_abs; }

double digamma(double x) {
  require_finite("digamma", x);
  if (is_nonpositive_integer(x)) {
    throw pole_error(describe("digamma", x) + " is a pole");
  }
  if (x < 0.0) {
    // psi(1 - x) - psi(x) = pi cot(pi x)
    return digamma(1.0 - x) - kPi * cot_pi(x);
  }
  double shift = 0.0;
  while (x < 8.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  // Asymptotic series with Bernoulli numbers B2..B14.
  const double inv2 = 1.0 / (x * x);
  const double tail =
      inv2 * (1.0 / 12 -
      inv2 * (1.0 / 120 -
      inv2 * (1.0 / 252 -
      inv2 * (1.0 / 240 -
      inv2 * (1.0 / 132 -
      inv2 * (691.0 / 32760 -
      inv2 * (1.0 / 12)))))));
  return shift + std::log(x) - 0.5 / x - tail;
}

double reflection_residual(double a) {
  return gamma(a) * gamma(1.0 - a) - kPi / sin_pi(a);
}

double duplication_residual(double a) {
  const double lhs = gamma(a + 0.5);
  const double rhs = gamma(2.0 * a) * gamma(0.5) /
                     (gamma(a) * std::exp2(2.0 * a - 1.0));
  return lhs - rhs;
}

}  // namespace betaquad::specfun
