#pragma once

// Real-argument gamma, log-gamma, digamma and beta functions.
//
// Everything here is a pure function of its arguments. Arguments must be
// finite; poles (zero and the negative integers) raise pole_error.

#include <stdexcept>
#include <string>

namespace betaquad::specfun {

/// Raised when an argument sits on a pole of gamma or digamma.
class pole_error : public std::domain_error {
 public:
  explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

/// Raised when gamma(x) is not representable as a double (x > ~171.62).
class overflow_error : public std::overflow_error {
 public:
  explicit overflow_error(const std::string& what) : std::overflow_error(what) {}
};

/// Largest argument for which gamma(x) is finite in double precision.
inline constexpr double kGammaMaxArg = 171.624376956302;

/// Gamma function. Relative error below 1e-13 on [0.5, 171]; arguments
/// below 0.5 go through the reflection formula.
[[nodiscard]] double gamma(double x);

/// ln Gamma(x) for x > 0. Throws std::domain_error for x <= 0.
[[nodiscard]] double log_gamma(double x);

/// ln|Gamma(x)| on the whole real line minus the poles; the sign of Gamma(x)
/// is written to *sign when sign is non-null.
[[nodiscard]] double log_abs_gamma(double x, int* sign = nullptr);

/// Beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).
///
/// Evaluated in log space with explicit sign tracking so large arguments
/// do not overflow. The arguments are ordered before evaluation, so
/// beta(a, b) and beta(b, a) agree bit for bit.
[[nodiscard]] double beta(double a, double b);

/// ln|B(a, b)|.
[[nodiscard]] double log_beta(double a, double b);

/// Digamma psi(x) = Gamma'(x) / Gamma(x).
[[nodiscard]] double digamma(double x);

/// Gamma(a) Gamma(1 - a) - pi / sin(pi a), for 0 < a < 1.
[[nodiscard]] double reflection_residual(double a);

/// Gamma(a + 1/2) - Gamma(2a) Gamma(1/2) / (Gamma(a) 2^(2a - 1)), for a > 0.
[[nodiscard]] double duplication_residual(double a);

// Trigonometric helpers with exact argument reduction in units of pi. They
// are what the closed forms (cosec, cot of pi*p/q and friends) are built on.
[[nodiscard]] double sin_pi(double x);
[[nodiscard]] double cos_pi(double x);
[[nodiscard]] double cot_pi(double x);

/// n! for 0 <= n <= 170, exact through 22!.
[[nodiscard]] double factorial(int n);

/// Binomial coefficient C(n, k) for 0 <= k <= n <= 170.
[[nodiscard]] double binomial(int n, int k);

}  // namespace betaquad::specfun
