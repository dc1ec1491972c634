#pragma once

// Double-exponential quadrature for the integral shapes that show up in
// beta-function identities: finite intervals with integrable power-law
// endpoint singularities, half-lines, the real line, and Cauchy principal
// values through one or two simple interior poles.

#include <concepts>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace betaquad::quad {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Requested tolerance used when callers do not pass one.
inline constexpr double kDefaultTolerance = 1e-10;

/// A point handed to an integrand.
///
/// `from_lo` and `from_hi` are the distances to the lower and upper end of
/// the integration domain, produced directly by the node generator rather
/// than by subtracting from `x`. Near an endpoint they carry full relative
/// precision even when `x` itself has rounded onto the endpoint. Unbounded
/// ends report +inf.
struct Abscissa {
  double x;
  double from_lo;
  double from_hi;
};

/// Pure, deterministic real function on the integration domain. Accepts
/// either a plain `double(double)` callable or one taking an Abscissa.
class Integrand {
 public:
  Integrand() = default;

  template <class F>
    requires std::is_invocable_r_v<double, const F&, const Abscissa&>
  Integrand(F f)  // NOLINT(google-explicit-constructor)
      : fn_(std::move(f)) {}

  template <class F>
    requires(std::is_invocable_r_v<double, const F&, double> &&
             !std::is_invocable_r_v<double, const F&, const Abscissa&>)
  Integrand(F f)  // NOLINT(google-explicit-constructor)
      : fn_([g = std::move(f)](const Abscissa& p) { return g(p.x); }) {}

  double operator()(const Abscissa& p) const { return fn_(p); }

  explicit operator bool() const noexcept { return static_cast<bool>(fn_); }

 private:
  std::function<double(const Abscissa&)> fn_;
};

enum class DomainKind { finite, half_line_up, half_line_down, real_line };

[[nodiscard]] const char* to_string(DomainKind kind) noexcept;

/// Raised for malformed integral specifications.
class spec_error : public std::invalid_argument {
 public:
  explicit spec_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by the principal-value engine when no symmetric window fits
/// around a pole.
class pole_window_error : public spec_error {
 public:
  explicit pole_window_error(const std::string& what) : spec_error(what) {}
};

/// Shape of an integral: domain, endpoint singularity exponents, poles.
///
/// The integrand is assumed to behave like (x - lo)^alpha_lo near a finite
/// lower end and like (hi - x)^alpha_hi near a finite upper end. Exponents
/// for unbounded ends are ignored.
struct IntegralSpec {
  DomainKind kind = DomainKind::finite;
  double lo = 0.0;
  double hi = 1.0;
  double alpha_lo = 0.0;
  double alpha_hi = 0.0;
  std::vector<double> poles;

  static IntegralSpec finite(double lo, double hi, double alpha_lo = 0.0,
                             double alpha_hi = 0.0);
  static IntegralSpec half_line_up(double lo, double alpha_lo = 0.0);
  static IntegralSpec half_line_down(double hi, double alpha_hi = 0.0);
  static IntegralSpec real_line();

  /// Copy of this spec with simple poles declared at `at` (sorted).
  [[nodiscard]] IntegralSpec with_poles(std::vector<double> at) const;

  [[nodiscard]] bool has_finite_lo() const noexcept;
  [[nodiscard]] bool has_finite_hi() const noexcept;

  /// Throws spec_error unless every invariant holds: exponents > -1,
  /// lo < hi, at most two poles, each strictly inside and pairwise distinct.
  void validate() const;
};

enum class QuadStatus {
  converged,
  max_level,    // level cap reached before the tolerance was met
  divergent,    // successive differences grew twice in a row
  eval_limit,   // evaluation budget exhausted
  non_finite,   // integrand returned inf/nan at an interior node
};

[[nodiscard]] const char* to_string(QuadStatus status) noexcept;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
  QuadStatus status = QuadStatus::max_level;
  int levels = 0;
  /// |I_k - I_{k-1}| for k = 1, 2, ...; empty for composite results.
  std::vector<double> level_differences;
};

struct Options {
  double tol = kDefaultTolerance;
  int max_level = 12;
  int min_level = 3;
  std::size_t max_evaluations = 1'000'000;
};

/// tanh-sinh on a finite interval. Accepts when the level-to-level change
/// drops below tol * max(1, |value|).
[[nodiscard]] QuadratureResult integrate_finite(const Integrand& f,
                                                const IntegralSpec& spec,
                                                double tol = kDefaultTolerance);

/// [lo, inf) or (-inf, hi], mapped onto tanh-sinh by x = lo + s / (1 - s).
[[nodiscard]] QuadratureResult integrate_half_line(
    const Integrand& f, const IntegralSpec& spec,
    double tol = kDefaultTolerance);

/// sinh-sinh over the whole real line.
[[nodiscard]] QuadratureResult integrate_real_line(
    const Integrand& f, double tol = kDefaultTolerance);

/// Cauchy principal value of regular(x) / prod_i (x - poles[i]).
///
/// `regular` is the pole-free factor of the integrand; the engine divides
/// by the pole factors itself so the offset from each pole is exact inside
/// the symmetric windows. Each pole gets a window of half-width h equal to
/// half the distance to its nearest neighbour (endpoint or other pole); the
/// window is folded onto (0, h) and integrated by tanh-sinh, and the
/// remaining pieces go to the finite and half-line engines.
[[nodiscard]] QuadratureResult integrate_pv(const Integrand& regular,
                                            const IntegralSpec& spec,
                                            double tol = kDefaultTolerance);

/// Selects the engine from the spec. When poles are declared, `f` is the
/// regular part as for integrate_pv.
[[nodiscard]] QuadratureResult integrate(const Integrand& f,
                                         const IntegralSpec& spec,
                                         double tol = kDefaultTolerance);

/// Same as integrate_finite / integrate_half_line / integrate_real_line with
/// full control over level caps and evaluation budget.
[[nodiscard]] QuadratureResult integrate(const Integrand& f,
                                         const IntegralSpec& spec,
                                         const Options& options);

/// Independent cross-check: adaptive Gauss-Kronrod (7/15) with bisection of
/// the worst subinterval, after a power-law substitution
/// x = lo + u^(1/(1 + alpha_lo)) that removes declared endpoint
/// singularities. Unbounded pieces go through x = lo + e^y. Principal-value
/// specs are rejected. Throws std::runtime_error when the adaptive scheme
/// cannot reach its internal tolerance.
[[nodiscard]] double oracle_integrate(const Integrand& f,
                                      const IntegralSpec& spec);

}  // namespace betaquad::quad
