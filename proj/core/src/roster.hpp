#pragma once

// Building blocks shared by the roster sources: parameter declarations and
// overflow- and cancellation-safe pieces used by the integrands.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "betaquad/catalog.hpp"
#include "betaquad/quad.hpp"
#include "betaquad/specfun.hpp"

namespace betaquad::catalog::roster {

using quad::Abscissa;
using quad::IntegralSpec;
using quad::Integrand;
namespace sf = specfun;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Real parameter on (lo, hi] unless stated otherwise.
inline ParamRange real(std::string name, double lo, double hi,
                       bool lo_open = true, bool hi_open = false,
                       std::vector<double> excluded = {}) {
  return {std::move(name), ParamKind::real, lo,         hi,
          lo_open,         hi_open,         std::move(excluded)};
}

/// Real parameter on the open interval (lo, hi).
inline ParamRange open(std::string name, double lo, double hi,
                       std::vector<double> excluded = {}) {
  return real(std::move(name), lo, hi, true, true, std::move(excluded));
}

/// Real parameter on the closed interval [lo, hi].
inline ParamRange closed(std::string name, double lo, double hi) {
  return real(std::move(name), lo, hi, false, false);
}

/// Integer parameter on [lo, hi].
inline ParamRange integer(std::string name, int lo, int hi) {
  return {std::move(name), ParamKind::integer, double(lo), double(hi),
          false,           false,              {}};
}

inline Relation relation(std::string text,
                         std::function<double(const ParamSet&)> slack,
                         double min_slack) {
  return {std::move(text), std::move(slack), min_slack};
}

/// ln x for a point of [0, 1], exact near either end.
inline double log_unit(const Abscissa& p) {
  return p.from_lo < 0.5 ? std::log(p.from_lo) : std::log1p(-p.from_hi);
}

/// 1 - x^a for a point of [0, 1].
inline double one_minus_pow(const Abscissa& p, double a) {
  return -std::expm1(a * log_unit(p));
}

/// log(1 + e^z) without overflow.
inline double softplus(double z) {
  return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

/// log(e^a + e^b) without overflow.
inline double logaddexp(double a, double b) {
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::fabs(a - b)));
}

/// ln cosh x without overflow.
inline double log_cosh(double x) {
  const double ax = std::fabs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::log(2.0);
}

inline double cosec_pi(double x) { return 1.0 / sf::sin_pi(x); }

void add_group_a(std::vector<IdentityRecord>& out);
void add_group_b(std::vector<IdentityRecord>& out);
void add_group_c(std::vector<IdentityRecord>& out);
void add_group_d(std::vector<IdentityRecord>& out);
void add_group_e(std::vector<IdentityRecord>& out);
void add_group_f(std::vector<IdentityRecord>& out);
void add_group_g(std::vector<IdentityRecord>& out);
void add_group_h(std::vector<IdentityRecord>& out);
void add_group_i(std::vector<IdentityRecord>& out);
void add_group_j(std::vector<IdentityRecord>& out);

}  // namespace betaquad::catalog::roster
