#include <algorithm>
#include <cmath>
#include <sstream>

#include "betaquad/quad.hpp"
#include "de_core.hpp"

namespace betaquad::quad {
namespace detail {

NodeTables::NodeTables()
    : tanh_sinh_(kTableLevels + 1), sinh_sinh_(kTableLevels + 1) {
  // tanh-sinh: stop once the weight underflows below 1e-300. The
  // complement 1 - tanh(u) = 1 / (e^u cosh u) avoids cancellation.
  constexpr double kWeightFloor = 1e-300;
  // sinh-sinh: stop before sinh(u) leaves the double range.
  constexpr double kMaxU = 690.0;
  for (int k = 0; k <= kTableLevels; ++k) {
    const double h = std::ldexp(1.0, -k);
    const int step = k == 0 ? 1 : 2;
    auto& ts = tanh_sinh_[static_cast<std::size_t>(k)];
    for (int j = 1;; j += step) {
      const double t = j * h;
      const double u = kHalfPi * std::sinh(t);
      const double cu = std::cosh(u);
      const double weight = kHalfPi * std::cosh(t) / (cu * cu);
      if (!(weight >= kWeightFloor)) break;
      ts.push_back({1.0 / (std::exp(u) * cu), weight});
    }
    auto& ss = sinh_sinh_[static_cast<std::size_t>(k)];
    for (int j = 1;; j += step) {
      const double t = j * h;
      const double u = kHalfPi * std::sinh(t);
      if (u > kMaxU) break;
      ss.push_back({std::sinh(u), kHalfPi * std::cosh(t) * std::cosh(u)});
    }
  }
}

const NodeTables& NodeTables::instance() {
  static const NodeTables tables;
  return tables;
}

namespace {

double global_from_lo(double x, double lo_g) {
  return std::isfinite(lo_g) ? x - lo_g : kInf;
}

double global_from_hi(double x, double hi_g) {
  return std::isfinite(hi_g) ? hi_g - x : kInf;
}

}  // namespace

QuadratureResult finite_segment(const Integrand& f, double a, double b,
                                double lo_g, double hi_g, const Options& opt) {
  const double half = 0.5 * (b - a);
  const bool at_lo = a == lo_g;
  const bool at_hi = b == hi_g;
  auto g = [&](double da, double db) {
    const double x = da <= db ? a + da : b - db;
    const Abscissa p{x, at_lo ? da : global_from_lo(x, lo_g),
                     at_hi ? db : global_from_hi(x, hi_g)};
    return f(p);
  };
  return tanh_sinh(g, half, opt);
}

// [a, inf) through x = a + s / (1 - s); dx = ds / (1 - s)^2.
QuadratureResult half_up_segment(const Integrand& f, double a, double lo_g,
                                 const Options& opt) {
  const bool at_lo = a == lo_g;
  auto g = [&](double ds, double dcs) {
    const double d = ds / dcs;
    const double x = a + d;
    const double v = f({x, at_lo ? d : global_from_lo(x, lo_g), kInf});
    return v / dcs / dcs;
  };
  return tanh_sinh(g, 0.5, opt);
}

QuadratureResult half_down_segment(const Integrand& f, double b, double hi_g,
                                   const Options& opt) {
  const bool at_hi = b == hi_g;
  auto g = [&](double ds, double dcs) {
    const double d = ds / dcs;
    const double x = b - d;
    const double v = f({x, kInf, at_hi ? d : global_from_hi(x, hi_g)});
    return v / dcs / dcs;
  };
  return tanh_sinh(g, 0.5, opt);
}

void accumulate(QuadratureResult& total, const QuadratureResult& part) {
  const bool first = total.evaluations == 0;
  total.value += part.value;
  total.error_estimate += part.error_estimate;
  total.evaluations += part.evaluations;
  total.levels = std::max(total.levels, part.levels);
  if (first) {
    total.converged = part.converged;
    total.status = part.status;
  } else if (total.converged && !part.converged) {
    total.converged = false;
    total.status = part.status;
  }
}

}  // namespace detail

const char* to_string(DomainKind kind) noexcept {
  switch (kind) {
    case DomainKind::finite: return "finite";
    case DomainKind::half_line_up: return "half_line_up";
    case DomainKind::half_line_down: return "half_line_down";
    case DomainKind::real_line: return "real_line";
  }
  return "unknown";
}

const char* to_string(QuadStatus status) noexcept {
  switch (status) {
    case QuadStatus::converged: return "converged";
    case QuadStatus::max_level: return "max_level";
    case QuadStatus::divergent: return "divergent";
    case QuadStatus::eval_limit: return "eval_limit";
    case QuadStatus::non_finite: return "non_finite";
  }
  return "unknown";
}

IntegralSpec IntegralSpec::finite(double lo, double hi, double alpha_lo,
                                  double alpha_hi) {
  return {DomainKind::finite, lo, hi, alpha_lo, alpha_hi, {}};
}

IntegralSpec IntegralSpec::half_line_up(double lo, double alpha_lo) {
  return {DomainKind::half_line_up, lo, kInf, alpha_lo, 0.0, {}};
}

IntegralSpec IntegralSpec::half_line_down(double hi, double alpha_hi) {
  return {DomainKind::half_line_down, -kInf, hi, 0.0, alpha_hi, {}};
}

IntegralSpec IntegralSpec::real_line() {
  return {DomainKind::real_line, -kInf, kInf, 0.0, 0.0, {}};
}

IntegralSpec IntegralSpec::with_poles(std::vector<double> at) const {
  IntegralSpec copy = *this;
  std::sort(at.begin(), at.end());
  copy.poles = std::move(at);
  return copy;
}

bool IntegralSpec::has_finite_lo() const noexcept {
  return kind == DomainKind::finite || kind == DomainKind::half_line_up;
}

bool IntegralSpec::has_finite_hi() const noexcept {
  return kind == DomainKind::finite || kind == DomainKind::half_line_down;
}

void IntegralSpec::validate() const {
  std::ostringstream os;
  os.precision(17);
  if (has_finite_lo() && !std::isfinite(lo)) {
    os << "lower endpoint " << lo << " must be finite";
  } else if (has_finite_hi() && !std::isfinite(hi)) {
    os << "upper endpoint " << hi << " must be finite";
  } else if (kind == DomainKind::finite && !(lo < hi)) {
    os << "empty interval [" << lo << ", " << hi << "]";
  } else if (has_finite_lo() && !(alpha_lo > -1.0)) {
    os << "lower endpoint exponent " << alpha_lo << " is not integrable";
  } else if (has_finite_hi() && !(alpha_hi > -1.0)) {
    os << "upper endpoint exponent " << alpha_hi << " is not integrable";
  } else if (poles.size() > 2) {
    os << poles.size() << " poles declared; at most 2 are supported";
  } else {
    for (std::size_t i = 0; i < poles.size(); ++i) {
      const double s = poles[i];
      if (!std::isfinite(s) || !(s > lo) || !(s < hi)) {
        os << "pole " << s << " is not strictly inside the domain";
        break;
      }
      if (i > 0 && !(poles[i - 1] < s)) {
        os << "poles must be pairwise distinct";
        break;
      }
    }
  }
  const std::string message = os.str();
  if (!message.empty()) {
    throw spec_error("invalid integral spec: " + message);
  }
}

namespace {

void require_kind(const IntegralSpec& spec, bool ok, const char* engine) {
  spec.validate();
  if (!ok) {
    throw spec_error(std::string(engine) + ": unsupported domain kind " +
                     to_string(spec.kind));
  }
  if (!spec.poles.empty()) {
    throw spec_error(std::string(engine) +
                     ": poles declared; use integrate_pv");
  }
}

Options with_tol(double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("quadrature tolerance must be positive");
  }
  Options opt;
  opt.tol = tol;
  return opt;
}

}  // namespace

QuadratureResult integrate_finite(const Integrand& f, const IntegralSpec& spec,
                                  double tol) {
  require_kind(spec, spec.kind == DomainKind::finite, "integrate_finite");
  return detail::finite_segment(f, spec.lo, spec.hi, spec.lo, spec.hi,
                                with_tol(tol));
}

QuadratureResult integrate_half_line(const Integrand& f,
                                     const IntegralSpec& spec, double tol) {
  require_kind(spec,
               spec.kind == DomainKind::half_line_up ||
                   spec.kind == DomainKind::half_line_down,
               "integrate_half_line");
  const Options opt = with_tol(tol);
  return spec.kind == DomainKind::half_line_up
             ? detail::half_up_segment(f, spec.lo, spec.lo, opt)
             : detail::half_down_segment(f, spec.hi, spec.hi, opt);
}

QuadratureResult integrate_real_line(const Integrand& f, double tol) {
  const Options opt = with_tol(tol);
  auto g = [&](double x) { return f({x, kInf, kInf}); };
  return detail::sinh_sinh(g, opt);
}

QuadratureResult integrate(const Integrand& f, const IntegralSpec& spec,
                           double tol) {
  if (!spec.poles.empty()) return integrate_pv(f, spec, tol);
  switch (spec.kind) {
    case DomainKind::finite: return integrate_finite(f, spec, tol);
    case DomainKind::half_line_up:
    case DomainKind::half_line_down: return integrate_half_line(f, spec, tol);
    case DomainKind::real_line: return integrate_real_line(f, tol);
  }
  throw spec_error("unknown domain kind");
}

QuadratureResult integrate(const Integrand& f, const IntegralSpec& spec,
                           const Options& options) {
  require_kind(spec, true, "integrate");
  if (!(options.tol > 0.0)) {
    throw std::invalid_argument("quadrature tolerance must be positive");
  }
  switch (spec.kind) {
    case DomainKind::finite:
      return detail::finite_segment(f, spec.lo, spec.hi, spec.lo, spec.hi,
                                    options);
    case DomainKind::half_line_up:
      return detail::half_up_segment(f, spec.lo, spec.lo, options);
    case DomainKind::half_line_down:
      return detail::half_down_segment(f, spec.hi, spec.hi, options);
    case DomainKind::real_line: {
      auto g = [&](double x) { return f({x, kInf, kInf}); };
      return detail::sinh_sinh(g, options);
    }
  }
  throw spec_error("unknown domain kind");
}

}  // namespace betaquad::quad
