#include <algorithm>
#include <cmath>
#include <sstream>

#include "betaquad/quad.hpp"
#include "de_core.hpp"

namespace betaquad::quad {

namespace {

struct Window {
  double pole;
  double half_width;
};

// Half the distance from each pole to its nearest neighbour (domain end or
// other pole). Unbounded on both sides gets a unit window.
std::vector<Window> pole_windows(const IntegralSpec& spec) {
  std::vector<Window> windows;
  const auto& poles = spec.poles;
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const double s = poles[i];
    const double left = i == 0 ? spec.lo : poles[i - 1];
    const double right = i + 1 == poles.size() ? spec.hi : poles[i + 1];
    const double gap = std::min(s - left, right - s);
    const double h = std::isfinite(gap) ? 0.5 * gap : 1.0;
    if (!(h > 1e-12 * std::max(1.0, std::fabs(s)))) {
      std::ostringstream os;
      os.precision(17);
      os << "integrate_pv: no symmetric window fits around pole " << s;
      throw pole_window_error(os.str());
    }
    windows.push_back({s, h});
  }
  return windows;
}

}  // namespace

QuadratureResult integrate_pv(const Integrand& regular,
                              const IntegralSpec& spec, double tol) {
  spec.validate();
  if (spec.poles.empty()) {
    throw spec_error("integrate_pv: no interior poles declared");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("quadrature tolerance must be positive");
  }
  Options opt;
  opt.tol = tol;

  const std::vector<double>& poles = spec.poles;
  const double lo = spec.lo;
  const double hi = spec.hi;
  auto from_lo = [&](double x) { return std::isfinite(lo) ? x - lo : kInf; };
  auto from_hi = [&](double x) { return std::isfinite(hi) ? hi - x : kInf; };

  // f(x) = regular(x) / prod (x - s_j), away from the windows.
  const Integrand full = [&](const Abscissa& p) {
    double denom = 1.0;
    for (double s : poles) denom *= p.x - s;
    return regular(p) / denom;
  };

  const std::vector<Window> windows = pole_windows(spec);
  QuadratureResult total;

  for (std::size_t i = 0; i < windows.size(); ++i) {
    const double s = windows[i].pole;
    // Product over the other poles, evaluated at s + u.
    auto others = [&](double x) {
      double prod = 1.0;
      for (std::size_t j = 0; j < poles.size(); ++j) {
        if (j != i) prod *= x - poles[j];
      }
      return prod;
    };
    // f(s + u) + f(s - u); the 1/u pole parts cancel.
    auto folded = [&](double u, double /*to_window_edge*/) {
      const double xr = s + u;
      const double xl = s - u;
      // Offsets below half an ulp of s would land on the pole itself; the
      // folded integrand is bounded there, so the skipped sliver is below
      // rounding level.
      if (xr == s || xl == s) return 0.0;
      const double right = regular({xr, from_lo(xr), from_hi(xr)}) / others(xr);
      const double left = regular({xl, from_lo(xl), from_hi(xl)}) / others(xl);
      return (right - left) / u;
    };
    detail::accumulate(total, detail::tanh_sinh(folded,
                                                0.5 * windows[i].half_width,
                                                opt));
  }

  // Pieces between the windows.
  double cursor = lo;
  for (std::size_t i = 0; i <= windows.size(); ++i) {
    const double next =
        i < windows.size() ? windows[i].pole - windows[i].half_width : hi;
    if (!std::isfinite(cursor) && !std::isfinite(next)) {
      break;  // unreachable: at least one pole splits the line
    }
    if (!std::isfinite(cursor)) {
      detail::accumulate(total, detail::half_down_segment(full, next, hi, opt));
    } else if (!std::isfinite(next)) {
      detail::accumulate(total, detail::half_up_segment(full, cursor, lo, opt));
    } else if (next > cursor) {
      detail::accumulate(total,
                         detail::finite_segment(full, cursor, next, lo, hi, opt));
    }
    if (i < windows.size()) {
      cursor = windows[i].pole + windows[i].half_width;
    }
  }
  return total;
}

}  // namespace betaquad::quad
