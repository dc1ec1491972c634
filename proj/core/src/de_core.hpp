#pragma once

// Internal double-exponential machinery shared by the quadrature engines.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "betaquad/quad.hpp"

namespace betaquad::quad::detail {

/// tanh-sinh node for t > 0: `comp` = 1 - tanh(pi/2 sinh t), computed
/// without cancellation, and the transformed weight.
struct TanhSinhNode {
  double comp;
  double weight;
};

/// sinh-sinh node for t > 0: abscissa sinh(pi/2 sinh t) and its weight.
struct SinhSinhNode {
  double x;
  double weight;
};

inline constexpr int kTableLevels = 12;

/// Node tables, generated once and shared by every integration. Level 0
/// holds t = 1, 2, ...; level k > 0 holds the odd multiples of 2^-k.
class NodeTables {
 public:
  static const NodeTables& instance();

  [[nodiscard]] std::span<const TanhSinhNode> tanh_sinh(int level) const {
    return tanh_sinh_[static_cast<std::size_t>(level)];
  }
  [[nodiscard]] std::span<const SinhSinhNode> sinh_sinh(int level) const {
    return sinh_sinh_[static_cast<std::size_t>(level)];
  }

 private:
  NodeTables();
  std::vector<std::vector<TanhSinhNode>> tanh_sinh_;
  std::vector<std::vector<SinhSinhNode>> sinh_sinh_;
};

inline constexpr double kHalfPi = 1.5707963267948966;

// Shared level loop. `level_sum(k, count)` returns the weighted sum of the
// nodes new at level k (or NaN on a non-finite integrand value) and adds
// the evaluations it made to `count`. `scale` multiplies the trapezoid sum.
template <class LevelSum>
QuadratureResult run_levels(const LevelSum& level_sum, std::size_t level_cost0,
                            std::size_t (*level_cost)(int), double scale,
                            const Options& opt) {
  QuadratureResult res;
  const int max_level = std::min(opt.max_level, kTableLevels);
  double trapezoid = 0.0;
  double previous = 0.0;
  for (int k = 0; k <= max_level; ++k) {
    const std::size_t cost = k == 0 ? level_cost0 : level_cost(k);
    if (res.evaluations + cost > opt.max_evaluations) {
      res.status = QuadStatus::eval_limit;
      break;
    }
    const double s = level_sum(k, res.evaluations);
    if (!std::isfinite(s)) {
      res.status = QuadStatus::non_finite;
      break;
    }
    trapezoid = k == 0 ? s : 0.5 * trapezoid + std::ldexp(s, -k);
    res.value = scale * trapezoid;
    res.levels = k;
    if (k == 0) {
      previous = res.value;
      res.error_estimate = kInf;
      continue;
    }
    const double diff = std::fabs(res.value - previous);
    previous = res.value;
    res.error_estimate = diff;
    res.level_differences.push_back(diff);
    const double bound = opt.tol * std::max(1.0, std::fabs(res.value));
    if (k >= opt.min_level && diff <= bound) {
      res.status = QuadStatus::converged;
      res.converged = true;
      return res;
    }
    const auto& d = res.level_differences;
    const std::size_t n = d.size();
    const double noise = 1e-13 * std::max(1.0, std::fabs(res.value));
    if (k > 3 && n >= 3 && d[n - 1] > d[n - 2] && d[n - 2] > d[n - 3] &&
        d[n - 1] > noise) {
      res.status = QuadStatus::divergent;
      return res;
    }
    res.status = QuadStatus::max_level;
  }
  return res;
}

/// tanh-sinh over an interval of width 2*half. `g(from_a, from_b)` receives
/// the exact distances to both ends.
template <class G>
QuadratureResult tanh_sinh(const G& g, double half, const Options& opt) {
  const auto& tables = NodeTables::instance();
  auto level_sum = [&](int k, std::size_t& count) {
    double s = 0.0;
    if (k == 0) {
      s += kHalfPi * g(half, half);
      ++count;
    }
    for (const auto& node : tables.tanh_sinh(k)) {
      const double near = half * node.comp;
      const double far = half * (2.0 - node.comp);
      const double left = g(near, far);
      const double right = g(far, near);
      count += 2;
      if (!std::isfinite(left) || !std::isfinite(right)) {
        return std::nan("");
      }
      s += node.weight * (left + right);
    }
    return s;
  };
  auto cost = [](int k) -> std::size_t {
    return 2 * NodeTables::instance().tanh_sinh(k).size();
  };
  return run_levels(level_sum, cost(0) + 1, +cost, half, opt);
}

/// sinh-sinh over the real line; `g(x)` is the plain integrand.
template <class G>
QuadratureResult sinh_sinh(const G& g, const Options& opt) {
  const auto& tables = NodeTables::instance();
  auto level_sum = [&](int k, std::size_t& count) {
    double pos = 0.0;
    double neg = 0.0;
    if (k == 0) {
      pos += 0.5 * kHalfPi * g(0.0);
      neg += 0.5 * kHalfPi * g(-0.0);
      count += 2;
    }
    for (const auto& node : tables.sinh_sinh(k)) {
      const double right = g(node.x);
      const double left = g(-node.x);
      count += 2;
      if (!std::isfinite(left) || !std::isfinite(right)) {
        return std::nan("");
      }
      pos += node.weight * right;
      neg += node.weight * left;
    }
    // Summing each side separately keeps odd integrands exactly zero.
    return pos + neg;
  };
  auto cost = [](int k) -> std::size_t {
    return 2 * NodeTables::instance().sinh_sinh(k).size();
  };
  return run_levels(level_sum, cost(0) + 2, +cost, 1.0, opt);
}

// Segment engines. The segment is a piece of a global domain [lo_g, hi_g];
// the integrand always sees distances to the global ends.
QuadratureResult finite_segment(const Integrand& f, double a, double b,
                                double lo_g, double hi_g, const Options& opt);
QuadratureResult half_up_segment(const Integrand& f, double a, double lo_g,
                                 const Options& opt);
QuadratureResult half_down_segment(const Integrand& f, double b, double hi_g,
                                   const Options& opt);

/// Sums a set of component results into one composite result.
void accumulate(QuadratureResult& total, const QuadratureResult& part);

}  // namespace betaquad::quad::detail
