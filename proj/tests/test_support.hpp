#pragma once

#include <algorithm>
#include <cmath>

namespace betaquad::testing {

inline constexpr double kPi = 3.14159265358979323846;

inline double rel_diff(double got, double want) {
  if (got == want) return 0.0;
  return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}

}  // namespace betaquad::testing
