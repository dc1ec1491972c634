// Adaptive Gauss-Kronrod cross-check. Deliberately shares nothing with the
// double-exponential engines beyond the Integrand type.

#include <array>
#include <cmath>
#include <functional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "betaquad/quad.hpp"

namespace betaquad::quad {
namespace {

// 15-point Kronrod abscissae (positive half, descending) and weights; the
// odd-indexed abscissae are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

using Piece = std::function<double(double)>;

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment kronrod15(const Piece& g, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = g(center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = g(center - dx) + g(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

constexpr double kRelTol = 1e-12;
constexpr double kAbsTol = 1e-15;
constexpr std::size_t kMaxSegments = 20000;

double adaptive(const Piece& g, double a, double b, int initial_pieces) {
  std::priority_queue<Segment> heap;
  double value = 0.0;
  double error = 0.0;
  const double width = (b - a) / initial_pieces;
  for (int i = 0; i < initial_pieces; ++i) {
    const double lo = a + i * width;
    const double hi = i + 1 == initial_pieces ? b : a + (i + 1) * width;
    Segment s = kronrod15(g, lo, hi);
    value += s.value;
    error += s.error;
    heap.push(s);
  }
  while (error > std::max(kAbsTol, kRelTol * std::fabs(value))) {
    if (heap.size() >= kMaxSegments) break;
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // cannot split further
    heap.pop();
    const Segment left = kronrod15(g, worst.a, mid);
    const Segment right = kronrod15(g, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum from scratch to shed the incremental rounding.
  value = 0.0;
  error = 0.0;
  std::vector<Segment> all;
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  for (const auto& s : all) {
    value += s.value;
    error += s.error;
  }
  if (!std::isfinite(value) ||
      error > std::max(1e-13, 1e-10 * std::fabs(value))) {
    std::ostringstream os;
    os.precision(6);
    os << "oracle_integrate: Gauss-Kronrod did not converge on [" << a << ", "
       << b << "] (value " << value << ", error " << error << ")";
    throw std::runtime_error(os.str());
  }
  return value;
}

// Integral of f over distances (0, len] from an endpoint, with the
// singularity (exponent alpha) there removed by distance = u^k.
// `at_distance` maps a distance to the Abscissa seen by f.
double endpoint_piece(const Integrand& f, double len, double alpha,
                      const std::function<Abscissa(double)>& at_distance) {
  const double k = alpha < 0.0 ? 1.0 / (1.0 + alpha) : 1.0;
  const double upper = std::pow(len, 1.0 / k);
  Piece g = [&](double u) {
    const double d = std::pow(u, k);
    if (d == 0.0) return 0.0;  // underflow: the measure there is nil
    const double jac = k * std::pow(u, k - 1.0);
    return jac * f(at_distance(d));
  };
  return adaptive(g, 0.0, upper, 8);
}

// Integral over distances [1, e^700) from an endpoint via distance = e^y.
double tail_piece(const Integrand& f,
                  const std::function<Abscissa(double)>& at_distance) {
  Piece g = [&](double y) {
    const double d = std::exp(y);
    const double v = f(at_distance(d));
    return v == 0.0 ? 0.0 : v * d;
  };
  return adaptive(g, 0.0, 700.0, 350);
}

}  // namespace

double oracle_integrate(const Integrand& f, const IntegralSpec& spec) {
  spec.validate();
  if (!spec.poles.empty()) {
    throw spec_error("oracle_integrate: principal values are not supported");
  }
  const double lo = spec.lo;
  const double hi = spec.hi;
  switch (spec.kind) {
    case DomainKind::finite: {
      const double half = 0.5 * (hi - lo);
      const double left = endpoint_piece(
          f, half, spec.alpha_lo,
          [&](double d) { return Abscissa{lo + d, d, (hi - lo) - d}; });
      const double right = endpoint_piece(
          f, half, spec.alpha_hi,
          [&](double d) { return Abscissa{hi - d, (hi - lo) - d, d}; });
      return left + right;
    }
    case DomainKind::half_line_up: {
      auto at = [&](double d) { return Abscissa{lo + d, d, kInf}; };
      return endpoint_piece(f, 1.0, spec.alpha_lo, at) +
             tail_piece(f, at);
    }
    case DomainKind::half_line_down: {
      auto at = [&](double d) { return Abscissa{hi - d, kInf, d}; };
      return endpoint_piece(f, 1.0, spec.alpha_hi, at) +
             tail_piece(f, at);
    }
    case DomainKind::real_line: {
      auto up = [&](double d) { return Abscissa{d, kInf, kInf}; };
      auto down = [&](double d) { return Abscissa{-d, kInf, kInf}; };
      return endpoint_piece(f, 1.0, 0.0, up) + tail_piece(f, up) +
             endpoint_piece(f, 1.0, 0.0, down) +
             tail_piece(f, down);
    }
  }
  throw spec_error("unknown domain kind");
}

}  // namespace betaquad::quad
