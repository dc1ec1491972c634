// Exponential and logarithmic forms, the combined integrands with a
// parameter that scales away, log-weighted integrals and odd cosh integrals.

#include "roster.hpp"

namespace betaquad::catalog::roster {

namespace {

// (-ln x)^(q-1) - x^(p-1) (1-x)^(q-1) with the leading terms at x -> 1
// cancelled analytically, so the difference keeps full relative precision.
double log_minus_beta_kernel(const Abscissa& x, double p, double q) {
  if (x.from_hi >= 0.5) {
    const double l = -std::log(x.from_lo);
    return std::pow(l, q - 1) -
           std::pow(x.from_lo, p - 1) * std::pow(x.from_hi, q - 1);
  }
  const double d = x.from_hi;
  // -ln(1-d) - d = sum_{k>=2} d^k / k
  double excess;
  if (d < 0.1) {
    excess = 0.0;
    double dk = d * d;
    for (int k = 2; k < 40 && dk > 1e-18 * d * d; ++k, dk *= d) {
      excess += dk / k;
    }
  } else {
    excess = -std::log1p(-d) - d;
  }
  const double r = std::log1p(excess / d);  // ln((-ln x) / d)
  const double bracket =
      std::expm1((q - 1) * r) - std::expm1((p - 1) * std::log1p(-d));
  return std::pow(d, q - 1) * bracket;
}

}  // namespace

void add_group_f(std::vector<IdentityRecord>& out) {
  out.push_back({
      .id = "3.312.1",
      .group = Group::F,
      .citation = "Gradshteyn & Ryzhik 3.312.1: int_0^inf e^(-at) "
                  "(1-e^(-ct))^(b-1) dt = (1/c) B(a/c, b)",
      .domain = {.params = {real("a", 0, 3), real("b", 0, 3), real("c", 0, 3)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"], c = p["c"];
        return [=](const Abscissa& x) {
          const double t = x.from_lo;
          return std::exp(-a * t + (b - 1) * std::log(-std::expm1(-c * t)));
        };
      },
      .spec =
          [](const ParamSet& p) { return IntegralSpec::half_line_up(0, p["b"] - 1); },
      .closed_form =
          [](const ParamSet& p) {
            const double c = p["c"];
            return sf::beta(p["a"] / c, p["b"]) / c;
          },
  });

  out.push_back({
      .id = "3.313.2",
      .group = Group::F,
      .citation = "Gradshteyn & Ryzhik 3.313.2: int_-inf^inf e^(-act) / "
                  "(1+e^(-ct))^(a+b) dt = (1/c) B(a,b)",
      .domain = {.params = {real("a", 0, 2), real("b", 0, 2), real("c", 0, 2)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"], c = p["c"];
        return [=](double t) {
          return std::exp(-a * c * t - (a + b) * softplus(-c * t));
        };
      },
      .spec = [](const ParamSet&) { return IntegralSpec::real_line(); },
      .closed_form =
          [](const ParamSet& p) { return sf::beta(p["a"], p["b"]) / p["c"]; },
  });

  out.push_back({
      .id = "3.314",
      .group = Group::F,
      .citation = "Gradshteyn & Ryzhik 3.314: int_-inf^inf e^(-mu x) / "
                  "(e^(b/a) + e^(-x/a))^nu dx = a e^(b(mu - nu/a)) B(a mu, nu - a mu)",
      .domain = {.params = {real("a", 0.3, 2), closed("b", -1, 1),
                            real("mu", 0, 3), real("nu", 0, 4)},
                 .relations = {relation(
                     "a mu < nu",
                     [](const ParamSet& p) { return p["nu"] - p["a"] * p["mu"]; },
                     0.1)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"], mu = p["mu"], nu = p["nu"];
        return [=](double x) {
          return std::exp(-mu * x - nu * logaddexp(b / a, -x / a));
        };
      },
      .spec = [](const ParamSet&) { return IntegralSpec::real_line(); },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"], b = p["b"], mu = p["mu"], nu = p["nu"];
            return a * std::exp(b * (mu - nu / a)) * sf::beta(a * mu, nu - a * mu);
          },
  });

  out.push_back({
      .id = "3.311.3",
      .group = Group::F,
      .citation = "Gradshteyn & Ryzhik 3.311.3: int_-inf^inf e^(-px) / "
                  "(1+e^(-qx)) dx = (pi/q) cosec(pi p / q)",
      .domain = {.params = {real("p", 0, 3), real("q", 0, 4)},
                 .relations = {relation(
                     "p < q", [](const ParamSet& s) { return s["q"] - s["p"]; },
                     0.1)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"], q = s["q"];
        return [=](double x) { return std::exp(-p * x - softplus(-q * x)); };
      },
      .spec = [](const ParamSet&) { return IntegralSpec::real_line(); },
      .closed_form =
          [](const ParamSet& s) {
            const double q = s["q"];
            return kPi / q * cosec_pi(s["p"] / q);
          },
  });

  out.push_back({
      .id = "3.311.9",
      .group = Group::F,
      .citation = "Gradshteyn & Ryzhik 3.311.9: int_-inf^inf e^(-mu x) / "
                  "(b+e^(-x)) dx = pi b^(mu-1) cosec(mu pi)",
      .domain = {.params = {real("b", 0, 3), open("mu", 0, 1)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double lb = std::log(p["b"]), mu = p["mu"];
        return [=](double x) { return std::exp(-mu * x - logaddexp(lb, -x)); };
      },
      .spec = [](const ParamSet&) { return IntegralSpec::real_line(); },
      .closed_form =
          [](const ParamSet& p) {
            const double mu = p["mu"];
            return kPi * std::pow(p["b"], mu - 1) * cosec_pi(mu);
          },
  });
}

void add_group_g(std::vector<IdentityRecord>& out) {
  out.push_back({
      .id = "4.273",
      .group = Group::G,
      .citation = "Gradshteyn & Ryzhik 4.273: int_u^v ln(x/u)^(p-1) "
                  "ln(v/x)^(q-1) dx/x = B(p,q) ln(v/u)^(p+q-1)",
      .domain = {.params = {real("u", 0, 4), real("v", 0, 4), real("p", 0, 3),
                            real("q", 0, 3)},
                 .relations = {relation(
                     "u < v",
                     [](const ParamSet& s) { return std::log(s["v"] / s["u"]); },
                     0.1)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double u = s["u"], v = s["v"], p = s["p"], q = s["q"];
        return [=](const Abscissa& x) {
          const double up = std::log1p(x.from_lo / u);
          const double down = -std::log1p(-x.from_hi / v);
          return std::pow(up, p - 1) * std::pow(down, q - 1) / x.x;
        };
      },
      .spec =
          [](const ParamSet& s) {
            return IntegralSpec::finite(s["u"], s["v"], s["p"] - 1, s["q"] - 1);
          },
      .closed_form =
          [](const ParamSet& s) {
            const double p = s["p"], q = s["q"];
            return sf::beta(p, q) * std::pow(std::log(s["v"] / s["u"]), p + q - 1);
          },
  });

  out.push_back({
      .id = "4.275.1",
      .group = Group::G,
      .citation = "Gradshteyn & Ryzhik 4.275.1: int_0^1 [(-ln x)^(q-1) - "
                  "x^(p-1) (1-x)^(q-1)] dx = Gamma(q) - B(p,q)",
      .domain = {.params = {real("p", 0, 3), real("q", 0, 3)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"], q = s["q"];
        return [=](const Abscissa& x) { return log_minus_beta_kernel(x, p, q); };
      },
      .spec =
          [](const ParamSet& s) {
            return IntegralSpec::finite(0, 1, std::min(s["p"] - 1, 0.0), s["q"]);
          },
      .closed_form =
          [](const ParamSet& s) {
            const double q = s["q"];
            return sf::gamma(q) - sf::beta(s["p"], q);
          },
  });

  out.push_back({
      .id = "eq-8.4",
      .group = Group::G,
      .citation = "Logarithmic form of Euler's integral: int_0^1 (-ln x)^(q-1) "
                  "dx = Gamma(q)",
      .domain = {.params = {real("q", 0, 4)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double q = s["q"];
        return [=](const Abscissa& x) {
          return std::pow(-log_unit(x), q - 1);
        };
      },
      .spec =
          [](const ParamSet& s) { return IntegralSpec::finite(0, 1, 0, s["q"] - 1); },
      .closed_form = [](const ParamSet& s) { return sf::gamma(s["q"]); },
  });
}

void add_group_h(std::vector<IdentityRecord>& out) {
  out.push_back({
      .id = "3.217",
      .group = Group::H,
      .citation = "Gradshteyn & Ryzhik 3.217: int_0^inf [b^p x^(p-1) / "
                  "(1+bx)^p - (1+bx)^(p-1) / (b^(p-1) x^p)] dx = pi cot(pi p)",
      .domain = {.params = {open("p", 0, 1), real("b", 0, 3)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"], lb = std::log(s["b"]), b = s["b"];
        return [=](const Abscissa& x) {
          const double lx = std::log(x.from_lo);
          const double l1 = std::log1p(b * x.from_lo);
          return std::exp(p * lb + (p - 1) * lx - p * l1) -
                 std::exp((p - 1) * l1 - (p - 1) * lb - p * lx);
        };
      },
      .spec =
          [](const ParamSet& s) {
            const double p = s["p"];
            return IntegralSpec::half_line_up(0, std::min(p - 1, -p));
          },
      .closed_form = [](const ParamSet& s) { return kPi * sf::cot_pi(s["p"]); },
      .tolerance_class = ToleranceClass::combined,
      .fake_param = "b",
  });

  out.push_back({
      .id = "3.218",
      .group = Group::H,
      .citation = "Gradshteyn & Ryzhik 3.218: int_0^inf (x^(2p-1) - "
                  "(a+x)^(2p-1)) / ((a+x)^p x^p) dx = pi cot(pi p)",
      .domain = {.params = {open("p", 0, 1), real("a", 0, 3)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"], a = s["a"];
        return [=](const Abscissa& x) {
          const double t = x.from_lo;
          return (std::pow(t, 2 * p - 1) - std::pow(a + t, 2 * p - 1)) *
                 std::pow(a + t, -p) * std::pow(t, -p);
        };
      },
      .spec =
          [](const ParamSet& s) {
            const double p = s["p"];
            return IntegralSpec::half_line_up(0, std::min(p - 1, -p));
          },
      .closed_form = [](const ParamSet& s) { return kPi * sf::cot_pi(s["p"]); },
      .tolerance_class = ToleranceClass::combined,
      .fake_param = "a",
  });
}

void add_group_i(std::vector<IdentityRecord>& out) {
  out.push_back({
      .id = "eq-10.4",
      .group = Group::I,
      .citation = "Log-weighted reflection integral: int_0^inf t^(a-1) ln t / "
                  "(1+t) dt = -pi^2 cos(pi a) / sin^2(pi a)",
      .domain = {.params = {open("a", 0, 1)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"];
        return [=](const Abscissa& x) {
          const double lt = std::log(x.from_lo);
          return lt * std::exp((a - 1) * lt - std::log1p(x.from_lo));
        };
      },
      .spec =
          [](const ParamSet& p) { return IntegralSpec::half_line_up(0, p["a"] - 1); },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"], s = sf::sin_pi(a);
            return -kPi * kPi * sf::cos_pi(a) / (s * s);
          },
  });

  out.push_back({
      .id = "4.251.1",
      .group = Group::I,
      .citation = "Gradshteyn & Ryzhik 4.251.1: int_0^inf x^(a-1) ln x / (x+b) "
                  "dx = pi b^(a-1) / sin(pi a) (ln b - pi cot(pi a))",
      .domain = {.params = {open("a", 0, 1), real("b", 0, 4)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"];
        return [=](const Abscissa& x) {
          const double lx = std::log(x.from_lo);
          return lx * std::exp((a - 1) * lx) / (x.from_lo + b);
        };
      },
      .spec =
          [](const ParamSet& p) { return IntegralSpec::half_line_up(0, p["a"] - 1); },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"], b = p["b"];
            return kPi * std::pow(b, a - 1) * cosec_pi(a) *
                   (std::log(b) - kPi * sf::cot_pi(a));
          },
  });
}

void add_group_j(std::vector<IdentityRecord>& out) {
  out.push_back({
      .id = "3.457.3",
      .group = Group::J,
      .citation = "Gradshteyn & Ryzhik 3.457.3: int_-inf^inf x / "
                  "(a^2 e^x + e^(-x))^mu dx = -B(mu/2, mu/2) ln a / (2 a^mu)",
      .domain = {.params = {real("a", 0.3, 3), real("mu", 0.5, 4)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double la2 = 2 * std::log(p["a"]), mu = p["mu"];
        return [=](double x) {
          return x * std::exp(-mu * logaddexp(la2 + x, -x));
        };
      },
      .spec = [](const ParamSet&) { return IntegralSpec::real_line(); },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"], mu = p["mu"];
            return -sf::beta(mu / 2, mu / 2) * std::log(a) /
                   (2 * std::pow(a, mu));
          },
  });

  out.push_back({
      .id = "eq-11.5",
      .group = Group::J,
      .citation = "Odd cosh integral: int_-inf^inf x / cosh^mu(x) dx = 0",
      .domain = {.params = {real("mu", 0.5, 4)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double mu = p["mu"];
        return [=](double x) { return x * std::exp(-mu * log_cosh(x)); };
      },
      .spec = [](const ParamSet&) { return IntegralSpec::real_line(); },
      .closed_form = [](const ParamSet&) { return 0.0; },
      .atol = 1e-9,
  });

  out.push_back({
      .id = "4.321.1-damped",
      .group = Group::J,
      .citation = "Gradshteyn & Ryzhik 4.321.1, damped by cosh^-mu: "
                  "int_-inf^inf x ln(cosh x) / cosh^mu(x) dx = 0",
      .domain = {.params = {real("mu", 0.5, 4)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double mu = p["mu"];
        return [=](double x) {
          const double lc = log_cosh(x);
          return x * (lc * std::exp(-mu * lc));
        };
      },
      .spec = [](const ParamSet&) { return IntegralSpec::real_line(); },
      .closed_form = [](const ParamSet&) { return 0.0; },
      .atol = 1e-9,
  });
}

}  // namespace betaquad::catalog::roster
