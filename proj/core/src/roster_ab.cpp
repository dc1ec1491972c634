// Unit-interval beta integrals and their shifted, scaled and power forms.

#include "roster.hpp"

namespace betaquad::catalog::roster {

void add_group_a(std::vector<IdentityRecord>& out) {
  out.push_back({
      .id = "3.191.3",
      .group = Group::A,
      .citation = "Gradshteyn & Ryzhik 3.191.3: int_0^1 x^(a-1) (1-x)^(b-1) dx "
                  "= B(a,b)",
      .domain = {.params = {real("a", 0, 5), real("b", 0, 5)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, a - 1) * std::pow(x.from_hi, b - 1);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, 1, p["a"] - 1, p["b"] - 1);
          },
      .closed_form = [](const ParamSet& p) { return sf::beta(p["a"], p["b"]); },
  });

  out.push_back({
      .id = "3.192.1",
      .group = Group::A,
      .citation = "Gradshteyn & Ryzhik 3.192.1: int_0^1 x^p (1-x)^(-p) dx = "
                  "p pi / sin(p pi)",
      .domain = {.params = {open("p", 0, 1)}},
      .integrand =
          [](const ParamSet& ps) -> Integrand {
        const double p = ps["p"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, p) * std::pow(x.from_hi, -p);
        };
      },
      .spec =
          [](const ParamSet& ps) {
            return IntegralSpec::finite(0, 1, ps["p"], -ps["p"]);
          },
      .closed_form =
          [](const ParamSet& ps) {
            const double p = ps["p"];
            return p * kPi * cosec_pi(p);
          },
  });

  out.push_back({
      .id = "3.192.2",
      .group = Group::A,
      .citation = "Gradshteyn & Ryzhik 3.192.2: int_0^1 x^p (1-x)^(-p-1) dx = "
                  "-pi / sin(p pi)",
      .domain = {.params = {open("p", -1, 0)}},
      .integrand =
          [](const ParamSet& ps) -> Integrand {
        const double p = ps["p"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, p) * std::pow(x.from_hi, -p - 1);
        };
      },
      .spec =
          [](const ParamSet& ps) {
            return IntegralSpec::finite(0, 1, ps["p"], -ps["p"] - 1);
          },
      .closed_form = [](const ParamSet& ps) { return -kPi * cosec_pi(ps["p"]); },
  });

  out.push_back({
      .id = "3.192.3",
      .group = Group::A,
      .citation = "Gradshteyn & Ryzhik 3.192.3: int_0^1 (1-x)^p x^(-p-1) dx = "
                  "-pi / sin(p pi)",
      .domain = {.params = {open("p", -1, 0)}},
      .integrand =
          [](const ParamSet& ps) -> Integrand {
        const double p = ps["p"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_hi, p) * std::pow(x.from_lo, -p - 1);
        };
      },
      .spec =
          [](const ParamSet& ps) {
            return IntegralSpec::finite(0, 1, -ps["p"] - 1, ps["p"]);
          },
      .closed_form = [](const ParamSet& ps) { return -kPi * cosec_pi(ps["p"]); },
  });

  out.push_back({
      .id = "3.192.4",
      .group = Group::A,
      .citation = "Gradshteyn & Ryzhik 3.192.4: int_1^inf (x-1)^(p-1/2) / x dx "
                  "= pi / cos(p pi)",
      .domain = {.params = {open("p", -0.5, 0.5)}},
      .integrand =
          [](const ParamSet& ps) -> Integrand {
        const double p = ps["p"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, p - 0.5) / x.x;
        };
      },
      .spec =
          [](const ParamSet& ps) {
            return IntegralSpec::half_line_up(1, ps["p"] - 0.5);
          },
      .closed_form = [](const ParamSet& ps) { return kPi / sf::cos_pi(ps["p"]); },
  });

  out.push_back({
      .id = "3.226.1",
      .group = Group::A,
      .citation = "Gradshteyn & Ryzhik 3.226.1: int_0^1 x^n / sqrt(1-x) dx = "
                  "Gamma(n+1) sqrt(pi) / Gamma(n+3/2)",
      .domain = {.params = {integer("n", 0, 6)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double n = p["n"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, n) / std::sqrt(x.from_hi);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, 1, p["n"], -0.5);
          },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["n"] + 1;
            return sf::gamma(a) * std::sqrt(kPi) / sf::gamma(a + 0.5);
          },
  });

  out.push_back({
      .id = "3.226.2",
      .group = Group::A,
      .citation = "Gradshteyn & Ryzhik 3.226.2: int_0^1 x^(n-1/2) / sqrt(1-x) "
                  "dx = Gamma(n+1/2) sqrt(pi) / Gamma(n+1)",
      .domain = {.params = {integer("n", 0, 6)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double n = p["n"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, n - 0.5) / std::sqrt(x.from_hi);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, 1, p["n"] - 0.5, -0.5);
          },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["n"] + 0.5;
            return sf::gamma(a) * std::sqrt(kPi) / sf::gamma(a + 0.5);
          },
  });
}

void add_group_b(std::vector<IdentityRecord>& out) {
  out.push_back({
      .id = "3.191.1",
      .group = Group::B,
      .citation = "Gradshteyn & Ryzhik 3.191.1: int_0^u t^(a-1) (u-t)^(b-1) dt "
                  "= u^(a+b-1) B(a,b)",
      .domain = {.params = {real("u", 0, 3), real("a", 0, 4), real("b", 0, 4)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, a - 1) * std::pow(x.from_hi, b - 1);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, p["u"], p["a"] - 1, p["b"] - 1);
          },
      .closed_form =
          [](const ParamSet& p) {
            const double u = p["u"], a = p["a"], b = p["b"];
            return std::pow(u, a + b - 1) * sf::beta(a, b);
          },
  });

  out.push_back({
      .id = "3.196.3",
      .group = Group::B,
      .citation = "Gradshteyn & Ryzhik 3.196.3: int_u^v (t-u)^(a-1) "
                  "(v-t)^(b-1) dt = (v-u)^(a+b-1) B(a,b)",
      .domain = {.params = {closed("u", -2, 3), closed("v", -2, 3),
                            real("a", 0, 4), real("b", 0, 4)},
                 .relations = {relation(
                     "u < v", [](const ParamSet& p) { return p["v"] - p["u"]; },
                     0.25)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, a - 1) * std::pow(x.from_hi, b - 1);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(p["u"], p["v"], p["a"] - 1, p["b"] - 1);
          },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"], b = p["b"];
            return std::pow(p["v"] - p["u"], a + b - 1) * sf::beta(a, b);
          },
  });

  out.push_back({
      .id = "3.193",
      .group = Group::B,
      .citation = "Gradshteyn & Ryzhik 3.193: int_0^n x^(nu-1) (n-x)^n dx = "
                  "n^(nu+n) n! / (nu (nu+1) ... (nu+n))",
      .domain = {.params = {real("nu", 0, 3), integer("n", 1, 5)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double nu = p["nu"], n = p["n"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, nu - 1) * std::pow(x.from_hi, n);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, p["n"], p["nu"] - 1, p["n"]);
          },
      .closed_form =
          [](const ParamSet& p) {
            const double nu = p["nu"];
            const int n = p.integer("n");
            double rising = 1.0;
            for (int k = 0; k <= n; ++k) rising *= nu + k;
            return std::pow(double(n), nu + n) * sf::factorial(n) / rising;
          },
  });

  out.push_back({
      .id = "3.249.7",
      .group = Group::B,
      .citation = "Gradshteyn & Ryzhik 3.249.7: int_0^1 (1-x^a)^(b-1) dx = "
                  "(1/a) B(1/a, b)",
      .domain = {.params = {real("a", 0, 4), real("b", 0, 4)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"];
        return [=](const Abscissa& x) {
          return std::pow(one_minus_pow(x, a), b - 1);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, 1, 0, p["b"] - 1);
          },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"];
            return sf::beta(1 / a, p["b"]) / a;
          },
  });

  out.push_back({
      .id = "3.249.5",
      .group = Group::B,
      .citation = "Gradshteyn & Ryzhik 3.249.5: int_0^1 (1-x^2)^(b-1) dx = "
                  "(1/2) B(1/2, b) = 2^(2b-2) B(b, b)",
      .domain = {.params = {real("b", 0, 4)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double b = p["b"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_hi * (1 + x.x), b - 1);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, 1, 0, p["b"] - 1);
          },
      .closed_form =
          [](const ParamSet& p) { return 0.5 * sf::beta(0.5, p["b"]); },
  });

  out.push_back({
      .id = "3.251.1",
      .group = Group::B,
      .citation = "Gradshteyn & Ryzhik 3.251.1: int_0^1 x^(c-1) (1-x^a)^(b-1) "
                  "dx = (1/a) B(c/a, b)",
      .domain = {.params = {real("a", 0, 4), real("b", 0, 4), real("c", 0, 4)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"], c = p["c"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, c - 1) *
                 std::pow(one_minus_pow(x, a), b - 1);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, 1, p["c"] - 1, p["b"] - 1);
          },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"];
            return sf::beta(p["c"] / a, p["b"]) / a;
          },
  });

  out.push_back({
      .id = "eq-3.7",
      .group = Group::B,
      .citation = "Scaled quarter-disc form: int_0^c (c^2-t^2)^(b-1) dt = "
                  "(c^(2b-1) / 2) B(1/2, b)",
      .domain = {.params = {real("c", 0, 3), real("b", 0, 4)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double c = p["c"], b = p["b"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_hi * (c + x.x), b - 1);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, p["c"], 0, p["b"] - 1);
          },
      .closed_form =
          [](const ParamSet& p) {
            const double c = p["c"], b = p["b"];
            return 0.5 * std::pow(c, 2 * b - 1) * sf::beta(0.5, b);
          },
  });

  out.push_back({
      .id = "3.249.2",
      .group = Group::B,
      .citation = "Gradshteyn & Ryzhik 3.249.2: int_0^c (c^2-t^2)^(n-1/2) dt = "
                  "pi c^(2n) / 2^(2n+1) binom(2n, n)",
      .domain = {.params = {real("c", 0, 3), integer("n", 0, 5)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double c = p["c"], n = p["n"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_hi * (c + x.x), n - 0.5);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, p["c"], 0, p["n"] - 0.5);
          },
      .closed_form =
          [](const ParamSet& p) {
            const int n = p.integer("n");
            return kPi * std::pow(p["c"], 2 * n) / std::ldexp(1.0, 2 * n + 1) *
                   sf::binomial(2 * n, n);
          },
  });

  out.push_back({
      .id = "eq-3.10",
      .group = Group::B,
      .citation = "Reciprocal half-line form: int_1^inf t^(-a-b) (t-1)^(b-1) dt "
                  "= B(a,b)",
      .domain = {.params = {real("a", 0, 3), real("b", 0, 3)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"];
        return [=](const Abscissa& x) {
          return std::exp((b - 1) * std::log(x.from_lo) -
                          (a + b) * std::log1p(x.from_lo));
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::half_line_up(1, p["b"] - 1);
          },
      .closed_form = [](const ParamSet& p) { return sf::beta(p["a"], p["b"]); },
  });

  out.push_back({
      .id = "3.251.3",
      .group = Group::B,
      .citation = "Gradshteyn & Ryzhik 3.251.3: int_1^inf x^(mu-1) "
                  "(x^p-1)^(nu-1) dx = (1/p) B(1-nu-mu/p, nu)",
      .domain = {.params = {real("p", 0, 3), open("nu", 0, 1),
                            closed("mu", -1, 3)},
                 .relations = {relation(
                     "p (1 - nu) - mu > 0",
                     [](const ParamSet& s) {
                       return s["p"] * (1 - s["nu"]) - s["mu"];
                     },
                     0.1)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"], nu = s["nu"], mu = s["mu"];
        return [=](const Abscissa& x) {
          const double lx = std::log1p(x.from_lo);
          // ln(x^p - 1) = p ln x + ln(1 - x^-p)
          const double l = p * lx + std::log(-std::expm1(-p * lx));
          return std::exp((mu - 1) * lx + (nu - 1) * l);
        };
      },
      .spec =
          [](const ParamSet& s) {
            return IntegralSpec::half_line_up(1, s["nu"] - 1);
          },
      .closed_form =
          [](const ParamSet& s) {
            const double p = s["p"], nu = s["nu"], mu = s["mu"];
            return sf::beta(1 - nu - mu / p, nu) / p;
          },
  });
}

}  // namespace betaquad::catalog::roster
