// The master power integral int_0^inf t^(ac-1) / (v + u t^c)^(a+b) dt and the
// table entries that are specializations of it, plus unit-interval companions.

#include "roster.hpp"

namespace betaquad::catalog::roster {

namespace {

double order_gap(const ParamSet& p) { return p["n"] - p["m"]; }

}  // namespace

void add_group_e(std::vector<IdentityRecord>& out) {
  out.push_back({
      .id = "3.241.4",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.241.4: int_0^inf t^(ac-1) / "
                  "(v+u t^c)^(a+b) dt = B(a,b) / (c u^a v^b)",
      .domain = {.params = {real("a", 0, 3), real("b", 0, 3), real("c", 0, 3),
                            real("u", 0, 3), real("v", 0, 3)},
                 .relations = {relation(
                                   "a c > 0",
                                   [](const ParamSet& p) { return p["a"] * p["c"]; },
                                   0.1),
                               relation(
                                   "b c > 0",
                                   [](const ParamSet& p) { return p["b"] * p["c"]; },
                                   0.1)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"], c = p["c"];
        const double lv = std::log(p["v"]), luv = std::log(p["u"] / p["v"]);
        return [=](const Abscissa& x) {
          const double lt = std::log(x.from_lo);
          return std::exp((a * c - 1) * lt - (a + b) * (lv + softplus(luv + c * lt)));
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::half_line_up(0, p["a"] * p["c"] - 1);
          },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"], b = p["b"];
            return sf::beta(a, b) /
                   (p["c"] * std::pow(p["u"], a) * std::pow(p["v"], b));
          },
  });

  out.push_back({
      .id = "3.194.6",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.194.6: int_0^inf t^(a-1) / (1+ut)^2 dt "
                  "= (1-a) pi / (u^a sin(pi a))",
      .domain = {.params = {open("a", 0, 2, {1.0}), real("u", 0, 3)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], u = p["u"];
        return [=](const Abscissa& x) {
          const double t = x.from_lo;
          return std::exp((a - 1) * std::log(t) - 2 * std::log1p(u * t));
        };
      },
      .spec =
          [](const ParamSet& p) { return IntegralSpec::half_line_up(0, p["a"] - 1); },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"];
            return (1 - a) * kPi / std::pow(p["u"], a) * cosec_pi(a);
          },
  });

  out.push_back({
      .id = "3.241.5",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.241.5: int_0^inf x^(p-1) / (1+x^q)^2 "
                  "dx = (q-p)/q^2 pi / sin(pi p / q)",
      .domain = {.params = {real("p", 0, 6), real("q", 0.3, 3)},
                 .relations = {relation(
                                   "p < 2q",
                                   [](const ParamSet& s) {
                                     return 2 * s["q"] - s["p"];
                                   },
                                   0.1),
                               relation(
                                   "p != q",
                                   [](const ParamSet& s) {
                                     return std::fabs(s["p"] - s["q"]);
                                   },
                                   0.1)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"], q = s["q"];
        return [=](const Abscissa& x) {
          const double lx = std::log(x.from_lo);
          return std::exp((p - 1) * lx - 2 * softplus(q * lx));
        };
      },
      .spec =
          [](const ParamSet& s) { return IntegralSpec::half_line_up(0, s["p"] - 1); },
      .closed_form =
          [](const ParamSet& s) {
            const double p = s["p"], q = s["q"];
            return (q - p) / (q * q) * kPi * cosec_pi(p / q);
          },
  });

  out.push_back({
      .id = "3.194.7",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.194.7: int_0^inf t^m / (v+ut)^(n+1/2) "
                  "dt = m! n! (2n-2m-2)! / ((n-m-1)! (2n)!) 2^(2m+2) "
                  "v^(m-n+1/2) / u^(m+1)",
      .domain = {.params = {integer("m", 0, 4), integer("n", 1, 5),
                            real("u", 0, 3), real("v", 0, 3)},
                 .relations = {relation("m < n", order_gap, 0.5)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double m = p["m"], n = p["n"], u = p["u"], v = p["v"];
        return [=](const Abscissa& x) {
          const double t = x.from_lo;
          return std::exp(m * std::log(t) - (n + 0.5) * std::log(v + u * t));
        };
      },
      .spec =
          [](const ParamSet& p) { return IntegralSpec::half_line_up(0, p["m"]); },
      .closed_form =
          [](const ParamSet& p) {
            const int m = p.integer("m"), n = p.integer("n");
            const double u = p["u"], v = p["v"];
            return sf::factorial(m) * sf::factorial(n) *
                   sf::factorial(2 * n - 2 * m - 2) /
                   (sf::factorial(n - m - 1) * sf::factorial(2 * n)) *
                   std::ldexp(1.0, 2 * m + 2) * std::pow(v, m - n + 0.5) /
                   std::pow(u, m + 1);
          },
  });

  out.push_back({
      .id = "3.248.1",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.248.1: int_0^inf t^(p-1) / "
                  "sqrt(1+t^c) dt = (1/c) B(p/c, 1/2 - p/c)",
      .domain = {.params = {real("p", 0, 2), real("c", 0, 4)},
                 .relations = {relation(
                     "p < c/2",
                     [](const ParamSet& s) { return s["c"] / 2 - s["p"]; }, 0.1)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"], c = s["c"];
        return [=](const Abscissa& x) {
          const double lt = std::log(x.from_lo);
          return std::exp((p - 1) * lt - 0.5 * softplus(c * lt));
        };
      },
      .spec =
          [](const ParamSet& s) { return IntegralSpec::half_line_up(0, s["p"] - 1); },
      .closed_form =
          [](const ParamSet& s) {
            const double r = s["p"] / s["c"];
            return sf::beta(r, 0.5 - r) / s["c"];
          },
  });

  out.push_back({
      .id = "3.249.1",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.249.1: int_0^inf (v^2+t^2)^(-n) dt = "
                  "sqrt(pi) Gamma(n-1/2) / (2 Gamma(n) v^(2n-1))",
      .domain = {.params = {real("n", 0.6, 5), real("v", 0, 3)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double n = p["n"], v = p["v"];
        return [=](const Abscissa& x) {
          return std::exp(-2 * n * std::log(std::hypot(v, x.from_lo)));
        };
      },
      .spec = [](const ParamSet&) { return IntegralSpec::half_line_up(0, 0); },
      .closed_form =
          [](const ParamSet& p) {
            const double n = p["n"];
            return std::sqrt(kPi) * sf::gamma(n - 0.5) /
                   (2 * sf::gamma(n) * std::pow(p["v"], 2 * n - 1));
          },
  });

  out.push_back({
      .id = "3.249.8-general",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.249.8, general order: int_0^inf "
                  "(1+u t^2)^(-n/2) dt = sqrt(pi) / (2 sqrt(u)) "
                  "Gamma((n-1)/2) / Gamma(n/2)",
      .domain = {.params = {real("n", 1.2, 6), real("u", 0, 3)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double n = p["n"], su = std::sqrt(p["u"]);
        return [=](const Abscissa& x) {
          return std::exp(-n * std::log(std::hypot(1.0, su * x.from_lo)));
        };
      },
      .spec = [](const ParamSet&) { return IntegralSpec::half_line_up(0, 0); },
      .closed_form =
          [](const ParamSet& p) {
            const double n = p["n"];
            return std::sqrt(kPi) / (2 * std::sqrt(p["u"])) *
                   sf::gamma((n - 1) / 2) / sf::gamma(n / 2);
          },
  });

  out.push_back({
      .id = "3.251.2",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.251.2: int_0^inf t^(mu-1) / "
                  "(1+t^2)^(1-nu) dt = (1/2) B(mu/2, 1-nu-mu/2)",
      .domain = {.params = {real("mu", 0, 3), open("nu", -1, 1)},
                 .relations = {relation(
                     "nu + mu/2 < 1",
                     [](const ParamSet& p) { return 1 - p["nu"] - p["mu"] / 2; },
                     0.05)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double mu = p["mu"], nu = p["nu"];
        return [=](const Abscissa& x) {
          const double lt = std::log(x.from_lo);
          return std::exp((mu - 1) * lt - (1 - nu) * softplus(2 * lt));
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::half_line_up(0, p["mu"] - 1);
          },
      .closed_form =
          [](const ParamSet& p) {
            const double mu = p["mu"];
            return 0.5 * sf::beta(mu / 2, 1 - p["nu"] - mu / 2);
          },
  });

  out.push_back({
      .id = "3.251.4",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.251.4: int_0^inf t^(2m) / "
                  "(v+u t^2)^(n+1) dt = pi (2m)! (2n-2m)! / (2^(2n+1) m! (n-m)! "
                  "n! u^(m+1/2) v^(n-m+1/2))",
      .domain = {.params = {integer("m", 0, 4), integer("n", 1, 5),
                            real("u", 0, 3), real("v", 0, 3)},
                 .relations = {relation("m < n", order_gap, 0.5)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double m = p["m"], n = p["n"];
        const double lv = std::log(p["v"]), luv = std::log(p["u"] / p["v"]);
        return [=](const Abscissa& x) {
          const double lt = std::log(x.from_lo);
          return std::exp(2 * m * lt - (n + 1) * (lv + softplus(luv + 2 * lt)));
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::half_line_up(0, 2 * p["m"]);
          },
      .closed_form =
          [](const ParamSet& p) {
            const int m = p.integer("m"), n = p.integer("n");
            const double u = p["u"], v = p["v"];
            return kPi * sf::factorial(2 * m) * sf::factorial(2 * n - 2 * m) /
                   (std::ldexp(1.0, 2 * n + 1) * sf::factorial(m) *
                    sf::factorial(n - m) * sf::factorial(n) *
                    std::pow(u, m + 0.5) * std::pow(v, n - m + 0.5));
          },
  });

  out.push_back({
      .id = "3.251.5",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.251.5: int_0^inf t^(2m+1) / "
                  "(v+u t^2)^(n+1) dt = m! (n-m-1)! / (2 n! u^(m+1) v^(n-m))",
      .domain = {.params = {integer("m", 0, 4), integer("n", 1, 5),
                            real("u", 0, 3), real("v", 0, 3)},
                 .relations = {relation("m < n", order_gap, 0.5)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double m = p["m"], n = p["n"];
        const double lv = std::log(p["v"]), luv = std::log(p["u"] / p["v"]);
        return [=](const Abscissa& x) {
          const double lt = std::log(x.from_lo);
          return std::exp((2 * m + 1) * lt -
                          (n + 1) * (lv + softplus(luv + 2 * lt)));
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::half_line_up(0, 2 * p["m"] + 1);
          },
      .closed_form =
          [](const ParamSet& p) {
            const int m = p.integer("m"), n = p.integer("n");
            return sf::factorial(m) * sf::factorial(n - m - 1) /
                   (2 * sf::factorial(n) * std::pow(p["u"], m + 1) *
                    std::pow(p["v"], n - m));
          },
  });

  out.push_back({
      .id = "eq-6.21",
      .group = Group::E,
      .citation = "Unit-interval power form: int_0^1 t^(aq-1) (1-t^q)^(b-1) dt "
                  "= (1/q) B(a,b)",
      .domain = {.params = {real("a", 0, 3), real("b", 0, 3), real("q", 0, 3)},
                 .relations = {relation(
                     "a q > 0", [](const ParamSet& p) { return p["a"] * p["q"]; },
                     0.1)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"], q = p["q"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, a * q - 1) *
                 std::pow(one_minus_pow(x, q), b - 1);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, 1, p["a"] * p["q"] - 1, p["b"] - 1);
          },
      .closed_form =
          [](const ParamSet& p) { return sf::beta(p["a"], p["b"]) / p["q"]; },
  });

  out.push_back({
      .id = "3.251.8",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.251.8: int_0^1 t^(p+q-1) "
                  "(1-t^q)^(-p/q) dt = p pi / q^2 cosec(p pi / q)",
      .domain = {.params = {real("p", 0, 3), real("q", 0, 4)},
                 .relations = {relation(
                     "p < q",
                     [](const ParamSet& s) { return 1 - s["p"] / s["q"]; },
                     0.1)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"], q = s["q"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, p + q - 1) *
                 std::pow(one_minus_pow(x, q), -p / q);
        };
      },
      .spec =
          [](const ParamSet& s) {
            return IntegralSpec::finite(0, 1, s["p"] + s["q"] - 1,
                                        -s["p"] / s["q"]);
          },
      .closed_form =
          [](const ParamSet& s) {
            const double p = s["p"], q = s["q"];
            return p * kPi / (q * q) * cosec_pi(p / q);
          },
  });

  out.push_back({
      .id = "3.251.9",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.251.9: int_0^1 x^(q/p-1) "
                  "(1-x^q)^(-1/p) dx = (pi/q) cosec(pi/p)",
      .domain = {.params = {real("p", 1.2, 5), real("q", 0, 3)},
                 .relations = {relation(
                     "q/p > 0", [](const ParamSet& s) { return s["q"] / s["p"]; },
                     0.1)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"], q = s["q"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, q / p - 1) *
                 std::pow(one_minus_pow(x, q), -1 / p);
        };
      },
      .spec =
          [](const ParamSet& s) {
            return IntegralSpec::finite(0, 1, s["q"] / s["p"] - 1, -1 / s["p"]);
          },
      .closed_form =
          [](const ParamSet& s) { return kPi / s["q"] * cosec_pi(1 / s["p"]); },
  });

  out.push_back({
      .id = "3.251.10",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.251.10: int_0^1 x^(p-1) "
                  "(1-x^q)^(-p/q) dx = (pi/q) cosec(p pi / q)",
      .domain = {.params = {real("p", 0, 3), real("q", 0, 4)},
                 .relations = {relation(
                     "p < q",
                     [](const ParamSet& s) { return 1 - s["p"] / s["q"]; },
                     0.1)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"], q = s["q"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, p - 1) *
                 std::pow(one_minus_pow(x, q), -p / q);
        };
      },
      .spec =
          [](const ParamSet& s) {
            return IntegralSpec::finite(0, 1, s["p"] - 1, -s["p"] / s["q"]);
          },
      .closed_form =
          [](const ParamSet& s) {
            const double q = s["q"];
            return kPi / q * cosec_pi(s["p"] / q);
          },
  });

  out.push_back({
      .id = "3.251.11",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.251.11: int_0^inf t^(r-1) / "
                  "(1+u t^c)^nu dt = B(r/c, nu - r/c) / (c u^(r/c))",
      .domain = {.params = {real("r", 0, 3), real("c", 0, 3), real("u", 0, 3),
                            real("nu", 0, 3)},
                 .relations = {relation(
                     "r < c nu",
                     [](const ParamSet& p) { return p["c"] * p["nu"] - p["r"]; },
                     0.1)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double r = p["r"], c = p["c"], nu = p["nu"];
        const double lu = std::log(p["u"]);
        return [=](const Abscissa& x) {
          const double lt = std::log(x.from_lo);
          return std::exp((r - 1) * lt - nu * softplus(lu + c * lt));
        };
      },
      .spec =
          [](const ParamSet& p) { return IntegralSpec::half_line_up(0, p["r"] - 1); },
      .closed_form =
          [](const ParamSet& p) {
            const double c = p["c"], k = p["r"] / c;
            return sf::beta(k, p["nu"] - k) / (c * std::pow(p["u"], k));
          },
  });

  out.push_back({
      .id = "eq-6.29",
      .group = Group::E,
      .citation = "Unit-interval family: int_0^1 t^(cq-m) / (1-t^q)^(1/q) dt = "
                  "(1/q) B(c + 1/q - m/q, 1 - 1/q)",
      .domain = {.params = {real("q", 1, 4), real("c", 0, 3), integer("m", 0, 4)},
                 .relations = {relation(
                     "c q - m > -1",
                     [](const ParamSet& p) { return p["c"] * p["q"] - p["m"] + 1; },
                     0.1)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double q = p["q"], c = p["c"], m = p["m"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, c * q - m) *
                 std::pow(one_minus_pow(x, q), -1 / q);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, 1, p["c"] * p["q"] - p["m"], -1 / p["q"]);
          },
      .closed_form =
          [](const ParamSet& p) {
            const double q = p["q"];
            return sf::beta(p["c"] + (1 - p["m"]) / q, 1 - 1 / q) / q;
          },
  });

  out.push_back({
      .id = "3.248.2",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.248.2: int_0^1 t^(2n+1) / sqrt(1-t^2) "
                  "dt = 2^(2n) n!^2 / (2n+1)!",
      .domain = {.params = {integer("n", 0, 6)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double n = p["n"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, 2 * n + 1) /
                 std::sqrt(x.from_hi * (1 + x.x));
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, 1, 2 * p["n"] + 1, -0.5);
          },
      .closed_form =
          [](const ParamSet& p) {
            const int n = p.integer("n");
            const double f = sf::factorial(n);
            return std::ldexp(f * f, 2 * n) / sf::factorial(2 * n + 1);
          },
  });

  out.push_back({
      .id = "3.248.3",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.248.3: int_0^1 t^(2n) / sqrt(1-t^2) dt "
                  "= pi / 2^(2n+1) binom(2n, n)",
      .domain = {.params = {integer("n", 0, 6)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double n = p["n"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, 2 * n) / std::sqrt(x.from_hi * (1 + x.x));
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, 1, 2 * p["n"], -0.5);
          },
      .closed_form =
          [](const ParamSet& p) {
            const int n = p.integer("n");
            return kPi / std::ldexp(1.0, 2 * n + 1) * sf::binomial(2 * n, n);
          },
  });

  out.push_back({
      .id = "3.267.1",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.267.1: int_0^1 t^(3n) / (1-t^3)^(1/3) "
                  "dt = 2 pi / (3 sqrt 3) Gamma(n+1/3) / (Gamma(1/3) Gamma(n+1))",
      .domain = {.params = {integer("n", 0, 6)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double n = p["n"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, 3 * n) *
                 std::pow(one_minus_pow(x, 3), -1.0 / 3);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, 1, 3 * p["n"], -1.0 / 3);
          },
      .closed_form =
          [](const ParamSet& p) {
            const double n = p["n"];
            return 2 * kPi / (3 * std::sqrt(3.0)) * sf::gamma(n + 1.0 / 3) /
                   (sf::gamma(1.0 / 3) * sf::gamma(n + 1));
          },
  });

  out.push_back({
      .id = "3.267.2",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.267.2: int_0^1 t^(3n-1) / "
                  "(1-t^3)^(1/3) dt = (n-1)! Gamma(2/3) / (3 Gamma(n+2/3))",
      .domain = {.params = {integer("n", 1, 6)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double n = p["n"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, 3 * n - 1) *
                 std::pow(one_minus_pow(x, 3), -1.0 / 3);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, 1, 3 * p["n"] - 1, -1.0 / 3);
          },
      .closed_form =
          [](const ParamSet& p) {
            const int n = p.integer("n");
            return sf::factorial(n - 1) * sf::gamma(2.0 / 3) /
                   (3 * sf::gamma(n + 2.0 / 3));
          },
  });

  out.push_back({
      .id = "3.267.3",
      .group = Group::E,
      .citation = "Gradshteyn & Ryzhik 3.267.3: int_0^1 t^(3n-2) / "
                  "(1-t^3)^(1/3) dt = Gamma(n-1/3) Gamma(2/3) / (3 Gamma(n+1/3))",
      .domain = {.params = {integer("n", 1, 6)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double n = p["n"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, 3 * n - 2) *
                 std::pow(one_minus_pow(x, 3), -1.0 / 3);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, 1, 3 * p["n"] - 2, -1.0 / 3);
          },
      .closed_form =
          [](const ParamSet& p) {
            const double n = p["n"];
            return sf::gamma(n - 1.0 / 3) * sf::gamma(2.0 / 3) /
                   (3 * sf::gamma(n + 1.0 / 3));
          },
  });
}

}  // namespace betaquad::catalog::roster
