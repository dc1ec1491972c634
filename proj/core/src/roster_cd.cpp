// Half-line beta integrals, their principal-value continuations, and the
// rational forms obtained from them by partial fractions.

#include "roster.hpp"

namespace betaquad::catalog::roster {

namespace {

double distinct(const ParamSet& p, const char* x, const char* y) {
  return std::fabs(p[x] - p[y]);
}

}  // namespace

void add_group_c(std::vector<IdentityRecord>& out) {
  out.push_back({
      .id = "eq-4.1",
      .group = Group::C,
      .citation = "Half-line beta integral: int_0^inf t^(a-1) / (1+t)^(a+b) dt "
                  "= B(a,b)",
      .domain = {.params = {real("a", 0, 3), real("b", 0, 3)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"];
        return [=](const Abscissa& x) {
          const double t = x.from_lo;
          return std::exp((a - 1) * std::log(t) - (a + b) * std::log1p(t));
        };
      },
      .spec =
          [](const ParamSet& p) { return IntegralSpec::half_line_up(0, p["a"] - 1); },
      .closed_form = [](const ParamSet& p) { return sf::beta(p["a"], p["b"]); },
  });

  out.push_back({
      .id = "3.194.3",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.194.3: int_0^inf x^(a-1) / (1+cx)^(a+b) "
                  "dx = c^(-a) B(a,b)",
      .domain = {.params = {real("a", 0, 3), real("b", 0, 3), real("c", 0, 4)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"], c = p["c"];
        return [=](const Abscissa& x) {
          const double t = x.from_lo;
          return std::exp((a - 1) * std::log(t) - (a + b) * std::log1p(c * t));
        };
      },
      .spec =
          [](const ParamSet& p) { return IntegralSpec::half_line_up(0, p["a"] - 1); },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"];
            return std::pow(p["c"], -a) * sf::beta(a, p["b"]);
          },
  });

  out.push_back({
      .id = "eq-4.3",
      .group = Group::C,
      .citation = "Euler's reflection integral: int_0^inf t^(a-1) / (1+t) dt = "
                  "pi / sin(pi a)",
      .domain = {.params = {open("a", 0, 1)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"];
        return [=](const Abscissa& x) {
          const double t = x.from_lo;
          return std::exp((a - 1) * std::log(t) - std::log1p(t));
        };
      },
      .spec =
          [](const ParamSet& p) { return IntegralSpec::half_line_up(0, p["a"] - 1); },
      .closed_form = [](const ParamSet& p) { return kPi * cosec_pi(p["a"]); },
  });

  out.push_back({
      .id = "3.222.2",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.222.2: int_0^inf x^(a-1) / (x+c) dx = "
                  "pi c^(a-1) / sin(pi a), c > 0",
      .domain = {.params = {open("a", 0, 1), real("c", 0, 4)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], c = p["c"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, a - 1) / (x.from_lo + c);
        };
      },
      .spec =
          [](const ParamSet& p) { return IntegralSpec::half_line_up(0, p["a"] - 1); },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"];
            return kPi * std::pow(p["c"], a - 1) * cosec_pi(a);
          },
  });

  out.push_back({
      .id = "eq-4.10",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.222.2, c < 0 (principal value): "
                  "int_0^inf x^(a-1) / (x+c) dx = -pi cot(pi a) (-c)^(a-1)",
      .domain = {.params = {open("a", 0, 1), closed("c", -3, -0.2)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"];
        return [=](const Abscissa& x) { return std::pow(x.from_lo, a - 1); };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::half_line_up(0, p["a"] - 1).with_poles({-p["c"]});
          },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"];
            return -kPi * sf::cot_pi(a) * std::pow(-p["c"], a - 1);
          },
      .tolerance_class = ToleranceClass::principal_value,
  });

  out.push_back({
      .id = "eq-4.11",
      .group = Group::C,
      .citation = "Exponential form, c < 0 (principal value): int_-inf^inf "
                  "e^(-mu t) / (e^(-t)+c) dt = -pi cot(mu pi) (-c)^(mu-1)",
      .domain = {.params = {open("mu", 0, 1), closed("c", -3, -0.2)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double mu = p["mu"];
        const double t0 = -std::log(-p["c"]);
        const double scale = std::exp((1 - mu) * t0);
        // (t - t0) e^(-mu t) / (e^(-t) + c) with w = t - t0
        return [=](const Abscissa& x) {
          const double w = x.x - t0;
          if (w == 0.0) return -scale;
          const double r = w < 0.0 ? w * std::exp((1 - mu) * w) / -std::expm1(w)
                                   : w * std::exp(-mu * w) / std::expm1(-w);
          return scale * r;
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::real_line().with_poles({-std::log(-p["c"])});
          },
      .closed_form =
          [](const ParamSet& p) {
            const double mu = p["mu"];
            return -kPi * sf::cot_pi(mu) * std::pow(-p["c"], mu - 1);
          },
      .tolerance_class = ToleranceClass::principal_value,
  });

  out.push_back({
      .id = "3.313.1",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.313.1 (principal value): int_-inf^inf "
                  "e^(-mu t) / (1-e^(-t)) dt = pi cot(mu pi)",
      .domain = {.params = {open("mu", 0, 1)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double mu = p["mu"];
        // t e^(-mu t) / (1 - e^(-t))
        return [=](const Abscissa& x) {
          const double t = x.x;
          if (t == 0.0) return 1.0;
          return t > 0.0 ? t * std::exp(-mu * t) / -std::expm1(-t)
                         : t * std::exp((1 - mu) * t) / std::expm1(t);
        };
      },
      .spec =
          [](const ParamSet&) { return IntegralSpec::real_line().with_poles({0.0}); },
      .closed_form = [](const ParamSet& p) { return kPi * sf::cot_pi(p["mu"]); },
      .tolerance_class = ToleranceClass::principal_value,
  });

  out.push_back({
      .id = "3.223.1",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.223.1: int_0^inf x^(mu-1) / "
                  "((x+b)(x+a)) dx = pi / (b-a) (a^(mu-1) - b^(mu-1)) cosec(pi mu)",
      .domain = {.params = {open("mu", 0, 2, {1.0}), real("a", 0, 3),
                            real("b", 0, 3)},
                 .relations = {relation(
                     "a != b",
                     [](const ParamSet& p) { return distinct(p, "a", "b"); },
                     0.15)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double mu = p["mu"], a = p["a"], b = p["b"];
        return [=](const Abscissa& x) {
          const double t = x.from_lo;
          return std::pow(t, mu - 1) / ((t + b) * (t + a));
        };
      },
      .spec =
          [](const ParamSet& p) { return IntegralSpec::half_line_up(0, p["mu"] - 1); },
      .closed_form =
          [](const ParamSet& p) {
            const double mu = p["mu"], a = p["a"], b = p["b"];
            return kPi / (b - a) * (std::pow(a, mu - 1) - std::pow(b, mu - 1)) *
                   cosec_pi(mu);
          },
  });

  out.push_back({
      .id = "3.223.2",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.223.2 (principal value): int_0^inf "
                  "x^(mu-1) / ((b+x)(a-x)) dx = pi / (a+b) (b^(mu-1) cosec(mu pi) "
                  "+ a^(mu-1) cot(mu pi))",
      .domain = {.params = {open("mu", 0, 2, {1.0}), real("a", 0, 3),
                            real("b", 0, 3)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double mu = p["mu"], b = p["b"];
        return [=](const Abscissa& x) {
          const double t = x.from_lo;
          return -std::pow(t, mu - 1) / (b + t);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::half_line_up(0, p["mu"] - 1).with_poles({p["a"]});
          },
      .closed_form =
          [](const ParamSet& p) {
            const double mu = p["mu"], a = p["a"], b = p["b"];
            return kPi / (a + b) *
                   (std::pow(b, mu - 1) * cosec_pi(mu) +
                    std::pow(a, mu - 1) * sf::cot_pi(mu));
          },
      .tolerance_class = ToleranceClass::principal_value,
  });

  out.push_back({
      .id = "3.223.3",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.223.3 (principal value): int_0^inf "
                  "x^(mu-1) / ((a-x)(b-x)) dx = pi cot(mu pi) (a^(mu-1) - "
                  "b^(mu-1)) / (b-a)",
      .domain = {.params = {open("mu", 0, 2, {1.0}), real("a", 0, 3),
                            real("b", 0, 3)},
                 .relations = {relation(
                     "a != b",
                     [](const ParamSet& p) { return distinct(p, "a", "b"); },
                     0.15)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double mu = p["mu"];
        return [=](const Abscissa& x) { return std::pow(x.from_lo, mu - 1); };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::half_line_up(0, p["mu"] - 1)
                .with_poles({p["a"], p["b"]});
          },
      .closed_form =
          [](const ParamSet& p) {
            const double mu = p["mu"], a = p["a"], b = p["b"];
            return kPi * sf::cot_pi(mu) *
                   (std::pow(a, mu - 1) - std::pow(b, mu - 1)) / (b - a);
          },
      .tolerance_class = ToleranceClass::principal_value,
  });

  out.push_back({
      .id = "3.224",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.224: int_0^inf (x+b) x^(mu-1) / "
                  "((x+a)(x+c)) dx = pi / sin(mu pi) ((a-b)/(a-c) a^(mu-1) + "
                  "(c-b)/(c-a) c^(mu-1))",
      .domain = {.params = {open("mu", 0, 1), real("a", 0, 3), real("b", 0, 3),
                            real("c", 0, 3)},
                 .relations = {relation(
                     "a != c",
                     [](const ParamSet& p) { return distinct(p, "a", "c"); },
                     0.15)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double mu = p["mu"], a = p["a"], b = p["b"], c = p["c"];
        return [=](const Abscissa& x) {
          const double t = x.from_lo;
          return (t + b) * std::pow(t, mu - 1) / ((t + a) * (t + c));
        };
      },
      .spec =
          [](const ParamSet& p) { return IntegralSpec::half_line_up(0, p["mu"] - 1); },
      .closed_form =
          [](const ParamSet& p) {
            const double mu = p["mu"], a = p["a"], b = p["b"], c = p["c"];
            return kPi * cosec_pi(mu) *
                   ((a - b) / (a - c) * std::pow(a, mu - 1) +
                    (c - b) / (c - a) * std::pow(c, mu - 1));
          },
  });

  out.push_back({
      .id = "3.216.1",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.216.1: int_0^1 (t^(a-1) + t^(b-1)) / "
                  "(1+t)^(a+b) dt = B(a,b)",
      .domain = {.params = {real("a", 0, 3), real("b", 0, 3)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"];
        return [=](const Abscissa& x) {
          const double t = x.from_lo;
          return (std::pow(t, a - 1) + std::pow(t, b - 1)) *
                 std::exp(-(a + b) * std::log1p(t));
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::finite(0, 1, std::min(p["a"], p["b"]) - 1, 0);
          },
      .closed_form = [](const ParamSet& p) { return sf::beta(p["a"], p["b"]); },
  });

  out.push_back({
      .id = "3.216.2",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.216.2: int_1^inf (t^(a-1) + t^(b-1)) / "
                  "(1+t)^(a+b) dt = B(a,b)",
      .domain = {.params = {real("a", 0, 3), real("b", 0, 3)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"];
        return [=](const Abscissa& x) {
          const double lt = std::log1p(x.from_lo);
          const double l1 = std::log1p(x.x);
          return std::exp((a - 1) * lt - (a + b) * l1) +
                 std::exp((b - 1) * lt - (a + b) * l1);
        };
      },
      .spec = [](const ParamSet&) { return IntegralSpec::half_line_up(1, 0); },
      .closed_form = [](const ParamSet& p) { return sf::beta(p["a"], p["b"]); },
  });

  out.push_back({
      .id = "3.194.4",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.194.4: int_0^inf t^(a-1) / "
                  "(1+ut)^(p+1) dt = u^(-a) B(a, p+1-a)",
      .domain = {.params = {real("a", 0, 3), real("p", 0, 3), real("u", 0, 3)},
                 .relations = {relation(
                     "a < p + 1",
                     [](const ParamSet& s) { return s["p"] + 1 - s["a"]; },
                     0.1)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double a = s["a"], p = s["p"], u = s["u"];
        return [=](const Abscissa& x) {
          const double t = x.from_lo;
          return std::exp((a - 1) * std::log(t) - (p + 1) * std::log1p(u * t));
        };
      },
      .spec =
          [](const ParamSet& s) { return IntegralSpec::half_line_up(0, s["a"] - 1); },
      .closed_form =
          [](const ParamSet& s) {
            const double a = s["a"];
            return std::pow(s["u"], -a) * sf::beta(a, s["p"] + 1 - a);
          },
  });

  out.push_back({
      .id = "3.196.2",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.196.2: int_u^inf (t-u)^(a-1) "
                  "(t+v)^(-a-b) dt = (u+v)^(-b) B(a,b)",
      .domain = {.params = {real("u", 0, 3), closed("v", -1, 3), real("a", 0, 3),
                            real("b", 0, 3)},
                 .relations = {relation(
                     "u + v > 0",
                     [](const ParamSet& p) { return p["u"] + p["v"]; }, 0.1)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"], w = p["u"] + p["v"];
        return [=](const Abscissa& x) {
          const double s = x.from_lo;
          return std::exp((a - 1) * std::log(s) - (a + b) * std::log(w + s));
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::half_line_up(p["u"], p["a"] - 1);
          },
      .closed_form =
          [](const ParamSet& p) {
            return std::pow(p["u"] + p["v"], -p["b"]) * sf::beta(p["a"], p["b"]);
          },
  });

  out.push_back({
      .id = "3.191.2",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.191.2: int_u^inf (t-u)^(a-1) t^(-c) dt "
                  "= u^(a-c) B(a, c-a)",
      .domain = {.params = {real("u", 0, 3), real("a", 0, 3), real("c", 0, 4)},
                 .relations = {relation(
                     "a < c", [](const ParamSet& p) { return p["c"] - p["a"]; },
                     0.1)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double u = p["u"], a = p["a"], c = p["c"];
        return [=](const Abscissa& x) {
          const double s = x.from_lo;
          return std::exp((a - 1) * std::log(s) - c * std::log(u + s));
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::half_line_up(p["u"], p["a"] - 1);
          },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"], c = p["c"];
            return std::pow(p["u"], a - c) * sf::beta(a, c - a);
          },
  });

  out.push_back({
      .id = "eq-4.19",
      .group = Group::C,
      .citation = "Power form of the half-line beta integral: int_0^inf "
                  "x^(ac-1) / (1+x^c)^(a+b) dx = (1/c) B(a,b)",
      .domain = {.params = {real("a", 0, 3), real("b", 0, 3), real("c", 0, 3)},
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
        return [=](const Abscissa& x) {
          const double lx = std::log(x.from_lo);
          return std::exp((a * c - 1) * lx - (a + b) * softplus(c * lx));
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::half_line_up(0, p["a"] * p["c"] - 1);
          },
      .closed_form =
          [](const ParamSet& p) { return sf::beta(p["a"], p["b"]) / p["c"]; },
  });

  out.push_back({
      .id = "3.251.6",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.251.6: int_0^inf x^(mu+1) / (1+x^2)^2 "
                  "dx = mu pi / (4 sin(mu pi / 2))",
      .domain = {.params = {open("mu", -2, 2, {0.0})}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double mu = p["mu"];
        return [=](const Abscissa& x) {
          const double lx = std::log(x.from_lo);
          return std::exp((mu + 1) * lx - 2 * softplus(2 * lx));
        };
      },
      .spec =
          [](const ParamSet& p) { return IntegralSpec::half_line_up(0, p["mu"] + 1); },
      .closed_form =
          [](const ParamSet& p) {
            const double mu = p["mu"];
            return mu * kPi / 4 * cosec_pi(mu / 2);
          },
  });

  out.push_back({
      .id = "3.241.2",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.241.2: int_0^inf x^(p-1) / (1+x^c) dx "
                  "= (pi/c) cosec(pi p / c)",
      .domain = {.params = {real("p", 0, 3), real("c", 0, 4)},
                 .relations = {relation(
                     "p < c", [](const ParamSet& s) { return s["c"] - s["p"]; },
                     0.1)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"], c = s["c"];
        return [=](const Abscissa& x) {
          const double lx = std::log(x.from_lo);
          return std::exp((p - 1) * lx - softplus(c * lx));
        };
      },
      .spec =
          [](const ParamSet& s) { return IntegralSpec::half_line_up(0, s["p"] - 1); },
      .closed_form =
          [](const ParamSet& s) {
            const double c = s["c"];
            return kPi / c * cosec_pi(s["p"] / c);
          },
  });

  out.push_back({
      .id = "3.196.4",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.196.4: int_1^inf dx / ((a-bx) "
                  "(x-1)^nu) = -(pi/b) cosec(nu pi) (b/(b-a))^nu",
      .domain = {.params = {real("a", 0, 3), real("b", 0, 4), open("nu", 0, 1)},
                 .relations = {relation(
                     "a < b", [](const ParamSet& p) { return p["b"] - p["a"]; },
                     0.1)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"], nu = p["nu"];
        return [=](const Abscissa& x) {
          const double s = x.from_lo;
          return std::pow(s, -nu) / ((a - b) - b * s);
        };
      },
      .spec =
          [](const ParamSet& p) { return IntegralSpec::half_line_up(1, -p["nu"]); },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"], b = p["b"], nu = p["nu"];
            return -kPi / b * cosec_pi(nu) * std::pow(b / (b - a), nu);
          },
  });

  out.push_back({
      .id = "3.196.5",
      .group = Group::C,
      .citation = "Gradshteyn & Ryzhik 3.196.5: int_-inf^1 dx / ((a-bx) "
                  "(1-x)^nu) = (pi/b) cosec(nu pi) (b/(a-b))^nu",
      .domain = {.params = {real("a", 0, 4), real("b", 0, 3), open("nu", 0, 1)},
                 .relations = {relation(
                     "a > b", [](const ParamSet& p) { return p["a"] - p["b"]; },
                     0.1)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"], nu = p["nu"];
        return [=](const Abscissa& x) {
          const double s = x.from_hi;
          return std::pow(s, -nu) / ((a - b) + b * s);
        };
      },
      .spec =
          [](const ParamSet& p) {
            return IntegralSpec::half_line_down(1, -p["nu"]);
          },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"], b = p["b"], nu = p["nu"];
            return kPi / b * cosec_pi(nu) * std::pow(b / (a - b), nu);
          },
  });
}

void add_group_d(std::vector<IdentityRecord>& out) {
  out.push_back({
      .id = "3.221.1",
      .group = Group::D,
      .citation = "Gradshteyn & Ryzhik 3.221.1: int_a^inf (x-a)^(p-1) / (x-b) dx "
                  "= pi (a-b)^(p-1) cosec(pi p), a > b",
      .domain = {.params = {closed("a", -2, 3), closed("b", -2, 3),
                            open("p", 0, 1)},
                 .relations = {relation(
                     "a > b", [](const ParamSet& s) { return s["a"] - s["b"]; },
                     0.25)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"], gap = s["a"] - s["b"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, p - 1) / (gap + x.from_lo);
        };
      },
      .spec =
          [](const ParamSet& s) {
            return IntegralSpec::half_line_up(s["a"], s["p"] - 1);
          },
      .closed_form =
          [](const ParamSet& s) {
            const double p = s["p"];
            return kPi * std::pow(s["a"] - s["b"], p - 1) * cosec_pi(p);
          },
  });

  out.push_back({
      .id = "3.221.2",
      .group = Group::D,
      .citation = "Gradshteyn & Ryzhik 3.221.2: int_-inf^a (a-x)^(p-1) / (x-b) "
                  "dx = -pi (b-a)^(p-1) cosec(pi p), b > a",
      .domain = {.params = {closed("a", -2, 3), closed("b", -2, 3),
                            open("p", 0, 1)},
                 .relations = {relation(
                     "b > a", [](const ParamSet& s) { return s["b"] - s["a"]; },
                     0.25)}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"], gap = s["b"] - s["a"];
        return [=](const Abscissa& x) {
          return -std::pow(x.from_hi, p - 1) / (gap + x.from_hi);
        };
      },
      .spec =
          [](const ParamSet& s) {
            return IntegralSpec::half_line_down(s["a"], s["p"] - 1);
          },
      .closed_form =
          [](const ParamSet& s) {
            const double p = s["p"];
            return -kPi * std::pow(s["b"] - s["a"], p - 1) * cosec_pi(p);
          },
  });

  out.push_back({
      .id = "eq-5.3",
      .group = Group::D,
      .citation = "Shifted half-line form: int_0^inf x^a / (1+x)^b dx = "
                  "B(a+1, b-a-1)",
      .domain = {.params = {real("a", -0.5, 2), real("b", 0.5, 5)},
                 .relations = {relation(
                     "b > a + 1",
                     [](const ParamSet& p) { return p["b"] - p["a"] - 1; },
                     0.2)}},
      .integrand =
          [](const ParamSet& p) -> Integrand {
        const double a = p["a"], b = p["b"];
        return [=](const Abscissa& x) {
          const double t = x.from_lo;
          return std::exp(a * std::log(t) - b * std::log1p(t));
        };
      },
      .spec =
          [](const ParamSet& p) { return IntegralSpec::half_line_up(0, p["a"]); },
      .closed_form =
          [](const ParamSet& p) {
            const double a = p["a"];
            return sf::beta(a + 1, p["b"] - a - 1);
          },
  });

  out.push_back({
      .id = "3.225.1",
      .group = Group::D,
      .citation = "Gradshteyn & Ryzhik 3.225.1: int_1^inf (t-1)^(p-1) / t^2 dt "
                  "= pi (1-p) / sin(p pi)",
      .domain = {.params = {open("p", 0, 2, {1.0})}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"];
        return [=](const Abscissa& x) {
          return std::pow(x.from_lo, p - 1) / (x.x * x.x);
        };
      },
      .spec =
          [](const ParamSet& s) { return IntegralSpec::half_line_up(1, s["p"] - 1); },
      .closed_form =
          [](const ParamSet& s) {
            const double p = s["p"];
            return kPi * (1 - p) * cosec_pi(p);
          },
  });

  out.push_back({
      .id = "3.225.2",
      .group = Group::D,
      .citation = "Gradshteyn & Ryzhik 3.225.2: int_1^inf (t-1)^(1-p) / t^3 dt "
                  "= pi p (1-p) / (2 sin(p pi))",
      .domain = {.params = {open("p", 0, 2, {1.0})}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"];
        return [=](const Abscissa& x) {
          return std::exp((1 - p) * std::log(x.from_lo) -
                          3 * std::log1p(x.from_lo));
        };
      },
      .spec =
          [](const ParamSet& s) { return IntegralSpec::half_line_up(1, 1 - s["p"]); },
      .closed_form =
          [](const ParamSet& s) {
            const double p = s["p"];
            return kPi * p * (1 - p) / 2 * cosec_pi(p);
          },
  });

  out.push_back({
      .id = "3.225.3",
      .group = Group::D,
      .citation = "Gradshteyn & Ryzhik 3.225.3: int_0^inf x^p / (1+x)^3 dx = "
                  "p (1-p) pi / (2 sin(p pi))",
      .domain = {.params = {open("p", 0, 2, {1.0})}},
      .integrand =
          [](const ParamSet& s) -> Integrand {
        const double p = s["p"];
        return [=](const Abscissa& x) {
          const double t = x.from_lo;
          return std::exp(p * std::log(t) - 3 * std::log1p(t));
        };
      },
      .spec =
          [](const ParamSet& s) { return IntegralSpec::half_line_up(0, s["p"]); },
      .closed_form =
          [](const ParamSet& s) {
            const double p = s["p"];
            return p * (1 - p) * kPi / 2 * cosec_pi(p);
          },
  });
}

}  // namespace betaquad::catalog::roster
