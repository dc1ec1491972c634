#include <cmath>
#include <cstdio>

#include "betaquad/catalog.hpp"
#include "betaquad/quad.hpp"
#include "betaquad/specfun.hpp"

int main() {
  namespace bq = betaquad;
  const auto& rec = bq::catalog::entry("eq-4.3");
  const bq::catalog::ParamSet p{{"a", 0.5}};
  const auto r = bq::quad::integrate(rec.integrand(p), rec.spec(p));
  const double want = bq::specfun::beta(0.5, 0.5);
  std::printf("eq-4.3 at a = 1/2: %.15g (closed form %.15g)\n", r.value, want);
  return r.converged && std::fabs(r.value - want) < 1e-12 ? 0 : 1;
}
