#include "ymps/euler.hpp"

#include <stdexcept>

#include "ymps/hn.hpp"
#include "ymps/morse.hpp"

namespace ymps {

namespace {

RatFun bu_denominator_cleared(int n) {
  Poly p(1);
  const Poly t = Poly::variable();
  for (int i = 1; i <= n; ++i) p = p * (Poly(1) - t.pow(static_cast<unsigned long>(2 * i)));
  return RatFun(p);
}

}  // namespace

Rational euler_limit(const RatFun& series, int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  return limit_at_one(series * bu_denominator_cleared(n));
}

EulerReport euler_report(int n, int gbar) {
  if (n != 2 && n != 3)
    throw std::invalid_argument("flat-moduli series computable for rank 2 and 3 only");
  validate(SurfaceSpec{gbar});
  EulerReport rep;
  rep.rank = n;
  rep.gbar = gbar;
  const unsigned long g = static_cast<unsigned long>(gbar);
  const unsigned long un = static_cast<unsigned long>(n);
  rep.expected = pow2((g + 1) * un - 1);
  rep.oracle = pow2(un - 1) * pow2(un * g);
  bool pass = rep.expected == rep.oracle;
  if (n == 3) {
    rep.computed_limit = euler_limit(flat_moduli_series(BundleSpec{3, 0}, gbar), n);
    pass = pass && rep.computed_limit == rep.expected;
  } else {
    // Both degree classes must reach the same limit.
    const Rational even = euler_limit(flat_moduli_series(BundleSpec{2, 0}, gbar), n);
    const Rational odd = euler_limit(flat_moduli_series(BundleSpec{2, 1}, gbar), n);
    rep.computed_limit = even;
    pass = pass && even == rep.expected && odd == rep.expected;
  }
  rep.pass = pass;
  return rep;
}

const char* to_string(FailureVerdict v) {
  switch (v) {
    case FailureVerdict::consistent: return "consistent";
    case FailureVerdict::contradiction: return "contradiction";
    case FailureVerdict::slack: return "slack";
  }
  return "slack";
}

FailureReport antiperfection_failure_report(int n, int gbar) {
  if (n < 3) throw std::invalid_argument("failure report needs rank >= 3");
  validate(SurfaceSpec{gbar});
  FailureReport rep;
  rep.rank = n;
  rep.gbar = gbar;
  const unsigned long g = static_cast<unsigned long>(gbar);
  const unsigned long un = static_cast<unsigned long>(n);

  // Stratum series of type (d, 0, ..., 0, -d) with the rank n-2 middle factor
  // replaced by its total Betti number; the convergence of that factor at
  // t = 1 is uniform in d, so the limit is unchanged.
  const Integer middle_total = pow2((g + 1) * (un - 2) - 1);
  const Poly t = Poly::variable();
  const Poly one(1);
  const RatFun shape = RatFun(Poly(Rational(middle_total))) *
                       RatFun((one + t).pow(2 * g), one - t.pow(2)) *
                       RatFun((one - t.pow(2 * un - 2)) * (one - t.pow(2 * un)));

  // lambda_d = 2d(n-1) + (g-1)(2n-3); the family sums t^(lambda_d - 1).
  const long a = 2 * (static_cast<long>(n) - 1);
  const long b = (static_cast<long>(gbar) - 1) * (2 * static_cast<long>(n) - 3) - 1;
  rep.j_limit = limit_at_one(sum_family(GeometricFamily(shape, a, b, 1, 1)));

  rep.budget = Rational(pow2((g + 1) * un - 1) - pow2(g * un));
  if (rep.j_limit == rep.budget)
    rep.verdict = FailureVerdict::consistent;
  else if (rep.j_limit > rep.budget)
    rep.verdict = FailureVerdict::contradiction;
  else
    rep.verdict = FailureVerdict::slack;
  return rep;
}

nlohmann::json to_json(const EulerReport& rep) {
  return {{"rank", rep.rank},
          {"gbar", rep.gbar},
          {"computed_limit", to_string(rep.computed_limit)},
          {"expected", rep.expected.get_str()},
          {"oracle", rep.oracle.get_str()},
          {"verdict", rep.pass ? "pass" : "fail"}};
}

nlohmann::json to_json(const FailureReport& rep) {
  return {{"rank", rep.rank},
          {"gbar", rep.gbar},
          {"j_limit", to_string(rep.j_limit)},
          {"budget", to_string(rep.budget)},
          {"verdict", to_string(rep.verdict)}};
}

}  // namespace ymps
