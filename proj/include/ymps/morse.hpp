#pragma once

#include <vector>

#include "json.hpp"
#include "ymps/hn.hpp"
#include "ymps/ratfun.hpp"

namespace ymps {

/// Geometric family of series summands: shape * t^(a*r + b) for
/// r = r0, r0 + step, r0 + 2*step, ...
struct GeometricFamily {
  RatFun shape;
  long a = 1;
  long b = 0;
  long r0 = 1;
  long step = 1;

  GeometricFamily(RatFun shape_, long a_, long b_, long r0_, long step_);

  long exponent(long r) const { return a * r + b; }
};

/// Closed form of the full family sum: shape * t^exponent(r0) / (1 - t^(a*step)).
RatFun sum_family(const GeometricFamily& f);

/// The unstable strata of the given bundle from slope parameter r_from up,
/// as one geometric family with exponent(r) = lambda_r - 1.
GeometricFamily unstable_tail_family(const BundleSpec& bundle, int gbar, long r_from);

/// Equivariant Poincare series of the flat-connection moduli stack:
/// ambient series plus the closed-form sum of t^(lambda-1)-shifted
/// unstable stratum series.
RatFun flat_moduli_series(const BundleSpec& bundle, int gbar);

/// Closed form for the rank-3 series:
/// (1+t)^g [ (1+t^3)^g (1+t^5)^g + (1+t^2+t^4)(t^3+2t^4+t^5)^g ] * P_t(BU(3)).
RatFun rank3_closed_form(int gbar);

struct ClosedFormCheck {
  int gbar = 0;
  RatFun assembled;
  RatFun closed_form;
  bool pass = false;
};

/// Compares the stratification assembly against rank3_closed_form, exactly.
ClosedFormCheck verify_rank3_closed_form(int gbar);

struct BettiTable {
  int rank = 0;
  int degree_class = 0;
  int gbar = 0;
  std::vector<Integer> entries;
  RatFun series;
};

/// Maclaurin coefficients of the flat-moduli series through t^max_degree.
/// Every entry is checked to be a nonnegative integer.
BettiTable betti_table(const BundleSpec& bundle, int gbar, std::size_t max_degree);

nlohmann::json to_json(const BettiTable& table);

}  // namespace ymps
