#pragma once

#include "json.hpp"
#include "ymps/ratfun.hpp"

namespace ymps {

/// Exact limit as t -> 1 of series * prod_{i=1..n} (1 - t^{2i}).
/// Throws PoleAtOne if the series grows faster than P_t(BU(n)).
Rational euler_limit(const RatFun& series, int n);

/// t -> 1 limit of the flat-moduli series against the localization count.
/// `expected` is 2^{(g+1)n-1}; `oracle` is the independent fixed-point count
/// 2^{n-1} * 2^{ng} (torus-fixed components times torus Betti sum).
struct EulerReport {
  int rank = 0;
  int gbar = 0;
  Rational computed_limit;
  Integer expected;
  Integer oracle;
  bool pass = false;
};

/// Supported for rank 2 (both degree classes are computed and must agree)
/// and rank 3.
EulerReport euler_report(int n, int gbar);

enum class FailureVerdict { consistent, contradiction, slack };

const char* to_string(FailureVerdict v);

/// Compares the t -> 1 limit of the (d, 0, ..., 0, -d) family sum against
/// the antiperfection budget 2^{(g+1)n-1} - 2^{gn}. A limit exceeding the
/// budget rules out antiperfection for that rank.
struct FailureReport {
  int rank = 0;
  int gbar = 0;
  Rational j_limit;
  Rational budget;
  FailureVerdict verdict = FailureVerdict::slack;
};

FailureReport antiperfection_failure_report(int n, int gbar);

nlohmann::json to_json(const EulerReport& rep);
nlohmann::json to_json(const FailureReport& rep);

}  // namespace ymps
