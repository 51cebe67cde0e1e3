#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "ymps/morse.hpp"
#include "ymps/ratfun.hpp"

namespace ymps {

/// One stratum of an ordered stratification: Morse index and Poincare series.
struct Stratum {
  long index = 0;
  RatFun series;
};

/// Dimension data of an ordered stratification of a space M: the ambient
/// series P_t(M), explicit strata p = 0, 1, 2, ... (stratum 0 is the minimal
/// one), and optional geometric-family tails whose exponent maps encode
/// lambda(r) - 1.
struct StratificationData {
  RatFun ambient;
  std::vector<Stratum> strata;
  std::vector<GeometricFamily> families;
};

struct Verdict {
  bool pass = false;
  std::string detail;
};

/// Checks lambda_0 = 0, index monotonicity (nondecreasing, positive beyond
/// stratum 0) and nonnegative integrality of every series expansion up to
/// `order`.
Verdict validate_stratification(const StratificationData& data, std::size_t order = 60);

/// E_1-page column series of stratum p: t^lambda_p * series_p.
RatFun e1_column(const StratificationData& data, std::size_t p);

/// Antiperfection identity: series_0 = ambient + sum_{p>0} t^(lambda_p - 1) series_p.
Verdict check_antiperfect(const StratificationData& data);

/// Perfection identity: series_0 = ambient - sum_{p>0} t^lambda_p series_p.
Verdict check_perfect(const StratificationData& data);

/// Graded dimensions of the pair (M, M_0): [t^lambda_p series_p for p = 1..pmax].
/// Requires check_antiperfect to pass.
std::vector<RatFun> graded_pair_dims(const StratificationData& data, std::size_t pmax);

/// Yang-Mills stratification data for a rank-2 or rank-3 bundle: the flat
/// moduli series as stratum 0, `explicit_strata` unstable strata, and the
/// closed-form tail family for the rest.
StratificationData yang_mills_stratification(const BundleSpec& bundle, int gbar,
                                             int explicit_strata);

/// Loads {"ambient": "...", "strata": [{"index", "series"}...],
/// "families": [{"shape","a","b","r0","step"}...]}. Schema violations throw
/// std::invalid_argument naming the JSON path.
StratificationData stratification_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StratificationData& data);

}  // namespace ymps
