#pragma once

#include <utility>
#include <vector>

#include "json.hpp"
#include "ymps/ratfun.hpp"

namespace ymps {

/// The nonorientable surface: connected sum of gbar + 1 projective planes.
struct SurfaceSpec {
  int gbar = 0;
};

/// Hermitian C^n-bundle over the surface, classified by rank and the
/// mod-2 first Chern class.
struct BundleSpec {
  int rank = 1;
  int degree_class = 0;
};

void validate(const SurfaceSpec& s);
void validate(const BundleSpec& b);

/// Harder-Narasimhan type: weakly decreasing slopes mu_1 >= ... >= mu_n
/// subject to the nonorientable symmetry mu_i = -mu_{n+1-i}.
///
/// Stored as (slope, multiplicity) blocks; the slope tuple is derived.
class HNType {
 public:
  explicit HNType(const std::vector<Rational>& slopes);
  static HNType from_blocks(std::vector<std::pair<Rational, int>> blocks);

  const std::vector<std::pair<Rational, int>>& blocks() const { return blocks_; }
  std::vector<Rational> slopes() const;
  int rank() const;
  /// True when every slope is zero.
  bool is_semistable() const;

  bool operator==(const HNType&) const = default;

 private:
  HNType() = default;
  void check() const;

  std::vector<std::pair<Rational, int>> blocks_;
};

/// deg/rank as an exact rational.
Rational slope(long degree, int rank);

/// Morse index: sum of (mu_i - mu_j + gbar - 1) over ordered slope pairs
/// with mu_i > mu_j. Throws std::domain_error when the total is not a
/// nonnegative integer.
long index_of_type(const HNType& mu, int gbar);

/// All HN types of Yang-Mills strata with slope parameter r <= cutoff,
/// ordered by increasing r. Rank 2 obeys the parity rule
/// r = degree_class + gbar + 1 (mod 2); rank 3 lists every r >= 0.
std::vector<HNType> index_set(const BundleSpec& bundle, int gbar, int cutoff);

/// The rank >= 2 one-parameter type (d, 0, ..., 0, -d).
HNType line_pair_type(int rank, int d);

/// Equivariant Poincare series of the unstable stratum of type mu;
/// independent of the slope parameter.
RatFun stratum_series(const HNType& mu, int gbar);

/// Equivariant Poincare series of the full connection space:
/// (prod_{i=1..n} (1+t^{2i-1}))^g * prod_{i=1..n} 1/(1-t^{2i}).
RatFun ambient_series(int n, int gbar);

enum class EulerClass { vanishing, invertible, unknown };

const char* to_string(EulerClass c);

/// One normal-bundle summand, labelled by a 1-based pair of HN block indices.
struct NormalSummand {
  int i = 0;
  int j = 0;
  EulerClass cls = EulerClass::unknown;

  bool operator==(const NormalSummand&) const = default;
};

/// Classifies the normal-bundle summands of the stratum of type mu: summands
/// swapped by the orientation involution have invertible Euler class, fixed
/// summands of block rank one have vanishing Euler class.
std::vector<NormalSummand> classify_normal_summands(const HNType& mu);

struct StratumRecord {
  HNType mu;
  long index = 0;
  RatFun series;
  std::vector<NormalSummand> summands;
};

/// Record for an unstable stratum; throws for the semistable type, whose
/// series is assembled elsewhere.
StratumRecord make_stratum_record(const HNType& mu, int gbar);

nlohmann::json to_json(const StratumRecord& rec);

}  // namespace ymps
