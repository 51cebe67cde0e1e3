#include "ymps/hn.hpp"

#include <stdexcept>
#include <string>

#include "ymps/text.hpp"

namespace ymps {

void validate(const SurfaceSpec& s) {
  if (s.gbar < 0) throw std::invalid_argument("gbar must be nonnegative");
}

void validate(const BundleSpec& b) {
  if (b.rank < 1) throw std::invalid_argument("rank must be positive");
  if (b.degree_class != 0 && b.degree_class != 1)
    throw std::invalid_argument("degree class must be 0 or 1");
}

HNType::HNType(const std::vector<Rational>& slopes) {
  if (slopes.empty()) throw std::invalid_argument("HN type must have positive rank");
  for (const auto& s : slopes) {
    if (!blocks_.empty() && blocks_.back().first == s)
      ++blocks_.back().second;
    else
      blocks_.push_back({s, 1});
  }
  check();
}

HNType HNType::from_blocks(std::vector<std::pair<Rational, int>> blocks) {
  HNType mu;
  mu.blocks_ = std::move(blocks);
  for (const auto& [s, m] : mu.blocks_) {
    (void)s;
    if (m < 1) throw std::invalid_argument("HN block with nonpositive multiplicity");
  }
  if (mu.blocks_.empty()) throw std::invalid_argument("HN type must have positive rank");
  mu.check();
  return mu;
}

void HNType::check() const {
  for (std::size_t k = 1; k < blocks_.size(); ++k)
    if (!(blocks_[k - 1].first > blocks_[k].first))
      throw std::invalid_argument("HN slopes must be weakly decreasing");
  // Nonorientable symmetry: the reversed, negated block list must coincide.
  const std::size_t n = blocks_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& [s, m] = blocks_[k];
    const auto& [s2, m2] = blocks_[n - 1 - k];
    if (s != -s2 || m != m2)
      throw std::invalid_argument("HN type violates the symmetry mu_i = -mu_{n+1-i}");
  }
}

std::vector<Rational> HNType::slopes() const {
  std::vector<Rational> out;
  for (const auto& [s, m] : blocks_) out.insert(out.end(), static_cast<std::size_t>(m), s);
  return out;
}

int HNType::rank() const {
  int n = 0;
  for (const auto& [s, m] : blocks_) {
    (void)s;
    n += m;
  }
  return n;
}

bool HNType::is_semistable() const { return blocks_.size() == 1; }

Rational slope(long degree, int rank) {
  if (rank < 1) throw std::invalid_argument("slope of a rank < 1 bundle");
  return make_rational(Integer(degree), Integer(rank));
}

long index_of_type(const HNType& mu, int gbar) {
  validate(SurfaceSpec{gbar});
  const Rational genus_shift(gbar - 1);
  Rational total(0);
  const auto& blocks = mu.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      // Slopes strictly decrease across blocks, so every (i, j) pair counts,
      // once per tuple-entry pair.
      const Rational pairs(blocks[i].second * blocks[j].second);
      total += pairs * (blocks[i].first - blocks[j].first + genus_shift);
    }
  if (!is_integer(total) || total < 0)
    throw std::domain_error("Morse index is not a nonnegative integer for this (mu, gbar)");
  return static_cast<long>(total.get_num().get_si());
}

std::vector<HNType> index_set(const BundleSpec& bundle, int gbar, int cutoff) {
  validate(bundle);
  validate(SurfaceSpec{gbar});
  if (cutoff < 1) throw std::invalid_argument("cutoff must be positive");
  std::vector<HNType> out;
  if (bundle.rank == 2) {
    out.push_back(HNType({Rational(0), Rational(0)}));
    const int parity = (bundle.degree_class + gbar + 1) % 2;
    for (int r = 1; r <= cutoff; ++r)
      if (r % 2 == parity) out.push_back(HNType({Rational(r), Rational(-r)}));
    return out;
  }
  if (bundle.rank == 3) {
    for (int r = 0; r <= cutoff; ++r)
      out.push_back(r == 0 ? HNType({Rational(0), Rational(0), Rational(0)})
                           : HNType({Rational(r), Rational(0), Rational(-r)}));
    return out;
  }
  throw std::invalid_argument("index_set supports rank 2 and 3 only");
}

HNType line_pair_type(int rank, int d) {
  if (rank < 2) throw std::invalid_argument("line pair type needs rank >= 2");
  if (d < 1) throw std::invalid_argument("line pair type needs d >= 1");
  std::vector<std::pair<Rational, int>> blocks;
  blocks.push_back({Rational(d), 1});
  if (rank > 2) blocks.push_back({Rational(0), rank - 2});
  blocks.push_back({Rational(-d), 1});
  return HNType::from_blocks(std::move(blocks));
}

RatFun stratum_series(const HNType& mu, int gbar) {
  validate(SurfaceSpec{gbar});
  if (mu.is_semistable())
    throw std::invalid_argument(
        "semistable stratum has no product formula; use the flat-moduli series");
  const Poly one_plus_t = Poly(1) + Poly::variable();
  const Poly one_minus_t2 = Poly(1) - Poly::variable().pow(2);
  const unsigned long g = static_cast<unsigned long>(gbar);
  const auto& blocks = mu.blocks();
  if (mu.rank() == 2 && blocks.size() == 2) {
    // (r, -r): a torus (S^1)^{2g} times BU(1).
    return RatFun(one_plus_t.pow(2 * g), one_minus_t2);
  }
  if (mu.rank() == 3 && blocks.size() == 3) {
    // (r, 0, -r): (S^1)^{3g} times BU(1)^2.
    return RatFun(one_plus_t.pow(3 * g), one_minus_t2.pow(2));
  }
  throw std::invalid_argument("stratum series known for rank 2 and 3 only");
}

RatFun ambient_series(int n, int gbar) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  validate(SurfaceSpec{gbar});
  Poly num(1);
  Poly den(1);
  for (int i = 1; i <= n; ++i) {
    num = num * (Poly(1) + Poly::variable().pow(static_cast<unsigned long>(2 * i - 1)));
    den = den * (Poly(1) - Poly::variable().pow(static_cast<unsigned long>(2 * i)));
  }
  return RatFun(num.pow(static_cast<unsigned long>(gbar)), den);
}

const char* to_string(EulerClass c) {
  switch (c) {
    case EulerClass::vanishing: return "vanishing";
    case EulerClass::invertible: return "invertible";
    case EulerClass::unknown: return "unknown";
  }
  return "unknown";
}

std::vector<NormalSummand> classify_normal_summands(const HNType& mu) {
  const int k = static_cast<int>(mu.blocks().size());
  std::vector<NormalSummand> fixed;
  std::vector<NormalSummand> swapped;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      // The involution sends block pair (i, j) to (k+1-j, k+1-i).
      const int ti = k + 1 - j;
      const int tj = k + 1 - i;
      if (ti == i && tj == j) {
        const bool rank_one = mu.blocks()[static_cast<std::size_t>(i - 1)].second == 1;
        fixed.push_back({i, j, rank_one ? EulerClass::vanishing : EulerClass::unknown});
      } else if (std::pair(i, j) < std::pair(ti, tj)) {
        // One representative per swapped orbit.
        swapped.push_back({i, j, EulerClass::invertible});
      }
    }
  fixed.insert(fixed.end(), swapped.begin(), swapped.end());
  return fixed;
}

StratumRecord make_stratum_record(const HNType& mu, int gbar) {
  StratumRecord rec{mu, index_of_type(mu, gbar), stratum_series(mu, gbar),
                    classify_normal_summands(mu)};
  return rec;
}

nlohmann::json to_json(const StratumRecord& rec) {
  nlohmann::json j;
  nlohmann::json mu = nlohmann::json::array();
  for (const auto& s : rec.mu.slopes()) mu.push_back(to_string(s));
  j["mu"] = mu;
  j["index"] = rec.index;
  j["series"] = render(rec.series, Format::plain);
  nlohmann::json summands = nlohmann::json::array();
  for (const auto& s : rec.summands)
    summands.push_back({{"pair", {s.i, s.j}}, {"class", to_string(s.cls)}});
  j["summands"] = summands;
  return j;
}

}  // namespace ymps
