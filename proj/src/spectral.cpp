#include "ymps/spectral.hpp"

#include <stdexcept>

#include "ymps/text.hpp"

namespace ymps {

namespace {

RatFun t_power(long e) {
  return RatFun(Poly::variable().pow(static_cast<unsigned long>(e)));
}

// Sum of t^(lambda_p - 1) * series_p over all nonminimal strata, families
// included in closed form.
RatFun antiperfect_correction(const StratificationData& data) {
  RatFun total;
  for (std::size_t p = 1; p < data.strata.size(); ++p) {
    const auto& [lambda, series] = data.strata[p];
    if (lambda < 1) throw std::domain_error("nonminimal stratum with index < 1");
    total = total + t_power(lambda - 1) * series;
  }
  for (const auto& f : data.families) total = total + sum_family(f);
  return total;
}

}  // namespace

Verdict validate_stratification(const StratificationData& data, std::size_t order) {
  if (data.strata.empty()) return {false, "no strata supplied"};
  if (data.strata.front().index != 0)
    return {false, "minimal stratum must have index 0, got " +
                       std::to_string(data.strata.front().index)};
  long prev = 0;
  for (std::size_t p = 1; p < data.strata.size(); ++p) {
    const long lambda = data.strata[p].index;
    if (lambda < 1)
      return {false, "stratum " + std::to_string(p) + " has index " +
                         std::to_string(lambda) + " < 1"};
    if (p > 1 && lambda < prev)
      return {false, "indices decrease at stratum " + std::to_string(p) + " (" +
                         std::to_string(prev) + " -> " + std::to_string(lambda) +
                         "), so no growth bound lambda_p >= p + c holds"};
    prev = lambda;
  }
  auto integral_nonneg = [order](const RatFun& r, const std::string& what) -> Verdict {
    Series s;
    try {
      s = expand(r, order);
    } catch (const NotPowerSeries&) {
      return {false, what + " is not a power series at t = 0"};
    }
    for (std::size_t k = 0; k < s.coeff.size(); ++k)
      if (!is_integer(s.coeff[k]) || s.coeff[k] < 0)
        return {false, what + " has coefficient " + to_string(s.coeff[k]) +
                           " at degree " + std::to_string(k)};
    return {true, {}};
  };
  Verdict v = integral_nonneg(data.ambient, "ambient series");
  if (!v.pass) return v;
  for (std::size_t p = 0; p < data.strata.size(); ++p) {
    v = integral_nonneg(data.strata[p].series, "stratum " + std::to_string(p) + " series");
    if (!v.pass) return v;
  }
  for (std::size_t i = 0; i < data.families.size(); ++i) {
    v = integral_nonneg(data.families[i].shape, "family " + std::to_string(i) + " shape");
    if (!v.pass) return v;
  }
  return {true, "stratification data is well formed"};
}

RatFun e1_column(const StratificationData& data, std::size_t p) {
  if (p >= data.strata.size())
    throw std::out_of_range("stratum index " + std::to_string(p) + " out of range (" +
                            std::to_string(data.strata.size()) + " strata)");
  return t_power(data.strata[p].index) * data.strata[p].series;
}

Verdict check_antiperfect(const StratificationData& data) {
  if (data.strata.empty()) return {false, "no strata supplied"};
  const RatFun lhs = data.strata.front().series;
  const RatFun rhs = data.ambient + antiperfect_correction(data);
  if (lhs == rhs) return {true, "antiperfect: minimal series equals ambient + corrections"};
  return {false, "antiperfect identity fails: minimal series " + render(lhs) +
                     " vs ambient + corrections " + render(rhs)};
}

Verdict check_perfect(const StratificationData& data) {
  if (data.strata.empty()) return {false, "no strata supplied"};
  const RatFun lhs = data.strata.front().series;
  RatFun correction;
  for (std::size_t p = 1; p < data.strata.size(); ++p) {
    const auto& [lambda, series] = data.strata[p];
    if (lambda < 1) throw std::domain_error("nonminimal stratum with index < 1");
    correction = correction + t_power(lambda) * series;
  }
  // Family exponents encode lambda - 1; one extra power of t restores lambda.
  for (const auto& f : data.families)
    correction = correction + RatFun::variable() * sum_family(f);
  const RatFun rhs = data.ambient - correction;
  if (lhs == rhs) return {true, "perfect: minimal series equals ambient - corrections"};
  return {false, "perfect identity fails: minimal series " + render(lhs) +
                     " vs ambient - corrections " + render(rhs)};
}

std::vector<RatFun> graded_pair_dims(const StratificationData& data, std::size_t pmax) {
  const Verdict v = check_antiperfect(data);
  if (!v.pass)
    throw std::invalid_argument("graded_pair_dims requires antiperfect data: " + v.detail);
  std::vector<RatFun> out;
  for (std::size_t p = 1; p <= pmax; ++p) out.push_back(e1_column(data, p));
  return out;
}

StratificationData yang_mills_stratification(const BundleSpec& bundle, int gbar,
                                             int explicit_strata) {
  if (explicit_strata < 0) throw std::invalid_argument("explicit_strata must be >= 0");
  StratificationData data;
  data.ambient = ambient_series(bundle.rank, gbar);
  data.strata.push_back({0, flat_moduli_series(bundle, gbar)});
  long last = 0;
  int taken = 0;
  // Large cutoff; the loop stops after explicit_strata entries.
  for (const auto& mu : index_set(bundle, gbar, 2 * explicit_strata + 2)) {
    if (mu.is_semistable()) continue;
    if (taken == explicit_strata) break;
    data.strata.push_back({index_of_type(mu, gbar), stratum_series(mu, gbar)});
    last = mu.blocks().front().first.get_num().get_si();
    ++taken;
  }
  data.families.push_back(unstable_tail_family(bundle, gbar, last + 1));
  return data;
}

namespace {

const nlohmann::json& require_field(const nlohmann::json& j, const std::string& key,
                                    const std::string& path) {
  if (!j.is_object()) throw std::invalid_argument(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(path + "." + key + ": missing");
  return *it;
}

RatFun ratfun_field(const nlohmann::json& j, const std::string& path) {
  if (!j.is_string()) throw std::invalid_argument(path + ": expected a series string");
  try {
    return parse_ratfun(j.get<std::string>());
  } catch (const ParseError& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

long int_field(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_integer()) throw std::invalid_argument(path + ": expected an integer");
  return j.get<long>();
}

}  // namespace

StratificationData stratification_from_json(const nlohmann::json& j) {
  StratificationData data;
  data.ambient = ratfun_field(require_field(j, "ambient", "$"), "$.ambient");
  const nlohmann::json& strata = require_field(j, "strata", "$");
  if (!strata.is_array()) throw std::invalid_argument("$.strata: expected an array");
  for (std::size_t p = 0; p < strata.size(); ++p) {
    const std::string path = "$.strata[" + std::to_string(p) + "]";
    data.strata.push_back({int_field(require_field(strata[p], "index", path), path + ".index"),
                           ratfun_field(require_field(strata[p], "series", path), path + ".series")});
  }
  if (j.contains("families")) {
    const nlohmann::json& families = j.at("families");
    if (!families.is_array()) throw std::invalid_argument("$.families: expected an array");
    for (std::size_t i = 0; i < families.size(); ++i) {
      const std::string path = "$.families[" + std::to_string(i) + "]";
      RatFun shape = ratfun_field(require_field(families[i], "shape", path), path + ".shape");
      const long a = int_field(require_field(families[i], "a", path), path + ".a");
      const long b = int_field(require_field(families[i], "b", path), path + ".b");
      const long r0 = int_field(require_field(families[i], "r0", path), path + ".r0");
      const long step = int_field(require_field(families[i], "step", path), path + ".step");
      try {
        data.families.emplace_back(std::move(shape), a, b, r0, step);
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + std::string(e.what()));
      }
    }
  }
  return data;
}

nlohmann::json to_json(const StratificationData& data) {
  nlohmann::json j;
  j["ambient"] = render(data.ambient, Format::plain);
  nlohmann::json strata = nlohmann::json::array();
  for (const auto& s : data.strata)
    strata.push_back({{"index", s.index}, {"series", render(s.series, Format::plain)}});
  j["strata"] = strata;
  nlohmann::json families = nlohmann::json::array();
  for (const auto& f : data.families)
    families.push_back({{"shape", render(f.shape, Format::plain)},
                        {"a", f.a},
                        {"b", f.b},
                        {"r0", f.r0},
                        {"step", f.step}});
  j["families"] = families;
  return j;
}

}  // namespace ymps
