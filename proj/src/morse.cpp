#include "ymps/morse.hpp"

#include <stdexcept>

#include "ymps/text.hpp"

namespace ymps {

GeometricFamily::GeometricFamily(RatFun shape_, long a_, long b_, long r0_, long step_)
    : shape(std::move(shape_)), a(a_), b(b_), r0(r0_), step(step_) {
  if (a < 1) throw std::invalid_argument("family exponent slope must be positive");
  if (r0 < 1) throw std::invalid_argument("family start must be positive");
  if (step < 1) throw std::invalid_argument("family step must be positive");
  if (exponent(r0) < 0) throw std::invalid_argument("family starts at a negative exponent");
}

RatFun sum_family(const GeometricFamily& f) {
  const Poly t = Poly::variable();
  const RatFun start(t.pow(static_cast<unsigned long>(f.exponent(f.r0))));
  const RatFun ratio_den(Poly(1) - t.pow(static_cast<unsigned long>(f.a * f.step)), Poly(1));
  return f.shape * start / ratio_den;
}

namespace {

// First member of the rank-2 parity class at or after r_from.
long first_rank2_parameter(const BundleSpec& bundle, int gbar, long r_from) {
  const long parity = (bundle.degree_class + gbar + 1) % 2;
  long r = r_from < 1 ? 1 : r_from;
  if (r % 2 != parity) ++r;
  return r;
}

}  // namespace

GeometricFamily unstable_tail_family(const BundleSpec& bundle, int gbar, long r_from) {
  validate(bundle);
  validate(SurfaceSpec{gbar});
  const Poly t = Poly::variable();
  const Poly one(1);
  const unsigned long g = static_cast<unsigned long>(gbar);
  if (bundle.rank == 2) {
    // lambda_r = 2r + g - 1, over the parity class of the degree; the
    // exponent map encodes lambda_r - 1.
    const RatFun shape((one + t).pow(2 * g), one - t.pow(2));
    return GeometricFamily(shape, 2, gbar - 2, first_rank2_parameter(bundle, gbar, r_from), 2);
  }
  if (bundle.rank == 3) {
    // lambda_r = 4r + 3(g - 1), every r >= 1.
    const RatFun shape((one + t).pow(3 * g), (one - t.pow(2)).pow(2));
    return GeometricFamily(shape, 4, 3 * gbar - 4, r_from < 1 ? 1 : r_from, 1);
  }
  throw std::invalid_argument("unstable families known for rank 2 and 3 only");
}

RatFun flat_moduli_series(const BundleSpec& bundle, int gbar) {
  return ambient_series(bundle.rank, gbar) + sum_family(unstable_tail_family(bundle, gbar, 1));
}

RatFun rank3_closed_form(int gbar) {
  validate(SurfaceSpec{gbar});
  const unsigned long g = static_cast<unsigned long>(gbar);
  const Poly t = Poly::variable();
  const Poly one(1);
  const Poly bracket = (one + t.pow(3)).pow(g) * (one + t.pow(5)).pow(g) +
                       (one + t.pow(2) + t.pow(4)) *
                           (t.pow(3) + Poly(2) * t.pow(4) + t.pow(5)).pow(g);
  const Poly num = (one + t).pow(g) * bracket;
  const Poly den = (one - t.pow(2)) * (one - t.pow(4)) * (one - t.pow(6));
  return RatFun(num, den);
}

ClosedFormCheck verify_rank3_closed_form(int gbar) {
  ClosedFormCheck check;
  check.gbar = gbar;
  check.assembled = flat_moduli_series(BundleSpec{3, 0}, gbar);
  check.closed_form = rank3_closed_form(gbar);
  check.pass = check.assembled == check.closed_form;
  return check;
}

BettiTable betti_table(const BundleSpec& bundle, int gbar, std::size_t max_degree) {
  BettiTable table;
  table.rank = bundle.rank;
  table.degree_class = bundle.degree_class;
  table.gbar = gbar;
  table.series = flat_moduli_series(bundle, gbar);
  const Series s = expand(table.series, max_degree);
  table.entries.reserve(s.coeff.size());
  for (std::size_t k = 0; k < s.coeff.size(); ++k) {
    const Rational& c = s.coeff[k];
    if (!is_integer(c) || c < 0)
      throw std::domain_error("Betti entry b_" + std::to_string(k) +
                              " is not a nonnegative integer: " + to_string(c));
    table.entries.push_back(c.get_num());
  }
  return table;
}

nlohmann::json to_json(const BettiTable& table) {
  nlohmann::json j;
  j["rank"] = table.rank;
  j["degree_class"] = table.degree_class;
  j["gbar"] = table.gbar;
  nlohmann::json betti = nlohmann::json::array();
  for (const auto& b : table.entries) {
    if (!b.fits_slong_p())
      throw std::domain_error("Betti entry exceeds the JSON integer range");
    betti.push_back(b.get_si());
  }
  j["betti"] = betti;
  j["series"] = render(table.series, Format::plain);
  return j;
}

}  // namespace ymps
