#include "ymps/rational.hpp"

#include <stdexcept>

namespace ymps {

Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace ymps
