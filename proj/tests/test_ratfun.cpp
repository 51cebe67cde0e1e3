#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "ymps/ratfun.hpp"
#include "ymps/text.hpp"

using namespace ymps;
using namespace ymps::testing;

namespace {

RatFun rf(const char* text) { return parse_ratfun(text); }

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(make_rational(2, -4) == Rational(-1, 2));
  CHECK(make_rational(0, 7) == 0);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
  CHECK(pow2(10) == 1024);
  CHECK(is_integer(make_rational(4, 2)));
  CHECK_FALSE(is_integer(Rational(1, 3)));
  CHECK(to_string(Rational(-3, 7)) == "-3/7");
}

TEST_CASE("poly basics") {
  const Poly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(Poly(1).is_one());

  const Poly p = Poly::from_coeffs({Rational(1), Rational(0), Rational(-2)});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(2) == -2);
  CHECK(p.coeff(5) == 0);
  CHECK(p.eval(Rational(2)) == -7);
  CHECK(p.at_one() == -1);

  CHECK(Poly::from_coeffs({Rational(0), Rational(0)}).is_zero());
  CHECK(p + (-p) == Poly());
  CHECK(p * Poly(1) == p);
  CHECK(p * Poly() == Poly());
  CHECK(Poly::variable().pow(3) == Poly::monomial(Rational(1), 3));
  CHECK(p.shifted(2).degree() == 4);
}

TEST_CASE("poly division and gcd") {
  const Poly t = Poly::variable();
  const Poly a = (Poly(1) + t).pow(2) * (Poly(1) - t);
  auto [q, r] = Poly::divmod(a, Poly(1) + t);
  CHECK(r.is_zero());
  CHECK(q == (Poly(1) + t) * (Poly(1) - t));
  CHECK_THROWS_AS(Poly::divmod(a, Poly()), std::domain_error);
  CHECK_THROWS_AS(Poly::exact_div(Poly(1) + t, t), std::domain_error);

  CHECK(poly_gcd((Poly(1) + t).pow(2), (Poly(1) + t) * (Poly(1) - t)) == Poly(1) + t);
  CHECK(poly_gcd(Poly(4) + Poly(4) * t, Poly(2) + Poly(2) * t) == Poly(1) + t);
  // Positive leading coefficient regardless of input signs.
  CHECK(poly_gcd(-(Poly(1) + t), -(Poly(1) + t)).leading() > 0);
  CHECK(poly_gcd(Poly(), Poly()).is_zero());
  CHECK(poly_gcd(t, Poly()) == t);
}

TEST_CASE("ratfun arithmetic identities") {
  CHECK(rf("1/(1-t)") + rf("1/(1+t)") == rf("2/(1-t^2)"));
  CHECK(rf("(1+t)^2/(1-t^2)") == rf("(1+t)/(1-t)"));
  CHECK(rf("(1-t^6)/(1-t^2)") == rf("1+t^2+t^4"));
  CHECK((rf("(1-t^6)/(1-t^2)")).den().is_one());

  const RatFun a = rf("(3+t)/(1-t^3)");
  CHECK(a - a == RatFun());
  CHECK((a / a).is_one());
  CHECK_THROWS_AS(a / RatFun(), std::domain_error);
  CHECK(a.pow(0).is_one());
  CHECK(a.pow(3) == a * a * a);
}

TEST_CASE("normalization is canonical") {
  // The same value from scaled representatives.
  const Poly t = Poly::variable();
  const RatFun a(Poly(6) + Poly(6) * t, Poly(4) - Poly(4) * t.pow(2));
  const RatFun b(Poly(3), Poly(2) - Poly(2) * t);
  CHECK(a == b);
  // Coprime, content-free, denominator positive at its lowest order.
  CHECK(a.den().coeff(0) > 0);
  CHECK(poly_gcd(a.num(), a.den()).degree() <= 0);
  CHECK_THROWS_AS(RatFun(Poly(1), Poly()), std::domain_error);
}

TEST_CASE("renormalizing a normalized value is the identity") {
  std::mt19937 rng(5150);
  for (int iter = 0; iter < 200; ++iter) {
    const RatFun r = random_ratfun(rng);
    CHECK(RatFun(r.num(), r.den()) == r);
  }
}

TEST_CASE("ring axioms on randomized instances") {
  std::mt19937 rng(20240817);
  for (int iter = 0; iter < 200; ++iter) {
    const RatFun a = random_ratfun(rng);
    const RatFun b = random_ratfun(rng);
    const RatFun c = random_ratfun(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("expand") {
  const Series geo = expand(rf("1/(1-t^2)"), 5);
  CHECK(geo.coeff == std::vector<Rational>{1, 0, 1, 0, 1, 0});

  const Series g0 = expand(rf("(2+t^2+t^4)/((1-t^2)*(1-t^4)*(1-t^6))"), 2);
  CHECK(g0.coeff == std::vector<Rational>{2, 0, 3});

  CHECK(expand(rf("(1+t)/(1-t)"), 3).coeff == std::vector<Rational>{1, 2, 2, 2});

  // Non-integer coefficients are fine for general rational functions.
  CHECK(expand(rf("1/(2-t)"), 2).coeff ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 8)});

  CHECK_THROWS_AS(expand(RatFun(Poly(1), Poly::variable()), 4), NotPowerSeries);
}

TEST_CASE("expand is multiplicative") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    const RatFun a = random_expandable_ratfun(rng);
    const RatFun b = random_expandable_ratfun(rng);
    const std::size_t order = 16;
    CHECK(expand(a * b, order) == convolve(expand(a, order), expand(b, order), order));
  }
}

TEST_CASE("limit at t = 1") {
  CHECK(limit_at_one(rf("(1-t^6)/(1-t^2)")) == 3);
  CHECK(limit_at_one(rf("(1-t)^2/(1-t)")) == 0);
  CHECK(limit_at_one(rf("(1-t^6)/(1-t)")) == 6);
  CHECK(limit_at_one(RatFun()) == 0);
  CHECK(limit_at_one(rf("(2+t)/(5-t^2)")) == Rational(3, 4));
  CHECK_THROWS_AS(limit_at_one(rf("(1-t)/(1-t)^2")), PoleAtOne);
  CHECK(one_minus_t_order((Poly(1) - Poly::variable()).pow(3) * (Poly(2) + Poly::variable())) == 3);
  CHECK_THROWS_AS(one_minus_t_order(Poly()), std::domain_error);
}

TEST_CASE("limit agrees with evaluation near t = 1") {
  // Sanity only: r(1 - eps) approaches the computed limit as eps shrinks.
  const RatFun r = rf("(1-t^6)/(1-t^2)");
  const Rational limit = limit_at_one(r);
  Rational prev_gap;
  for (int k = 2; k <= 12; k += 5) {
    const Rational x = Rational(1) - make_rational(1, pow2(static_cast<unsigned long>(k)));
    const Rational value = r.num().eval(x) / r.den().eval(x);
    const Rational gap = abs(value - limit);
    if (k > 2) CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < Rational(1, 100));
}

TEST_CASE("parser accepts the expression grammar") {
  CHECK(rf("(1+t)^2/(1-t^2)") == rf("(1+t)/(1-t)"));
  CHECK(rf("1").is_one());
  CHECK(rf(" 1 + t ") == RatFun(Poly(1) + Poly::variable()));
  CHECK(rf("-t+1") == rf("1-t"));
  CHECK(rf("2*t^3") == RatFun(Poly::monomial(Rational(2), 3)));
  CHECK(rf("1/2") == RatFun(Rational(1, 2)));
  CHECK(rf("t^0").is_one());
  CHECK(rf("((t))") == RatFun::variable());
  CHECK(rf("123456789012345678901234567890") ==
        RatFun(Rational(Integer("123456789012345678901234567890"))));

  const std::string g0 = "(2 + t^2 + t^4)/((1 - t^2)*(1 - t^4)*(1 - t^6))";
  CHECK(parse_ratfun(render(rf(g0.c_str()), Format::plain)) == rf(g0.c_str()));
}

TEST_CASE("parser reports errors with positions") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_ratfun(text);
    } catch (const ParseError& e) {
      return e.position;
    }
    FAIL("expected a parse error for: " << text);
    return 0;
  };
  CHECK(position_of("1+") == 2);
  CHECK(position_of("(1+t") == 4);
  CHECK(position_of("t^") == 2);
  CHECK(position_of("t^x") == 2);
  CHECK(position_of("1 2") == 2);
  CHECK(position_of("x") == 0);
  CHECK(position_of("2**3") == 2);
  CHECK(position_of("t^999999999999999999") == 2);  // exponent overflow
  CHECK(position_of("1/(t-t)") == 1);               // division by zero
}

TEST_CASE("parse after render is the identity") {
  std::mt19937 rng(123);
  for (int iter = 0; iter < 1000; ++iter) {
    const RatFun r = random_ratfun(rng, 5, 20);
    CHECK(parse_ratfun(render(r, Format::plain)) == r);
  }
}

TEST_CASE("render formats") {
  const RatFun r = rf("(1+t)/(1-t^2)");  // normalizes to 1/(1-t)
  CHECK(render(r, Format::plain) == "(1)/(1 - t)");
  CHECK(render(r, Format::latex) == "\\frac{1}{1 - t}");
  CHECK(render(rf("1+t^2"), Format::plain) == "1 + t^2");
  CHECK(render(rf("1+t^2"), Format::latex) == "1 + t^{2}");
  CHECK(render(RatFun(), Format::plain) == "0");
  CHECK(render(rf("0-1-t"), Format::plain) == "-1 - t");
  CHECK(render(rf("3*t^7"), Format::latex) == "3t^{7}");

  // JSON rendering: sparse [degree, coefficient-string] pairs.
  CHECK(render(rf("(2+t^3)/(1-t^2)"), Format::json) ==
        R"({"den":[[0,"1"],[2,"-1"]],"num":[[0,"2"],[3,"1"]]})");
  CHECK(render(RatFun(), Format::json) == R"({"den":[[0,"1"]],"num":[]})");
}
