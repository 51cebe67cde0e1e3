#include "ymps/ratfun.hpp"

#include <utility>

namespace ymps {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RatFun::RatFun(Poly p) : num_(std::move(p)), den_(1) { normalize(); }

RatFun::RatFun(const Rational& c) : num_(c), den_(1) { normalize(); }

namespace {

Rational lowest_nonzero_coeff(const Poly& p) {
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeff(static_cast<std::size_t>(k)) != 0) return p.coeff(static_cast<std::size_t>(k));
  return Rational(0);
}

}  // namespace

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::exact_div(num_, g);
    den_ = Poly::exact_div(den_, g);
  }
  // Clear coefficient denominators jointly, then remove the shared content.
  Integer den_lcm = 1;
  for (const Poly* p : {&num_, &den_})
    for (const auto& c : p->coeffs())
      if (c != 0) den_lcm = lcm(den_lcm, c.get_den());
  Integer content = 0;
  for (const Poly* p : {&num_, &den_})
    for (const auto& c : p->coeffs())
      if (c != 0) content = gcd(content, Integer(c.get_num() * (den_lcm / c.get_den())));
  Rational scale = make_rational(den_lcm, content);
  if (lowest_nonzero_coeff(den_) < 0) scale = -scale;
  num_ = num_.scaled(scale);
  den_ = den_.scaled(scale);
}

RatFun RatFun::operator-() const {
  RatFun r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::pow(unsigned long e) const {
  return RatFun(num_.pow(e), den_.pow(e));
}

Series expand(const RatFun& r, std::size_t order) {
  const Poly& num = r.num();
  const Poly& den = r.den();
  const Rational d0 = den.coeff(0);
  if (d0 == 0) throw NotPowerSeries();
  Series s;
  s.coeff.assign(order + 1, Rational(0));
  for (std::size_t k = 0; k <= order; ++k) {
    Rational acc = num.coeff(k);
    const std::size_t jmax = std::min(k, static_cast<std::size_t>(den.degree()));
    for (std::size_t j = 1; j <= jmax; ++j)
      acc -= den.coeff(j) * s.coeff[k - j];
    s.coeff[k] = acc / d0;
  }
  return s;
}

namespace {

// p = (1-t) q + p(1); returns q, valid only when p(1) = 0.
Poly divide_by_one_minus_t(const Poly& p) {
  const int d = p.degree();
  if (d <= 0) return Poly();
  std::vector<Rational> out(static_cast<std::size_t>(d), Rational(0));
  Rational carry(0);
  for (int k = 0; k < d; ++k) {
    carry += p.coeff(static_cast<std::size_t>(k));
    out[static_cast<std::size_t>(k)] = carry;
  }
  return Poly::from_coeffs(std::move(out));
}

}  // namespace

std::size_t one_minus_t_order(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("(1-t)-order of the zero polynomial");
  Poly cur = p;
  std::size_t order = 0;
  while (cur.at_one() == 0) {
    cur = divide_by_one_minus_t(cur);
    ++order;
  }
  return order;
}

Rational limit_at_one(const RatFun& r) {
  if (r.is_zero()) return Rational(0);
  Poly num = r.num();
  Poly den = r.den();
  std::size_t a = 0;
  while (num.at_one() == 0) {
    num = divide_by_one_minus_t(num);
    ++a;
  }
  std::size_t b = 0;
  while (den.at_one() == 0) {
    den = divide_by_one_minus_t(den);
    ++b;
  }
  if (a > b) return Rational(0);
  if (a < b) throw PoleAtOne();
  return num.at_one() / den.at_one();
}

}  // namespace ymps
