#include "ymps/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ymps {

Poly::Poly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(long constant) : Poly(Rational(constant)) {}

Poly Poly::monomial(const Rational& coeff, std::size_t degree) {
  Poly p;
  if (coeff != 0) {
    p.coeffs_.assign(degree + 1, Rational(0));
    p.coeffs_[degree] = coeff;
  }
  return p;
}

Poly Poly::variable() { return monomial(Rational(1), 1); }

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
  Poly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Poly::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Rational Poly::at_one() const {
  Rational acc(0);
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) r.coeffs_[k] += b.coeffs_[k];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly();
  Poly r(*this);
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  Poly r;
  r.coeffs_.assign(coeffs_.size() + k, Rational(0));
  std::copy(coeffs_.begin(), coeffs_.end(), r.coeffs_.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

Poly Poly::pow(unsigned long e) const {
  Poly acc(1);
  Poly base(*this);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = a;
  Poly quot;
  const int db = b.degree();
  const Rational lead = b.leading();
  while (!rem.is_zero() && rem.degree() >= db) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - db);
    const Rational factor = rem.leading() / lead;
    quot = quot + Poly::monomial(factor, shift);
    rem = rem - b.scaled(factor).shifted(shift);
  }
  return {quot, rem};
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // Rescale to primitive integer coefficients with positive lead.
  Integer den_lcm = 1;
  for (const auto& c : a.coeffs())
    if (c != 0) den_lcm = lcm(den_lcm, c.get_den());
  Integer num_gcd = 0;
  for (const auto& c : a.coeffs())
    if (c != 0) num_gcd = gcd(num_gcd, Integer(c.get_num() * (den_lcm / c.get_den())));
  Rational scale = make_rational(den_lcm, num_gcd);
  if (a.leading() < 0) scale = -scale;
  return a.scaled(scale);
}

}  // namespace ymps
