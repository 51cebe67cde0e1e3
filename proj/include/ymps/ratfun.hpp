#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ymps/poly.hpp"

namespace ymps {

/// The rational function has a pole at t = 1, so the limit diverges.
struct PoleAtOne : std::domain_error {
  PoleAtOne() : std::domain_error("pole at t = 1") {}
};

/// den(0) = 0: the value is not a power series at the origin.
struct NotPowerSeries : std::domain_error {
  NotPowerSeries() : std::domain_error("not a power series at origin (denominator vanishes at 0)") {}
};

/// Quotient of integer-coefficient polynomials in t, kept normalized:
/// numerator and denominator are coprime, share no integer content, and the
/// lowest-order nonzero coefficient of the denominator is positive (so series
/// denominators read 1 - t^2 - ..., matching how Poincare series are written).
/// Equality is structural.
class RatFun {
 public:
  /// Zero, represented as 0/1.
  RatFun() : num_(), den_(1) {}
  RatFun(Poly num, Poly den);
  explicit RatFun(Poly p);
  explicit RatFun(const Rational& c);
  explicit RatFun(long c) : num_(c), den_(1) {}

  /// The rational function t.
  static RatFun variable() { return RatFun(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  /// Throws std::domain_error when b is zero.
  friend RatFun operator/(const RatFun& a, const RatFun& b);

  RatFun pow(unsigned long e) const;

  bool operator==(const RatFun&) const = default;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

/// Truncated power series: coefficients of t^0 .. t^order.
struct Series {
  std::vector<Rational> coeff;

  std::size_t order() const { return coeff.size() - 1; }
  Rational at(std::size_t k) const {
    return k < coeff.size() ? coeff[k] : Rational(0);
  }
  bool operator==(const Series&) const = default;
};

/// Maclaurin coefficients of r up to degree `order`.
/// Requires den(0) != 0, else throws NotPowerSeries.
Series expand(const RatFun& r, std::size_t order);

/// Order of vanishing of p at t = 1, i.e. the exact power of (1-t) dividing p.
/// Unused for the zero polynomial (throws).
std::size_t one_minus_t_order(const Poly& p);

/// Exact limit of r as t -> 1 after cancelling common (1-t) factors.
/// Throws PoleAtOne when the denominator vanishes to higher order.
Rational limit_at_one(const RatFun& r);

}  // namespace ymps
