#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ymps/rational.hpp"

namespace ymps {

/// Univariate polynomial over the rationals in the formal variable t.
///
/// Coefficients are stored densely by degree; the highest stored degree
/// always has a nonzero coefficient and the zero polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& constant);
  explicit Poly(long constant);

  static Poly monomial(const Rational& coeff, std::size_t degree);
  /// The polynomial t.
  static Poly variable();
  /// Builds from coefficients indexed by degree; trailing zeros are dropped.
  static Poly from_coeffs(std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// Degree, with degree(0) = -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of t^k (zero beyond the stored range).
  Rational coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const;

  Rational eval(const Rational& x) const;
  /// Sum of all coefficients.
  Rational at_one() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const Rational& c) const;
  /// Multiplication by t^k.
  Poly shifted(std::size_t k) const;
  Poly pow(unsigned long e) const;

  /// Quotient and remainder of a by b over the rationals; b must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Division known to be remainder-free; throws std::domain_error otherwise.
  static Poly exact_div(const Poly& a, const Poly& b);

  bool operator==(const Poly&) const = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Canonical gcd: primitive integer coefficients, positive leading coefficient.
/// gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

}  // namespace ymps
