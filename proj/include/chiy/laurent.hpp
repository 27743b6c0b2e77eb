#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chiy/rational.hpp"

namespace chiy {

/// Exact Laurent polynomial in one symbol y with rational coefficients.
///
/// Stored densely from the lowest nonzero exponent to the highest; both ends
/// are always nonzero, so structural equality is mathematical equality.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentScalar(long c) : LaurentScalar(Rational(c)) {}  // NOLINT
  LaurentScalar(int c) : LaurentScalar(Rational(c)) {}   // NOLINT

  static LaurentScalar monomial(int exponent, const Rational& coeff = 1);
  static LaurentScalar y(int exponent = 1) { return monomial(exponent); }
  /// Sum of coeffs[i] * y^(low + i); zeros are stripped.
  static LaurentScalar from_coefficients(int low, std::vector<Rational> coeffs);
  /// Parses the text produced by to_string ("1 - 1/2*y + y^-2").
  static LaurentScalar parse(const std::string& text, const std::string& var = "y");

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest/highest exponent; undefined for zero.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(int exponent) const;
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
  /// Nonzero terms in ascending exponent order.
  std::vector<std::pair<int, Rational>> terms() const;

  LaurentScalar& operator+=(const LaurentScalar& other);
  LaurentScalar& operator-=(const LaurentScalar& other);
  LaurentScalar& operator*=(const LaurentScalar& other);
  LaurentScalar operator-() const;

  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  LaurentScalar pow(unsigned exponent) const;

  /// Value at y = point. Throws DomainError at 0 when a negative power is present.
  Rational eval(const Rational& point) const;

  /// Quotient when `divisor` divides this exactly in Q[y, 1/y], otherwise nullopt.
  std::optional<LaurentScalar> divide_exact(const LaurentScalar& divisor) const;

  std::string to_string(const std::string& var = "y") const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

/// (1 + y)^k for k >= 0.
LaurentScalar one_plus_y_pow(unsigned k);

}  // namespace chiy
