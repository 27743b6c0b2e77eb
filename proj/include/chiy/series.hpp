#pragma once

#include <string>
#include <vector>

#include "chiy/laurent.hpp"

namespace chiy {

/// Truncated power series c_0 + c_1 a + ... + c_N a^N over Q[y, 1/y].
///
/// Every value carries its own truncation order N; binary operations
/// return the smaller of the two orders.
class TruncSeries {
 public:
  TruncSeries(int order, std::vector<LaurentScalar> coeffs, std::string var = "a");

  static TruncSeries constant(const LaurentScalar& c, int order, std::string var = "a");
  /// The series "a" itself.
  static TruncSeries variable(int order, std::string var = "a");
  /// exp(a) to the given order.
  static TruncSeries exp_series(int order, std::string var = "a");

  int order() const { return order_; }
  const std::string& var() const { return var_; }
  /// Coefficient of a^k; zero beyond the stored order.
  const LaurentScalar& coefficient(int k) const;
  const std::vector<LaurentScalar>& coefficients() const { return coeffs_; }

  TruncSeries truncated(int order) const;

  TruncSeries operator+(const TruncSeries& other) const;
  TruncSeries operator-(const TruncSeries& other) const;
  TruncSeries operator-() const;
  TruncSeries operator*(const TruncSeries& other) const;
  TruncSeries operator*(const LaurentScalar& c) const;
  /// Requires the divisor's constant term to be a unit of Q[y, 1/y] (a nonzero monomial).
  TruncSeries operator/(const TruncSeries& divisor) const;
  TruncSeries reciprocal() const;

  /// this(inner(a)); inner must have zero constant term.
  TruncSeries compose(const TruncSeries& inner) const;
  /// exp(this); requires zero constant term.
  TruncSeries exp() const;
  /// a -> c * a.
  TruncSeries scale_variable(const LaurentScalar& c) const;
  /// Coefficientwise substitution of a rational value for y.
  TruncSeries eval_y(const Rational& point) const;

  /// Equality up to the shared truncation order.
  bool operator==(const TruncSeries& other) const;

  std::string to_string() const;

 private:
  int order_;
  std::string var_;
  std::vector<LaurentScalar> coeffs_;  // size order_ + 1
};

}  // namespace chiy
