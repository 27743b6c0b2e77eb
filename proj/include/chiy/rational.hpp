#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chiy {

// Arbitrary precision integers and rationals. mpq_class keeps every
// arithmetic result in lowest terms with a positive denominator.
using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an operation leaves its mathematical domain
/// (evaluation of y^-1 at 0, inexact division, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a caller violates a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds a canonical rational from numerator and denominator.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Inverse of to_string. Accepts "p", "-p" and "p/q".
Rational parse_rational(const std::string& text);

/// Binomial coefficient C(n, k) for n >= 0; zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

}  // namespace chiy
