#include "chiy/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chiy {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw PreconditionError("malformed rational '" + text + "'");
  }
}

BigInt binomial(long n, long k) {
  if (n < 0) throw PreconditionError("binomial with negative n");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

LaurentScalar::LaurentScalar(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentScalar LaurentScalar::monomial(int exponent, const Rational& coeff) {
  LaurentScalar out;
  if (coeff != 0) {
    out.low_ = exponent;
    out.coeffs_.push_back(coeff);
  }
  return out;
}

LaurentScalar LaurentScalar::from_coefficients(int low, std::vector<Rational> coeffs) {
  LaurentScalar out;
  out.low_ = low;
  out.coeffs_ = std::move(coeffs);
  out.normalize();
  return out;
}

void LaurentScalar::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

Rational LaurentScalar::coefficient(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<size_t>(exponent - low_)];
}

std::vector<std::pair<int, Rational>> LaurentScalar::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  int lo = std::min(low_, other.low_);
  int hi = std::max(high(), other.high());
  std::vector<Rational> sum(static_cast<size_t>(hi - lo + 1));
  for (size_t i = 0; i < coeffs_.size(); ++i) sum[static_cast<size_t>(low_ - lo) + i] = coeffs_[i];
  for (size_t i = 0; i < other.coeffs_.size(); ++i)
    sum[static_cast<size_t>(other.low_ - lo) + i] += other.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(sum);
  normalize();
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& other) { return *this += -other; }

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentScalar::from_coefficients(a.low_ + b.low_, std::move(prod));
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& other) { return *this = *this * other; }

LaurentScalar LaurentScalar::pow(unsigned exponent) const {
  LaurentScalar result(1), base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational LaurentScalar::eval(const Rational& point) const {
  if (is_zero()) return 0;
  if (point == 0) {
    if (low_ < 0) throw DomainError("evaluating a negative power of y at y = 0");
    return coefficient(0);
  }
  // Horner on the coefficient vector, then scale by point^low.
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
  Rational scale = 1;
  Rational step = low_ >= 0 ? point : Rational(1) / point;
  for (int i = 0; i < std::abs(low_); ++i) scale *= step;
  return acc * scale;
}

std::optional<LaurentScalar> LaurentScalar::divide_exact(const LaurentScalar& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by zero Laurent polynomial");
  if (is_zero()) return LaurentScalar{};
  // Both are y^low * (polynomial with nonzero constant term); divide those polynomials.
  std::vector<Rational> rem = coeffs_;
  const auto& den = divisor.coeffs_;
  if (rem.size() < den.size()) return std::nullopt;
  std::vector<Rational> quot(rem.size() - den.size() + 1);
  const Rational& lead = den.back();
  for (size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + den.size() - 1] / lead;
    quot[k] = q;
    if (q == 0) continue;
    for (size_t j = 0; j < den.size(); ++j) rem[k + j] -= q * den[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return from_coefficients(low_ - divisor.low_, std::move(quot));
}

std::string LaurentScalar::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << chiy::to_string(mag);
      continue;
    }
    if (mag != 1) os << chiy::to_string(mag) << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

namespace {

// Minimal reader for the to_string format.
class ScalarReader {
 public:
  ScalarReader(const std::string& text, const std::string& var) : text_(text), var_(var) {}

  LaurentScalar read() {
    LaurentScalar out;
    skip();
    if (at_end()) throw PreconditionError("empty Laurent polynomial text");
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    for (;;) {
      out += read_term() * Rational(sign);
      skip();
      if (at_end()) break;
      char op = text_[pos_++];
      if (op != '+' && op != '-') fail();
      sign = op == '-' ? -1 : 1;
    }
    return out;
  }

 private:
  LaurentScalar read_term() {
    skip();
    Rational coeff = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      coeff = parse_rational(text_.substr(start, pos_ - start));
      skip();
      if (at_end() || peek() != '*') return LaurentScalar(coeff);
      ++pos_;
      skip();
    }
    if (text_.compare(pos_, var_.size(), var_) != 0) fail();
    pos_ += var_.size();
    int exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      size_t start = pos_;
      if (!at_end() && peek() == '-') ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == start) fail();
      exponent = std::stoi(text_.substr(start, pos_ - start));
    }
    return LaurentScalar::monomial(exponent, coeff);
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail() const {
    throw PreconditionError("malformed Laurent polynomial at offset " + std::to_string(pos_) + ": '" +
                            text_ + "'");
  }

  const std::string& text_;
  const std::string& var_;
  size_t pos_ = 0;
};

}  // namespace

LaurentScalar LaurentScalar::parse(const std::string& text, const std::string& var) {
  return ScalarReader(text, var).read();
}

LaurentScalar one_plus_y_pow(unsigned k) { return (LaurentScalar(1) + LaurentScalar::y()).pow(k); }

}  // namespace chiy
