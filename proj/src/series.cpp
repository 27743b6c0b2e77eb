#include "chiy/series.hpp"

#include <algorithm>
#include <sstream>

namespace chiy {

namespace {
const LaurentScalar kZero;

bool is_unit(const LaurentScalar& c) { return !c.is_zero() && c.low() == c.high(); }

LaurentScalar unit_inverse(const LaurentScalar& c) {
  return LaurentScalar::monomial(-c.low(), Rational(1) / c.coefficient(c.low()));
}
}  // namespace

TruncSeries::TruncSeries(int order, std::vector<LaurentScalar> coeffs, std::string var)
    : order_(order), var_(std::move(var)), coeffs_(std::move(coeffs)) {
  if (order_ < 0) throw PreconditionError("negative truncation order");
  coeffs_.resize(static_cast<size_t>(order_) + 1);
}

TruncSeries TruncSeries::constant(const LaurentScalar& c, int order, std::string var) {
  return TruncSeries(order, {c}, std::move(var));
}

TruncSeries TruncSeries::variable(int order, std::string var) {
  return TruncSeries(order, {LaurentScalar(), LaurentScalar(1)}, std::move(var));
}

TruncSeries TruncSeries::exp_series(int order, std::string var) {
  std::vector<LaurentScalar> c;
  Rational term = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) term /= k;
    c.emplace_back(term);
  }
  return TruncSeries(order, std::move(c), std::move(var));
}

const LaurentScalar& TruncSeries::coefficient(int k) const {
  if (k < 0 || k > order_) return kZero;
  return coeffs_[static_cast<size_t>(k)];
}

TruncSeries TruncSeries::truncated(int order) const {
  return TruncSeries(std::min(order, order_), coeffs_, var_);
}

TruncSeries TruncSeries::operator+(const TruncSeries& other) const {
  int n = std::min(order_, other.order_);
  std::vector<LaurentScalar> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = coefficient(k) + other.coefficient(k);
  return TruncSeries(n, std::move(c), var_);
}

TruncSeries TruncSeries::operator-() const {
  std::vector<LaurentScalar> c;
  for (const auto& x : coeffs_) c.push_back(-x);
  return TruncSeries(order_, std::move(c), var_);
}

TruncSeries TruncSeries::operator-(const TruncSeries& other) const { return *this + (-other); }

TruncSeries TruncSeries::operator*(const TruncSeries& other) const {
  int n = std::min(order_, other.order_);
  std::vector<LaurentScalar> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += coeffs_[i] * other.coefficient(j);
  }
  return TruncSeries(n, std::move(c), var_);
}

TruncSeries TruncSeries::operator*(const LaurentScalar& s) const {
  std::vector<LaurentScalar> c;
  for (const auto& x : coeffs_) c.push_back(x * s);
  return TruncSeries(order_, std::move(c), var_);
}

TruncSeries TruncSeries::reciprocal() const {
  if (!is_unit(coeffs_[0]))
    throw PreconditionError("series division needs a unit constant term, got " + coeffs_[0].to_string());
  LaurentScalar inv0 = unit_inverse(coeffs_[0]);
  std::vector<LaurentScalar> inv(static_cast<size_t>(order_) + 1);
  inv[0] = inv0;
  for (int k = 1; k <= order_; ++k) {
    LaurentScalar acc;
    for (int j = 1; j <= k; ++j) acc += coeffs_[j] * inv[k - j];
    inv[k] = -(acc * inv0);
  }
  return TruncSeries(order_, std::move(inv), var_);
}

TruncSeries TruncSeries::operator/(const TruncSeries& divisor) const { return *this * divisor.reciprocal(); }

TruncSeries TruncSeries::compose(const TruncSeries& inner) const {
  if (!inner.coefficient(0).is_zero())
    throw PreconditionError("compose needs an inner series with zero constant term");
  int n = std::min(order_, inner.order_);
  TruncSeries inner_n = inner.truncated(n);
  // Horner: c_0 + inner * (c_1 + inner * (...)).
  TruncSeries acc = constant(coefficient(n), n, var_);
  for (int k = n - 1; k >= 0; --k) acc = acc * inner_n + constant(coefficient(k), n, var_);
  return acc;
}

TruncSeries TruncSeries::exp() const {
  if (!coeffs_[0].is_zero()) throw PreconditionError("exp needs a series with zero constant term");
  return exp_series(order_, var_).compose(*this);
}

TruncSeries TruncSeries::scale_variable(const LaurentScalar& s) const {
  std::vector<LaurentScalar> c;
  LaurentScalar power(1);
  for (const auto& x : coeffs_) {
    c.push_back(x * power);
    power *= s;
  }
  return TruncSeries(order_, std::move(c), var_);
}

TruncSeries TruncSeries::eval_y(const Rational& point) const {
  std::vector<LaurentScalar> c;
  for (const auto& x : coeffs_) c.emplace_back(x.eval(point));
  return TruncSeries(order_, std::move(c), var_);
}

bool TruncSeries::operator==(const TruncSeries& other) const {
  int n = std::min(order_, other.order_);
  for (int k = 0; k <= n; ++k)
    if (!(coefficient(k) == other.coefficient(k))) return false;
  return true;
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order_; ++k) {
    const auto& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool compound = c.terms().size() > 1;
    bool negative = !compound && cs[0] == '-';
    if (!first) {
      os << (negative ? " - " : " + ");
      if (negative) cs = cs.substr(1);
    }
    first = false;
    if (k == 0) {
      os << cs;
      continue;
    }
    if (compound) os << "(" << cs << ")*";
    else if (cs == "-1") os << "-";
    else if (cs != "1") os << cs << "*";
    os << var_;
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  os << " + O(" << var_ << "^" << order_ + 1 << ")";
  return os.str();
}

}  // namespace chiy
