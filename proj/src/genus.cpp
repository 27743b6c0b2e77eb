#include "chiy/genus.hpp"

namespace chiy {

namespace {

const LaurentScalar kY = LaurentScalar::y();

void require_linear(const MultiPoly& root) {
  for (const auto& [m, c] : root.terms())
    if (total_degree(m) != 1) throw PreconditionError("Chern root " + root.to_string() + " is not of pure degree 1");
}

RingPtr ring_of(const BundleRoots& roots) {
  RingPtr ring;
  for (const auto* list : {&roots.plus, &roots.minus})
    for (const auto& r : *list) {
      if (!r.ring()) continue;
      if (ring && !(*ring == *r.ring())) throw PreconditionError("Chern roots live in different rings");
      ring = r.ring();
    }
  return ring;
}

int bound_of(const RingPtr& ring) { return ring ? ring->degree_bound() : 0; }

MultiPoly one_in(const RingPtr& ring) { return MultiPoly::constant(ring, LaurentScalar(1)); }

}  // namespace

GenusSpec GenusSpec::custom(TruncSeries series) {
  if (!(series.coefficient(0) == LaurentScalar(1)))
    throw PreconditionError("genus series must have constant term 1");
  GenusSpec g(Kind::custom);
  g.custom_ = std::move(series);
  return g;
}

TruncSeries todd_series(int order) {
  // (1 - e^{-t}) / t = sum_{k>=0} (-1)^k t^k / (k+1)!
  std::vector<LaurentScalar> c;
  Rational fact = 1;
  for (int k = 0; k <= order; ++k) {
    fact *= k + 1;
    c.emplace_back(Rational(k % 2 == 0 ? 1 : -1) / fact);
  }
  return TruncSeries(order, std::move(c)).reciprocal();
}

TruncSeries q_series(int order) {
  LaurentScalar one_plus_y = LaurentScalar(1) + kY;
  return todd_series(order).scale_variable(one_plus_y) - TruncSeries::variable(order) * kY;
}

namespace {

// a / tanh(a) = cosh(a) / (sinh(a) / a).
TruncSeries l_series(int order) {
  std::vector<LaurentScalar> cosh, sinh_over;
  Rational fact = 1;
  for (int k = 0; k <= order + 1; ++k) {
    if (k > 0) fact *= k;
    if (k <= order) cosh.emplace_back(k % 2 == 0 ? Rational(1) / fact : Rational(0));
    if (k >= 1 && k - 1 <= order) sinh_over.emplace_back(k % 2 == 1 ? Rational(1) / fact : Rational(0));
  }
  return TruncSeries(order, std::move(cosh)) / TruncSeries(order, std::move(sinh_over));
}

}  // namespace

TruncSeries GenusSpec::series(int order) const {
  switch (kind_) {
    case Kind::hirzebruch_y:
      return q_series(order);
    case Kind::chern:
      return TruncSeries(order, {LaurentScalar(1), LaurentScalar(1)});
    case Kind::todd:
      return todd_series(order);
    case Kind::l_class:
      return l_series(order);
    case Kind::custom:
      return custom_->truncated(order);
  }
  throw PreconditionError("unknown genus");
}

BundleRoots BundleRoots::operator+(const BundleRoots& other) const {
  BundleRoots out = *this;
  out.plus.insert(out.plus.end(), other.plus.begin(), other.plus.end());
  out.minus.insert(out.minus.end(), other.minus.begin(), other.minus.end());
  return out;
}

BundleRoots BundleRoots::dual() const {
  BundleRoots out;
  for (const auto& r : plus) out.plus.push_back(-r);
  for (const auto& r : minus) out.minus.push_back(-r);
  return out;
}

MultiPoly class_of_roots(const BundleRoots& roots, const GenusSpec& genus) {
  RingPtr ring = ring_of(roots);
  MultiPoly out = one_in(ring);
  if (roots.empty()) return out;
  TruncSeries f = genus.series(bound_of(ring));
  std::optional<TruncSeries> f_inv;
  for (const auto& r : roots.plus) {
    require_linear(r);
    out *= apply_series(f, r.extend_to(ring));
  }
  for (const auto& r : roots.minus) {
    require_linear(r);
    if (!f_inv) f_inv = f.reciprocal();
    out *= apply_series(*f_inv, r.extend_to(ring));
  }
  return out;
}

MultiPoly ch_twisted(const BundleRoots& roots) {
  RingPtr ring = ring_of(roots);
  MultiPoly out = MultiPoly::constant(ring, LaurentScalar());
  LaurentScalar scale = LaurentScalar(1) + kY;
  for (const auto& r : roots.plus) out += exp_of(r.extend_to(ring).scaled(scale));
  for (const auto& r : roots.minus) out -= exp_of(r.extend_to(ring).scaled(scale));
  return out;
}

MultiPoly chern_character(const BundleRoots& roots) {
  RingPtr ring = ring_of(roots);
  MultiPoly out = MultiPoly::constant(ring, LaurentScalar());
  for (const auto& r : roots.plus) out += exp_of(r.extend_to(ring));
  for (const auto& r : roots.minus) out -= exp_of(r.extend_to(ring));
  return out;
}

MultiPoly lambda_class(const BundleRoots& roots) {
  RingPtr ring = ring_of(roots);
  const int bound = bound_of(ring);
  const MultiPoly one = one_in(ring);
  const MultiPoly y = MultiPoly::constant(ring, kY);
  MultiPoly numer = one;
  for (const auto& r : roots.plus) numer *= one + y * exp_of(r.extend_to(ring));
  // 1/(1 + y e^x) = (1+y)^{-1} sum_k (-y z / (1+y))^k with z = e^x - 1 nilpotent.
  unsigned denom_power = 0;
  for (const auto& r : roots.minus) {
    if (r.is_zero()) {
      ++denom_power;
      continue;
    }
    MultiPoly z = exp_of(r.extend_to(ring)) - one;
    MultiPoly sum = MultiPoly::constant(ring, LaurentScalar());
    MultiPoly power = one;
    for (int k = 0; k <= bound; ++k) {
      sum += power.scaled(one_plus_y_pow(static_cast<unsigned>(bound - k)));
      power *= (-y) * z;
    }
    numer *= sum;
    denom_power += static_cast<unsigned>(bound) + 1;
  }
  if (denom_power == 0) return numer;
  const LaurentScalar denom = one_plus_y_pow(denom_power);
  return numer.map_coefficients([&](const LaurentScalar& c) {
    auto q = c.divide_exact(denom);
    if (!q) throw DomainError("lambda class of this virtual bundle is not Laurent in y");
    return *q;
  });
}

MultiPoly gamma_class(const BundleRoots& roots) {
  if (roots.rank() != 0)
    throw PreconditionError("gamma class needs a rank-0 virtual bundle (pass E - rk E), got rank " +
                            std::to_string(roots.rank()));
  RingPtr ring = ring_of(roots);
  const int bound = bound_of(ring);
  const MultiPoly one = one_in(ring);
  const MultiPoly y = MultiPoly::constant(ring, kY);
  MultiPoly out = one;
  for (const auto& r : roots.plus) out *= one + y * (exp_of(r.extend_to(ring)) - one);
  for (const auto& r : roots.minus) {
    if (r.is_zero()) continue;
    MultiPoly yz = y * (exp_of(r.extend_to(ring)) - one);
    MultiPoly sum = one, power = one;
    for (int k = 1; k <= bound; ++k) {
      power *= -yz;
      sum += power;
    }
    out *= sum;
  }
  return out;
}

MultiPoly lambda_gamma(const BundleRoots& roots, LambdaGamma which) {
  return which == LambdaGamma::lambda ? lambda_class(roots) : gamma_class(roots);
}

std::vector<MultiPoly> y_components(const MultiPoly& total, int max) {
  std::vector<MultiPoly> out;
  for (int i = 0; i <= max; ++i)
    out.push_back(total.map_coefficients([i](const LaurentScalar& c) { return LaurentScalar(c.coefficient(i)); }));
  return out;
}

std::vector<LaurentScalar> tilde_lambda_coeffs(int d) {
  if (d < 0) throw PreconditionError("dimension must be non-negative");
  std::vector<LaurentScalar> w;
  for (int j = 0; j <= d; ++j) {
    LaurentScalar wj;
    for (int i = j; i <= d; ++i)
      wj += LaurentScalar::monomial(i + j - d, Rational(binomial(d - j, d - i)) * (j % 2 == 0 ? 1 : -1));
    w.push_back(wj);
  }
  return w;
}

}  // namespace chiy
