#include "chiy/multipoly.hpp"

#include "chiy/series.hpp"

namespace chiy {

int PolyRing::index_of(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

bool PolyRing::admits(const Monomial& m) const {
  if (m.size() > names.size()) return false;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) return false;
    if (i < nilpotence.size() && nilpotence[i] > 0 && m[i] >= nilpotence[i]) return false;
  }
  return max_degree < 0 || total_degree(m) <= max_degree;
}

int PolyRing::degree_bound() const {
  if (max_degree >= 0) return max_degree;
  int bound = 0;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i >= nilpotence.size() || nilpotence[i] <= 0)
      throw PreconditionError("ring has no degree bound (variable '" + names[i] + "' is free)");
    bound += nilpotence[i] - 1;
  }
  return bound;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> nilpotence, int max_degree) {
  if (nilpotence.size() > names.size()) throw PreconditionError("more nilpotence orders than variables");
  nilpotence.resize(names.size(), 0);
  return std::make_shared<const PolyRing>(PolyRing{std::move(names), std::move(nilpotence), max_degree});
}

MultiPoly apply_series(const TruncSeries& series, const MultiPoly& p) {
  if (!p.constant_term().is_zero()) throw PreconditionError("series argument must have zero constant term");
  if (p.is_zero()) return MultiPoly::constant(p.ring(), series.coefficient(0));
  int bound = p.ring()->degree_bound();
  int needed = (bound + p.low_degree() - 1) / p.low_degree();
  if (series.order() < needed)
    throw PreconditionError("series order " + std::to_string(series.order()) + " is below the " +
                            std::to_string(needed) + " terms the ring can see");
  MultiPoly acc = MultiPoly::constant(p.ring(), series.coefficient(needed));
  for (int k = needed - 1; k >= 0; --k) acc = acc * p + MultiPoly::constant(p.ring(), series.coefficient(k));
  return acc;
}

MultiPoly exp_of(const MultiPoly& p) {
  if (p.is_zero()) return MultiPoly::constant(p.ring(), LaurentScalar(1));
  return apply_series(TruncSeries::exp_series(p.ring()->degree_bound()), p);
}

MultiPoly eval_y(const MultiPoly& p, const Rational& point) {
  return p.map_coefficients([&](const LaurentScalar& c) { return LaurentScalar(c.eval(point)); });
}

}  // namespace chiy
