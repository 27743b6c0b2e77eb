#include "chiy/chow.hpp"

#include <numeric>

namespace chiy {

namespace {

std::string stage_name(size_t k) { return k == 0 ? "xi" : "xi" + std::to_string(k + 1); }

}  // namespace

ChowPresentation ChowPresentation::point() { return projective_product({}); }

ChowPresentation ChowPresentation::projective_product(const std::vector<int>& dims) {
  auto data = std::make_shared<Data>();
  std::vector<std::string> names;
  std::vector<int> nil;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 0) throw PreconditionError("projective space of negative dimension");
    names.push_back(dims.size() == 1 ? "h" : "h" + std::to_string(i + 1));
    nil.push_back(dims[i] + 1);
  }
  data->factors = dims;
  data->dimension = std::accumulate(dims.begin(), dims.end(), 0);
  data->ring = make_ring(std::move(names), std::move(nil), data->dimension);
  data->level_rings = {data->ring};
  return ChowPresentation(std::move(data));
}

ChowPresentation ChowPresentation::with_split_bundle(const std::vector<MultiPoly>& roots) const {
  if (roots.empty()) throw PreconditionError("projective bundle of a rank-0 bundle");
  auto data = std::make_shared<Data>(*data_);
  const size_t k = data_->stages.size();
  std::vector<std::string> names = ring()->names;
  std::vector<int> nil = ring()->nilpotence;
  names.push_back(stage_name(k));
  nil.push_back(0);
  const int rank = static_cast<int>(roots.size());
  data->dimension = dimension() + rank - 1;
  data->ring = make_ring(std::move(names), std::move(nil), data->dimension);
  data->level_rings.push_back(data->ring);

  Stage stage;
  MultiPoly xi = MultiPoly::variable(data->ring, data->ring->size() - 1);
  MultiPoly product = MultiPoly::constant(data->ring, LaurentScalar(1));
  for (const auto& r : roots) {
    MultiPoly root = r.extend_to(ring());
    for (const auto& [m, c] : root.terms())
      if (total_degree(m) != 1) throw PreconditionError("bundle root " + r.to_string() + " is not of degree 1");
    stage.roots.push_back(root);
    product *= xi - root.extend_to(data->ring);
  }
  stage.tail = xi.pow(static_cast<unsigned>(rank)) - product;
  data->stages.push_back(std::move(stage));
  return ChowPresentation(std::move(data));
}

ChowPresentation ChowPresentation::base() const {
  if (!has_stage()) throw PreconditionError("presentation has no bundle stage");
  auto data = std::make_shared<Data>(*data_);
  data->stages.pop_back();
  data->level_rings.pop_back();
  data->ring = data->level_rings.back();
  data->dimension = dimension() - (static_cast<int>(data_->stages.back().roots.size()) - 1);
  return ChowPresentation(std::move(data));
}

MultiPoly ChowPresentation::hyperplane(size_t factor) const {
  if (factor >= factors().size()) throw PreconditionError("factor index out of range");
  return MultiPoly::variable(ring(), factor);
}

MultiPoly ChowPresentation::tautological(size_t stage) const {
  if (stage >= stages().size()) throw PreconditionError("stage index out of range");
  return MultiPoly::variable(ring(), factors().size() + stage);
}

MultiPoly ChowPresentation::reduce(const MultiPoly& p) const {
  MultiPoly cur = p.extend_to(ring());
  for (size_t k = stages().size(); k-- > 0;) {
    const size_t idx = factors().size() + k;
    const int rank = static_cast<int>(stages()[k].roots.size());
    const MultiPoly tail = stages()[k].tail.extend_to(ring());
    for (;;) {
      MultiPoly good = MultiPoly::constant(ring(), LaurentScalar());
      MultiPoly rewritten = MultiPoly::constant(ring(), LaurentScalar());
      bool changed = false;
      for (const auto& [m, c] : cur.terms()) {
        if (idx < m.size() && m[idx] >= rank) {
          Monomial rest = m;
          rest[idx] -= rank;
          rewritten += MultiPoly::monomial(ring(), rest, c) * tail;
          changed = true;
        } else {
          good += MultiPoly::monomial(ring(), m, c);
        }
      }
      if (!changed) break;
      cur = good + rewritten;
    }
  }
  return cur;
}

Monomial ChowPresentation::top_monomial() const {
  Monomial m = factors();
  for (const auto& s : stages()) m.push_back(static_cast<int>(s.roots.size()) - 1);
  trim(m);
  return m;
}

ChowElement::ChowElement(ChowPresentation pres, const MultiPoly& poly)
    : pres_(std::move(pres)), poly_(pres_.reduce(poly)) {}

void ChowElement::check_same(const ChowElement& other) const {
  if (!(pres_ == other.pres_)) throw PreconditionError("Chow elements from different presentations");
}

ChowElement ChowElement::operator+(const ChowElement& other) const {
  check_same(other);
  return {pres_, poly_ + other.poly_};
}

ChowElement ChowElement::operator-(const ChowElement& other) const {
  check_same(other);
  return {pres_, poly_ - other.poly_};
}

ChowElement ChowElement::operator*(const ChowElement& other) const {
  check_same(other);
  return {pres_, poly_ * other.poly_};
}

LaurentScalar integrate(const ChowElement& e) { return e.poly().coefficient(e.presentation().top_monomial()); }

ChowElement pb_pushforward(const ChowElement& e) {
  const auto& pres = e.presentation();
  ChowPresentation base = pres.base();
  const size_t idx = pres.ring()->size() - 1;
  const int rank = static_cast<int>(pres.stages().back().roots.size());
  MultiPoly out = base.constant(LaurentScalar());
  for (const auto& [m, c] : e.poly().terms()) {
    int e_xi = idx < m.size() ? m[idx] : 0;
    if (e_xi != rank - 1) continue;
    Monomial rest = m;
    if (idx < rest.size()) rest[idx] = 0;
    out += MultiPoly::monomial(base.ring(), rest, c);
  }
  return {base, out};
}

ChowElement pullback(const ChowElement& base_class, const ChowPresentation& total) {
  return {total, base_class.poly().extend_to(total.ring())};
}

BundleRoots tangent_data(const ChowPresentation& p) {
  BundleRoots t;
  const MultiPoly zero = p.constant(LaurentScalar());
  for (size_t i = 0; i < p.factors().size(); ++i) {
    for (int j = 0; j <= p.factors()[i]; ++j) t.plus.push_back(p.hyperplane(i));
    t.minus.push_back(zero);
  }
  for (size_t k = 0; k < p.stages().size(); ++k) {
    const MultiPoly xi = p.tautological(k);
    for (const auto& root : p.stages()[k].roots) t.plus.push_back(xi - root.extend_to(p.ring()));
    t.minus.push_back(zero);
  }
  return t;
}

ChowElement characteristic_class(const ChowPresentation& p, const GenusSpec& genus) {
  return {p, class_of_roots(tangent_data(p), genus)};
}

ChowElement hirzebruch_class(const ChowPresentation& p) { return characteristic_class(p, GenusSpec::hirzebruch_y()); }

GClassImage line_class_image(const ChowPresentation& p, const MultiPoly& root) {
  return {p, exp_of(root.extend_to(p.ring()))};
}

GClassImage fundamental_g_class(const ChowPresentation& p) {
  return {p, p.constant(LaurentScalar::y(p.dimension()))};
}

GClassImage lambda_cotangent_image(const ChowPresentation& p) {
  return {p, lambda_class(tangent_data(p).dual())};
}

TwistedClass TwistedClass::normalized() const {
  TwistedClass out = *this;
  const LaurentScalar q = LaurentScalar(1) + LaurentScalar::y();
  while (out.denominator_power > 0) {
    bool divisible = true;
    MultiPoly next = out.numerator.poly().map_coefficients([&](const LaurentScalar& c) {
      auto d = c.divide_exact(q);
      if (!d) {
        divisible = false;
        return LaurentScalar();
      }
      return *d;
    });
    if (!divisible) break;
    out.numerator = ChowElement(out.numerator.presentation(), next);
    --out.denominator_power;
  }
  return out;
}

ChowElement TwistedClass::to_element() const {
  TwistedClass n = normalized();
  if (n.denominator_power != 0)
    throw DomainError("class keeps a (1+y)^-" + std::to_string(n.denominator_power) + " denominator");
  return n.numerator;
}

bool TwistedClass::operator==(const TwistedClass& other) const {
  return numerator.scaled(one_plus_y_pow(other.denominator_power)) ==
         other.numerator.scaled(one_plus_y_pow(denominator_power));
}

TwistedClass todd_transform_twist(const GClassImage& g) {
  const auto& p = g.presentation();
  ChowElement product = g * characteristic_class(p, GenusSpec::todd());
  // Cohomological degree k is homological degree dim - k: scale by (1+y)^{k - dim}.
  MultiPoly numer = p.constant(LaurentScalar());
  for (const auto& [m, c] : product.poly().terms())
    numer += MultiPoly::monomial(p.ring(), m, c * one_plus_y_pow(static_cast<unsigned>(total_degree(m))));
  return TwistedClass{ChowElement(p, numer), static_cast<unsigned>(p.dimension())}.normalized();
}

LaurentScalar hypersurface_chi(int n, int d) {
  if (n < 1 || d < 1) throw PreconditionError("hypersurface needs n >= 1 and d >= 1");
  ChowPresentation p = ChowPresentation::projective_product({n});
  MultiPoly h = p.hyperplane(0);
  BundleRoots roots;
  for (int i = 0; i <= n; ++i) roots.plus.push_back(h);
  roots.minus.push_back(h.scaled(LaurentScalar(d)));
  ChowElement cls(p, class_of_roots(roots, GenusSpec::hirzebruch_y()) * h.scaled(LaurentScalar(d)));
  return integrate(cls);
}

}  // namespace chiy
