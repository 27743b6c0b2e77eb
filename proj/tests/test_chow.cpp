#include <doctest.h>

#include <random>

#include "chiy/chow.hpp"

using namespace chiy;

namespace {

const LaurentScalar y = LaurentScalar::y();
const LaurentScalar one(1);

LaurentScalar chi_proj(int n) {
  LaurentScalar out;
  for (int i = 0; i <= n; ++i) out += (-y).pow(static_cast<unsigned>(i));
  return out;
}

ChowElement random_element(std::mt19937& rng, const ChowPresentation& p) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 2);
  MultiPoly poly = p.constant(LaurentScalar());
  for (int t = 0; t < 6; ++t) {
    Monomial m;
    for (size_t v = 0; v < p.ring()->size(); ++v) m.push_back(e(rng));
    poly += MultiPoly::monomial(p.ring(), m, LaurentScalar(c(rng)) + y * LaurentScalar(c(rng)));
  }
  return {p, poly};
}

// P(O + O(1)) over P^1, and a two-stage tower over P^1 x P^1.
ChowPresentation hirzebruch_surface() {
  auto base = ChowPresentation::projective_product({1});
  auto h = base.hyperplane(0);
  return base.with_split_bundle({base.constant(LaurentScalar()), h});
}

}  // namespace

TEST_CASE("integration reads the top coefficient") {
  auto p2 = ChowPresentation::projective_product({2});
  auto h = p2.hyperplane(0);
  CHECK(integrate({p2, h * h}) == one);
  CHECK(integrate({p2, h}).is_zero());
  CHECK(integrate({p2, (MultiPoly(1) + h).pow(3)}) == LaurentScalar(3));

  auto p11 = ChowPresentation::projective_product({1, 1});
  CHECK(integrate({p11, p11.hyperplane(0) * p11.hyperplane(1)}) == one);
  CHECK(integrate({p11, p11.hyperplane(0) * p11.hyperplane(0)}).is_zero());
  CHECK(integrate(ChowElement::one(ChowPresentation::point())) == one);
}

TEST_CASE("projective bundle pushforward") {
  auto pt = ChowPresentation::point();
  auto line = pt.with_split_bundle({pt.constant(LaurentScalar()), pt.constant(LaurentScalar())});
  CHECK(line.dimension() == 1);
  auto xi = line.tautological();
  CHECK(pb_pushforward({line, xi}) == ChowElement::one(pt));
  CHECK(pb_pushforward(ChowElement::one(line)).poly().is_zero());

  auto f = hirzebruch_surface();
  auto base = f.base();
  auto xf = f.tautological();
  auto hf = f.hyperplane(0);
  ChowElement xi2(f, xf * xf);
  CHECK(xi2 == ChowElement(f, hf * xf));  // xi^2 = h xi
  CHECK(pb_pushforward(xi2) == ChowElement(base, base.hyperplane(0)));
  CHECK(integrate({f, xf * hf}) == one);

  SUBCASE("xi^{r-1} pushes to 1 for every rank") {
    auto p1 = ChowPresentation::projective_product({1});
    for (int r = 1; r <= 4; ++r) {
      std::vector<MultiPoly> roots;
      for (int j = 0; j < r; ++j) roots.push_back(p1.hyperplane(0).scaled(LaurentScalar(j)));
      auto e = p1.with_split_bundle(roots);
      CHECK(pb_pushforward({e, e.tautological().pow(static_cast<unsigned>(r - 1))}) == ChowElement::one(p1));
    }
  }
}

TEST_CASE("pushforward is linear, functorial and satisfies the projection formula") {
  std::mt19937 rng(23);
  auto p = ChowPresentation::projective_product({1, 2});
  auto h1 = p.hyperplane(0), h2 = p.hyperplane(1);
  auto e = p.with_split_bundle({h1, h2, h1 + h2});
  auto base = e.base();
  for (int t = 0; t < 25; ++t) {
    auto a = random_element(rng, e), b = random_element(rng, e);
    auto c = random_element(rng, base);
    CHECK(pb_pushforward(a + b) == pb_pushforward(a) + pb_pushforward(b));
    CHECK(integrate(pb_pushforward(a)) == integrate(a));
    CHECK(pb_pushforward(a * pullback(c, e)) == pb_pushforward(a) * c);
  }
}

TEST_CASE("tangent data") {
  auto p2 = ChowPresentation::projective_product({2});
  auto t = tangent_data(p2);
  CHECK(t.plus.size() == 3);
  CHECK(t.minus.size() == 1);
  CHECK(t.minus[0].is_zero());
  for (const auto& r : t.plus) CHECK(r == p2.hyperplane(0));
  CHECK(t.rank() == 2);

  auto p11 = ChowPresentation::projective_product({1, 1});
  auto t11 = tangent_data(p11);
  CHECK(t11.plus.size() == 4);
  CHECK(t11.minus.size() == 2);
  CHECK(t11.plus[0] == p11.hyperplane(0));
  CHECK(t11.plus[3] == p11.hyperplane(1));

  CHECK(tangent_data(ChowPresentation::point()).empty());
}

TEST_CASE("Hirzebruch class integrates to chi_y") {
  CHECK(integrate(hirzebruch_class(ChowPresentation::projective_product({1}))) == one - y);
  CHECK(integrate(hirzebruch_class(ChowPresentation::projective_product({2}))) == one - y + y * y);
  CHECK(integrate(hirzebruch_class(ChowPresentation::point())) == one);
  for (int n = 0; n <= 6; ++n) {
    auto p = ChowPresentation::projective_product({n});
    auto chi = integrate(hirzebruch_class(p));
    CHECK(chi == chi_proj(n));
    CHECK(chi.high() <= p.dimension());
  }
  auto chi = integrate(hirzebruch_class(ChowPresentation::projective_product({2, 3})));
  CHECK(chi == chi_proj(2) * chi_proj(3));
}

TEST_CASE("chi_y is multiplicative over split projective bundles") {
  // Fails for the relative tangent model xi + x_j, which is why xi - x_j is used.
  auto check = [](const ChowPresentation& base, const std::vector<MultiPoly>& roots) {
    auto total = base.with_split_bundle(roots);
    auto chi_total = integrate(hirzebruch_class(total));
    auto chi_base = integrate(hirzebruch_class(base));
    CHECK(chi_total == chi_base * chi_proj(static_cast<int>(roots.size()) - 1));
    CHECK(chi_total.high() <= total.dimension());
  };
  auto p1 = ChowPresentation::projective_product({1});
  auto h = p1.hyperplane(0);
  auto zero = p1.constant(LaurentScalar());
  check(p1, {zero, h});
  check(p1, {zero, h.scaled(LaurentScalar(3))});
  check(p1, {h, -h, h.scaled(LaurentScalar(2))});
  auto p2 = ChowPresentation::projective_product({2});
  check(p2, {p2.hyperplane(0), p2.constant(LaurentScalar()), p2.hyperplane(0).scaled(LaurentScalar(-2))});
  auto p11 = ChowPresentation::projective_product({1, 1});
  check(p11, {p11.hyperplane(0), p11.hyperplane(1)});

  // Two stages: P(O + O(xi)) over the Hirzebruch surface.
  auto f = hirzebruch_surface();
  check(f, {f.constant(LaurentScalar()), f.tautological()});

  SUBCASE("the opposite sign convention breaks multiplicativity") {
    auto total = p1.with_split_bundle({zero, h});
    BundleRoots wrong = tangent_data(total);
    wrong.plus.back() = total.tautological() + h.extend_to(total.ring());
    auto todd = integrate(ChowElement(total, class_of_roots(wrong, GenusSpec::todd())));
    CHECK_FALSE(todd == one);
  }
}

TEST_CASE("twisted Todd transform") {
  auto pt = ChowPresentation::point();
  CHECK(todd_transform_twist(ChowElement::one(pt)).to_element() == ChowElement::one(pt));

  for (int n = 1; n <= 3; ++n) {
    auto p = ChowPresentation::projective_product({n});
    auto lam = lambda_cotangent_image(p);
    CHECK(todd_transform_twist(lam).to_element() == hirzebruch_class(p));
  }

  SUBCASE("linearity over Laurent combinations") {
    auto p = ChowPresentation::projective_product({2});
    auto a = lambda_cotangent_image(p);
    auto b = line_class_image(p, p.hyperplane(0));
    auto c1 = one + y * y, c2 = LaurentScalar::y(-1);
    auto lhs = todd_transform_twist(a.scaled(c1) + b.scaled(c2));
    auto ta = todd_transform_twist(a), tb = todd_transform_twist(b);
    TwistedClass rhs{ta.numerator.scaled(c1 * one_plus_y_pow(tb.denominator_power)) +
                         tb.numerator.scaled(c2 * one_plus_y_pow(ta.denominator_power)),
                     ta.denominator_power + tb.denominator_power};
    CHECK(lhs == rhs);
  }

  SUBCASE("structure sheaf alone keeps a denominator on P^1") {
    auto p = ChowPresentation::projective_product({1});
    CHECK_THROWS_AS(todd_transform_twist(ChowElement::one(p)).to_element(), DomainError);
  }
}

TEST_CASE("hypersurfaces by adjunction") {
  CHECK(hypersurface_chi(2, 1) == one - y);
  CHECK(hypersurface_chi(2, 3).is_zero());
  CHECK(hypersurface_chi(3, 2) == (one - y) * (one - y));
  CHECK(hypersurface_chi(3, 1) == chi_proj(2));
  // Cubic surface: P^2 blown up in six points, h^{1,1} = 7.
  CHECK(hypersurface_chi(3, 3) == one - LaurentScalar(7) * y + y * y);
  // Quartic K3: h^{1,1} = 20, h^{2,0} = 1.
  CHECK(hypersurface_chi(3, 4) == LaurentScalar(2) - LaurentScalar(20) * y + LaurentScalar(2) * y * y);
  // Plane curves of degree d have genus (d-1)(d-2)/2: chi_y = (1 - g)(1 - y).
  for (int d = 1; d <= 6; ++d) {
    long g = (d - 1) * (d - 2) / 2;
    CHECK(hypersurface_chi(2, d) == LaurentScalar(1 - g) * (one - y));
  }
  CHECK_THROWS_AS(hypersurface_chi(0, 1), PreconditionError);
}

TEST_CASE("G-class images") {
  auto p1 = ChowPresentation::projective_product({1});
  auto h = p1.hyperplane(0);
  CHECK(line_class_image(p1, h) == ChowElement(p1, MultiPoly(1) + h));
  CHECK(line_class_image(p1, -h) == ChowElement(p1, MultiPoly(1) - h));
  CHECK(fundamental_g_class(ChowPresentation::projective_product({2})).poly() == MultiPoly(y * y));
}
