#include <doctest.h>

#include "chiy/fgl.hpp"

using namespace chiy;

namespace {
const LaurentScalar y = LaurentScalar::y();
}

TEST_CASE("constructors") {
  CHECK(fgl_additive().to_string() == "u + v");
  CHECK(fgl_multiplicative().to_string() == "u + v - y*u*v");
  SymbolicCoeffRing c2(2);
  CHECK(fgl_universal(c2).to_string() == "u + v + a11*u*v");
  SymbolicCoeffRing c3(3);
  CHECK(c3.symbol(2, 1) == c3.symbol(1, 2));
  CHECK(c3.weight(c3.symbol(1, 2).terms().begin()->first) == 2);
  CHECK_THROWS_AS(SymbolicCoeffRing(1), PreconditionError);
}

TEST_CASE("axioms") {
  CHECK(fgl_axioms(fgl_additive(), 8).pass);
  CHECK(fgl_axioms(fgl_multiplicative(), 8).pass);
  CHECK(fgl_axioms(fgl_with_cross_term(-LaurentScalar::y(-1)), 8).pass);
  // u + v + uv^2 is not associative.
  RingPtr r = fgl_ring(6);
  auto u = MultiPoly::variable(r, 0), v = MultiPoly::variable(r, 1);
  LaurentFGL bad{u + v + u * u * v, 6};
  auto rep = fgl_axioms(bad, 6);
  CHECK_FALSE(rep.pass);
  CHECK(rep.left.find("commutativity: 0") == std::string::npos);

  // Universal law with only a11 switched on.
  SymbolicCoeffRing c3(3);
  RingPtr r3 = fgl_ring(3);
  using P = BasicMultiPoly<SymPoly>;
  SymbolicFGL only_a11{P::variable(r3, 0) + P::variable(r3, 1) + P::monomial(r3, {1, 1}, c3.symbol(1, 1)), 3};
  CHECK(fgl_residuals(only_a11, 3).back().is_zero());
  CHECK_THROWS_AS(fgl_axioms(fgl_additive(4), 6), PreconditionError);
}

TEST_CASE("formal inverse") {
  CHECK(fgl_inverse(fgl_additive(), 6).to_string() == "-u");
  CHECK(fgl_inverse(fgl_multiplicative(), 4).to_string() == "-u - y*u^2 - y^2*u^3 - y^3*u^4");
  for (const auto& f : {fgl_additive(7), fgl_multiplicative(7), fgl_with_cross_term(LaurentScalar(3), 7)}) {
    auto iota = fgl_inverse(f, 7);
    CHECK(iota.constant_term().is_zero());
    CHECK(compose_univariate(iota, iota) == MultiPoly::variable(iota.ring(), 0));
    CHECK(f.poly.substitute(std::vector<MultiPoly>{MultiPoly::variable(iota.ring(), 0), iota}).is_zero());
  }
  SymbolicCoeffRing c5(5);
  auto sym = fgl_universal(c5);
  auto iota = fgl_inverse(sym, 5);
  auto u = BasicMultiPoly<SymPoly>::variable(iota.ring(), 0);
  CHECK(sym.poly.substitute(std::vector<BasicMultiPoly<SymPoly>>{u, iota}).is_zero());
}

TEST_CASE("c1 of tensor products") {
  auto p1 = ChowPresentation::projective_product({1});
  auto h = p1.hyperplane(0);
  auto rep = c1_tensor_check(h, h, p1);
  CHECK(rep.pass);
  CHECK(rep.left == "2*y^-1*h");
  CHECK(c1_tensor_check(h, MultiPoly(), p1).pass);
  // L2 = L1^dual: c~1(O) = 0 and F(u, iota(u)) = 0.
  auto inv = c1_tensor_check(h, -h, p1);
  CHECK(inv.pass);
  CHECK(inv.left == "0");

  auto p2 = ChowPresentation::projective_product({2});
  auto H = p2.hyperplane(0);
  CHECK(c1_tensor_check(H, H, p2).pass);
  CHECK(c1_tensor_check(H.scaled(LaurentScalar(2)), -H, p2).pass);
  CHECK_FALSE(c1_tensor_check(H, H, p2, fgl_with_cross_term(-LaurentScalar::y(-1))).pass);
  CHECK_FALSE(c1_tensor_check(H, H, p2, fgl_additive()).pass);

  auto p11 = ChowPresentation::projective_product({1, 1});
  CHECK(c1_tensor_check(p11.hyperplane(0), p11.hyperplane(1), p11).pass);
  auto bundle = p1.with_split_bundle({p1.constant(LaurentScalar()), h});
  CHECK(c1_tensor_check(bundle.tautological(), h.extend_to(bundle.ring()), bundle).pass);
}

TEST_CASE("universal relations") {
  CHECK(universal_relations(SymbolicCoeffRing(2)).empty());
  CHECK(universal_relations(SymbolicCoeffRing(3)).empty());
  SymbolicCoeffRing c4(4);
  auto rels = universal_relations(c4);
  CHECK_FALSE(rels.empty());
  for (const auto& r : rels) {
    CHECK(c4.is_homogeneous(r));
    CHECK(c4.evaluate(r, {}).is_zero());
    CHECK(c4.evaluate(r, {{"a11", -y}}).is_zero());
  }
  CHECK(universal_relation_check(4).pass);
  CHECK(universal_relation_check(5).pass);
  // A non-law specialization violates some relation.
  bool some_fails = false;
  for (const auto& r : rels) some_fails |= !c4.evaluate(r, {{"a11", LaurentScalar(1)}, {"a22", LaurentScalar(1)}}).is_zero();
  CHECK(some_fails);
}
