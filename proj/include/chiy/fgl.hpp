#pragma once

#include <map>
#include <string>
#include <vector>

#include "chiy/chow.hpp"
#include "chiy/report.hpp"

namespace chiy {

/// Polynomials over Q in the symbols a_ij (i <= j), deg a_ij = i + j - 1.
using SymPoly = BasicMultiPoly<Rational>;

/// The coefficient ring Q[a_ij : i <= j, i + j <= degree].
struct SymbolicCoeffRing {
  explicit SymbolicCoeffRing(int degree);

  /// a_ij with the indices put in canonical order.
  SymPoly symbol(int i, int j) const;
  /// Grading of a monomial in the symbols.
  int weight(const Monomial& m) const;
  /// Every monomial of p has the same weight.
  bool is_homogeneous(const SymPoly& p) const;
  /// Evaluate with a_ij -> values["aij"], missing symbols mapped to 0.
  LaurentScalar evaluate(const SymPoly& p, const std::map<std::string, LaurentScalar>& values) const;

  int degree;
  RingPtr ring;
  std::vector<std::pair<int, int>> indices;  // by variable position
};

/// F(u, v) truncated at total degree `degree`.
template <class C>
struct FGLaw {
  BasicMultiPoly<C> poly;  // in the ring {u, v}
  int degree = 0;

  std::string to_string() const { return poly.to_string(); }
};

using LaurentFGL = FGLaw<LaurentScalar>;
using SymbolicFGL = FGLaw<SymPoly>;

RingPtr fgl_ring(int degree, int variables = 2);

LaurentFGL fgl_additive(int degree = 8);
/// u + v - y uv.
LaurentFGL fgl_multiplicative(int degree = 8);
/// Any law u + v + c uv; the printed -1/y normalization is c = -y^{-1}.
LaurentFGL fgl_with_cross_term(const LaurentScalar& c, int degree = 8);
/// u + v + sum a_ij u^i v^j over 2 <= i + j <= degree.
SymbolicFGL fgl_universal(const SymbolicCoeffRing& coeffs);

/// Residuals F(u,0) - u, F(0,v) - v, F(u,v) - F(v,u), F(F(u,v),w) - F(u,F(v,w))
/// modulo total degree > degree.
template <class C>
std::vector<BasicMultiPoly<C>> fgl_residuals(const FGLaw<C>& f, int degree) {
  RingPtr r3 = fgl_ring(degree, 3);
  using P = BasicMultiPoly<C>;
  P u = P::variable(r3, 0), v = P::variable(r3, 1), w = P::variable(r3, 2);
  P zero = P::constant(r3, C());
  auto apply = [&](const P& a, const P& b) { return f.poly.substitute(std::vector<P>{a, b}); };
  return {apply(u, zero) - u, apply(zero, v) - v, apply(u, v) - apply(v, u),
          apply(apply(u, v), w) - apply(u, apply(v, w))};
}

template <class C>
VerifyReport fgl_axioms(const FGLaw<C>& f, int degree) {
  if (degree > f.degree) throw PreconditionError("check degree exceeds the truncation of the law");
  VerifyReport r{"fgl-axioms", {{"law", f.to_string()}, {"D", std::to_string(degree)}}, "", "", true};
  const char* names[] = {"unit-u", "unit-v", "commutativity", "associativity"};
  auto res = fgl_residuals(f, degree);
  for (size_t i = 0; i < res.size(); ++i) {
    if (i > 0) {
      r.left += " ; ";
      r.right += " ; ";
    }
    r.left += std::string(names[i]) + ": " + res[i].to_string();
    r.right += std::string(names[i]) + ": 0";
    if (!res[i].is_zero()) r.pass = false;
  }
  return r;
}

/// The formal inverse iota(u) in the ring {u} with F(u, iota(u)) = 0 modulo
/// degree > degree.
template <class C>
BasicMultiPoly<C> fgl_inverse(const FGLaw<C>& f, int degree) {
  using P = BasicMultiPoly<C>;
  RingPtr r1 = make_ring({"u"}, {}, degree);
  P u = P::variable(r1, 0);
  P iota = -u;
  // F(u, iota) = iota + u + (higher terms); fix one coefficient per step.
  for (int k = 2; k <= degree; ++k) {
    P value = f.poly.substitute(std::vector<P>{u, iota});
    C c = value.coefficient({k});
    iota -= P::monomial(r1, {k}, c);
  }
  return iota;
}

/// Compose a univariate series in {u} with itself.
template <class C>
BasicMultiPoly<C> compose_univariate(const BasicMultiPoly<C>& outer, const BasicMultiPoly<C>& inner) {
  return outer.substitute(std::vector<BasicMultiPoly<C>>{inner});
}

/// c~_1(L) = (1 - ch L*) y^{-1} on the model ring, for a root x = c_1(L).
MultiPoly c1_tilde(const ChowPresentation& model, const MultiPoly& root);

/// c~_1(L1 (x) L2) against F(c~_1(L1), c~_1(L2)) in the ch-image of the model.
VerifyReport c1_tensor_check(const MultiPoly& root1, const MultiPoly& root2, const ChowPresentation& model,
                             const LaurentFGL& law = fgl_multiplicative());

/// Distinct nonzero coefficients of the associativity residual of the universal law.
std::vector<SymPoly> universal_relations(const SymbolicCoeffRing& coeffs);

/// Every relation vanishes under the additive and multiplicative substitutions
/// and is homogeneous; reports list the count of relations failing each test.
VerifyReport universal_relation_check(int degree);

}  // namespace chiy
