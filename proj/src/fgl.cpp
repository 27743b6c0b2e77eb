#include "chiy/fgl.hpp"

#include <algorithm>

namespace chiy {

SymbolicCoeffRing::SymbolicCoeffRing(int d) : degree(d) {
  if (d < 2) throw PreconditionError("universal law needs degree >= 2");
  std::vector<std::string> names;
  for (int i = 1; 2 * i <= d; ++i)
    for (int j = i; i + j <= d; ++j) {
      names.push_back(j < 10 ? "a" + std::to_string(i) + std::to_string(j)
                             : "a" + std::to_string(i) + "_" + std::to_string(j));
      indices.emplace_back(i, j);
    }
  ring = make_ring(std::move(names));
}

SymPoly SymbolicCoeffRing::symbol(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::find(indices.begin(), indices.end(), std::make_pair(i, j));
  if (it == indices.end()) throw PreconditionError("symbol out of range");
  return SymPoly::variable(ring, static_cast<size_t>(it - indices.begin()));
}

int SymbolicCoeffRing::weight(const Monomial& m) const {
  int w = 0;
  for (size_t k = 0; k < m.size(); ++k) w += m[k] * (indices[k].first + indices[k].second - 1);
  return w;
}

bool SymbolicCoeffRing::is_homogeneous(const SymPoly& p) const {
  int w = -1;
  for (const auto& [m, c] : p.terms()) {
    int mw = weight(m);
    if (w >= 0 && mw != w) return false;
    w = mw;
  }
  return true;
}

LaurentScalar SymbolicCoeffRing::evaluate(const SymPoly& p, const std::map<std::string, LaurentScalar>& values) const {
  LaurentScalar out;
  for (const auto& [m, c] : p.terms()) {
    LaurentScalar term{c};
    for (size_t k = 0; k < m.size() && !term.is_zero(); ++k) {
      if (m[k] == 0) continue;
      auto it = values.find(ring->names[k]);
      term = it == values.end() ? LaurentScalar() : term * it->second.pow(static_cast<unsigned>(m[k]));
    }
    out += term;
  }
  return out;
}

RingPtr fgl_ring(int degree, int variables) {
  static const char* names[] = {"u", "v", "w"};
  return make_ring(std::vector<std::string>(names, names + variables), {}, degree);
}

LaurentFGL fgl_with_cross_term(const LaurentScalar& c, int degree) {
  RingPtr r = fgl_ring(degree);
  auto u = MultiPoly::variable(r, 0), v = MultiPoly::variable(r, 1);
  return {u + v + (u * v).scaled(c), degree};
}

LaurentFGL fgl_additive(int degree) { return fgl_with_cross_term(LaurentScalar(), degree); }

LaurentFGL fgl_multiplicative(int degree) { return fgl_with_cross_term(-LaurentScalar::y(), degree); }

SymbolicFGL fgl_universal(const SymbolicCoeffRing& coeffs) {
  using P = BasicMultiPoly<SymPoly>;
  RingPtr r = fgl_ring(coeffs.degree);
  P f = P::variable(r, 0) + P::variable(r, 1);
  for (int i = 1; i < coeffs.degree; ++i)
    for (int j = 1; i + j <= coeffs.degree; ++j) f += P::monomial(r, {i, j}, coeffs.symbol(i, j));
  return {f, coeffs.degree};
}

MultiPoly c1_tilde(const ChowPresentation& model, const MultiPoly& root) {
  MultiPoly x = root.extend_to(model.ring());
  return model.reduce((model.constant(1) - exp_of(-x)).scaled(LaurentScalar::y(-1)));
}

VerifyReport c1_tensor_check(const MultiPoly& root1, const MultiPoly& root2, const ChowPresentation& model,
                             const LaurentFGL& law) {
  ChowElement lhs(model, c1_tilde(model, root1 + root2));
  ChowElement rhs(model, law.poly.substitute(std::vector<MultiPoly>{c1_tilde(model, root1), c1_tilde(model, root2)}));
  return make_report("c1-tensor",
                     {{"L1", root1.to_string()}, {"L2", root2.to_string()}, {"law", law.to_string()}}, lhs, rhs);
}

std::vector<SymPoly> universal_relations(const SymbolicCoeffRing& coeffs) {
  auto assoc = fgl_residuals(fgl_universal(coeffs), coeffs.degree).back();
  std::vector<SymPoly> out;
  for (const auto& [m, c] : assoc.terms()) {
    if (std::find(out.begin(), out.end(), c) == out.end() && std::find(out.begin(), out.end(), -c) == out.end())
      out.push_back(c);
  }
  return out;
}

VerifyReport universal_relation_check(int degree) {
  SymbolicCoeffRing coeffs(degree);
  auto rels = universal_relations(coeffs);
  std::map<std::string, LaurentScalar> multiplicative{{"a11", -LaurentScalar::y()}};
  int additive_bad = 0, multiplicative_bad = 0, inhomogeneous = 0;
  for (const auto& r : rels) {
    if (!coeffs.evaluate(r, {}).is_zero()) ++additive_bad;
    if (!coeffs.evaluate(r, multiplicative).is_zero()) ++multiplicative_bad;
    if (!coeffs.is_homogeneous(r)) ++inhomogeneous;
  }
  auto tally = [](int a, int m, int h) {
    return "additive " + std::to_string(a) + ", multiplicative " + std::to_string(m) + ", inhomogeneous " +
           std::to_string(h);
  };
  return VerifyReport{"fgl-universal",
                      {{"D", std::to_string(degree)}, {"relations", std::to_string(rels.size())}},
                      tally(additive_bad, multiplicative_bad, inhomogeneous),
                      tally(0, 0, 0),
                      additive_bad == 0 && multiplicative_bad == 0 && inhomogeneous == 0};
}

}  // namespace chiy
