#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chiy/laurent.hpp"

namespace chiy {

/// Exponent vector with trailing zeros trimmed, so the constant monomial is
/// the empty vector in every ring.
using Monomial = std::vector<int>;

/// Variables of a truncated polynomial ring: names, optional nilpotence
/// orders (x^k = 0, 0 means free) and an optional total degree cutoff.
struct PolyRing {
  std::vector<std::string> names;
  std::vector<int> nilpotence;
  int max_degree = -1;

  size_t size() const { return names.size(); }
  int index_of(const std::string& name) const;
  /// False for monomials that vanish identically in this ring.
  bool admits(const Monomial& m) const;
  /// Largest total degree a nonzero monomial can have.
  int degree_bound() const;
  bool operator==(const PolyRing& other) const = default;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> nilpotence = {}, int max_degree = -1);

inline int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

inline void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const LaurentScalar& c) { return c.is_zero(); }
inline std::string coeff_to_string(const Rational& c) { return to_string(c); }
inline std::string coeff_to_string(const LaurentScalar& c) { return c.to_string(); }

/// Sparse polynomial in the variables of a PolyRing with coefficients in C.
///
/// A polynomial without a ring is a constant; it combines with any ring, so
/// the empty polynomial is the additive zero of every grading.
template <class C>
class BasicMultiPoly {
 public:
  using Coeff = C;
  using TermMap = std::map<Monomial, C>;

  BasicMultiPoly() = default;
  BasicMultiPoly(const C& c) { add_term({}, c); }  // NOLINT(google-explicit-constructor)
  BasicMultiPoly(long c) : BasicMultiPoly(C(c)) {}  // NOLINT(google-explicit-constructor)
  BasicMultiPoly(int c) : BasicMultiPoly(C(c)) {}   // NOLINT(google-explicit-constructor)

  static BasicMultiPoly constant(RingPtr ring, const C& c) {
    BasicMultiPoly p;
    p.ring_ = std::move(ring);
    p.add_term({}, c);
    return p;
  }
  static BasicMultiPoly variable(RingPtr ring, size_t index, const C& coeff = C(1)) {
    if (index >= ring->size()) throw PreconditionError("variable index out of range");
    Monomial m(index + 1, 0);
    m[index] = 1;
    return monomial(std::move(ring), std::move(m), coeff);
  }
  static BasicMultiPoly variable(RingPtr ring, const std::string& name, const C& coeff = C(1)) {
    int idx = ring->index_of(name);
    if (idx < 0) throw PreconditionError("unknown variable '" + name + "'");
    return variable(std::move(ring), static_cast<size_t>(idx), coeff);
  }
  static BasicMultiPoly monomial(RingPtr ring, Monomial m, const C& coeff = C(1)) {
    BasicMultiPoly p;
    p.ring_ = std::move(ring);
    trim(m);
    p.add_term(m, coeff);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(Monomial m) const {
    trim(m);
    auto it = terms_.find(m);
    return it == terms_.end() ? C() : it->second;
  }
  C constant_term() const { return coefficient({}); }

  /// Largest total degree among the terms; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }
  /// Lowest total degree among the terms; -1 for zero.
  int low_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = d < 0 ? total_degree(m) : std::min(d, total_degree(m));
    return d;
  }
  BasicMultiPoly homogeneous_component(int k) const {
    BasicMultiPoly out;
    out.ring_ = ring_;
    for (const auto& [m, c] : terms_)
      if (total_degree(m) == k) out.terms_.emplace(m, c);
    return out;
  }

  BasicMultiPoly& operator+=(const BasicMultiPoly& other) {
    adopt_ring(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  BasicMultiPoly& operator-=(const BasicMultiPoly& other) {
    adopt_ring(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }
  BasicMultiPoly operator-() const {
    BasicMultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }
  friend BasicMultiPoly operator+(BasicMultiPoly a, const BasicMultiPoly& b) { return a += b; }
  friend BasicMultiPoly operator-(BasicMultiPoly a, const BasicMultiPoly& b) { return a -= b; }

  friend BasicMultiPoly operator*(const BasicMultiPoly& a, const BasicMultiPoly& b) {
    BasicMultiPoly out;
    out.ring_ = a.ring_;
    out.adopt_ring(b);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = monomial_product(ma, mb);
        if (out.ring_ && !out.ring_->admits(m)) continue;
        out.add_term(m, ca * cb);
      }
    }
    return out;
  }
  BasicMultiPoly& operator*=(const BasicMultiPoly& other) { return *this = *this * other; }

  /// Multiplies every coefficient by a scalar.
  BasicMultiPoly scaled(const C& s) const {
    BasicMultiPoly out;
    out.ring_ = ring_;
    for (const auto& [m, c] : terms_) out.add_term(m, c * s);
    return out;
  }

  BasicMultiPoly pow(unsigned exponent) const {
    BasicMultiPoly result = constant(ring_, C(1)), base = *this;
    while (exponent > 0) {
      if (exponent & 1U) result *= base;
      exponent >>= 1U;
      if (exponent > 0) base *= base;
    }
    return result;
  }

  /// Terms are compared, rings are not: a ring-less zero equals every zero.
  friend bool operator==(const BasicMultiPoly& a, const BasicMultiPoly& b) { return a.terms_ == b.terms_; }

  /// Replaces variable i by images[i] (all living in one target ring).
  template <class Images>
  BasicMultiPoly substitute(const Images& images) const {
    BasicMultiPoly out;
    for (const auto& img : images) out.adopt_ring(img);
    for (const auto& [m, c] : terms_) {
      BasicMultiPoly term = BasicMultiPoly(c);
      term.ring_ = out.ring_;
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (i >= images.size()) throw PreconditionError("substitution is missing an image");
        term *= images[i].pow(static_cast<unsigned>(m[i]));
      }
      out += term;
    }
    return out;
  }

  /// Same polynomial viewed in a ring whose variable names include ours.
  BasicMultiPoly extend_to(const RingPtr& target) const {
    BasicMultiPoly out;
    out.ring_ = target;
    std::vector<int> map;
    if (ring_) {
      for (const auto& name : ring_->names) {
        int idx = target->index_of(name);
        if (idx < 0) throw PreconditionError("variable '" + name + "' is absent from the target ring");
        map.push_back(idx);
      }
    }
    for (const auto& [m, c] : terms_) {
      Monomial t(target->size(), 0);
      for (size_t i = 0; i < m.size(); ++i) t[static_cast<size_t>(map[i])] = m[i];
      trim(t);
      if (target->admits(t)) out.add_term(t, c);
    }
    return out;
  }

  template <class F>
  auto map_coefficients(F&& f) const -> BasicMultiPoly<decltype(f(std::declval<const C&>()))> {
    using D = decltype(f(std::declval<const C&>()));
    BasicMultiPoly<D> out = BasicMultiPoly<D>::monomial(ring_, {}, D());
    for (const auto& [m, c] : terms_) out += BasicMultiPoly<D>::monomial(ring_, m, f(c));
    return out;
  }

  /// Renders terms by ascending total degree, e.g. "1 + (1/2 - 1/2*y)*h".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, const C*>> sorted;
    size_t width = ring_ ? ring_->size() : 0;
    for (const auto& [m, c] : terms_) {
      Monomial padded = m;
      padded.resize(std::max(width, m.size()), 0);
      sorted.emplace_back(std::move(padded), &c);
    }
    std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
      int dx = total_degree(x.first), dy = total_degree(y.first);
      if (dx != dy) return dx < dy;
      return x.first > y.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : sorted) {
      std::string cs = coeff_to_string(*c);
      bool compound = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
      bool negative = !compound && !cs.empty() && cs[0] == '-';
      if (!first) os << (negative ? " - " : " + ");
      if (!first && negative) cs = cs.substr(1);
      first = false;
      std::string mono = monomial_name(m);
      if (mono.empty()) {
        os << (compound ? "(" + cs + ")" : cs);
      } else if (cs == "1") {
        os << mono;
      } else if (cs == "-1") {
        os << "-" << mono;
      } else {
        os << (compound ? "(" + cs + ")" : cs) << "*" << mono;
      }
    }
    return os.str();
  }

 private:
  std::string monomial_name(const Monomial& m) const {
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += ring_ && i < ring_->size() ? ring_->names[i] : "x" + std::to_string(i);
      if (m[i] != 1) out += "^" + std::to_string(m[i]);
    }
    return out;
  }

  void adopt_ring(const BasicMultiPoly& other) {
    if (!other.ring_) return;
    if (!ring_) {
      ring_ = other.ring_;
      return;
    }
    if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
      throw PreconditionError("polynomials live in rings with different variable sets");
  }

  void add_term(const Monomial& m, const C& c) {
    if (coeff_is_zero(c)) return;
    if (!m.empty() && !ring_) throw PreconditionError("non-constant monomial without a ring");
    if (ring_ && !ring_->admits(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  template <class>
  friend class BasicMultiPoly;

  RingPtr ring_;
  TermMap terms_;
};

template <class C>
bool coeff_is_zero(const BasicMultiPoly<C>& c) {
  return c.is_zero();
}
template <class C>
std::string coeff_to_string(const BasicMultiPoly<C>& c) {
  return c.to_string();
}

/// Polynomials with coefficients in Q[y, 1/y]: Chern roots, hyperplane and
/// tautological classes all live here.
using MultiPoly = BasicMultiPoly<LaurentScalar>;

/// Sum of c_k p^k over the series coefficients; p must have zero constant term
/// and its ring must bound the degree.
class TruncSeries;
MultiPoly apply_series(const TruncSeries& series, const MultiPoly& p);

/// exp(p) truncated by the ring.
MultiPoly exp_of(const MultiPoly& p);

/// Coefficientwise substitution of a rational value for y.
MultiPoly eval_y(const MultiPoly& p, const Rational& point);

}  // namespace chiy
