#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chiy/laurent.hpp"
#include "chiy/report.hpp"

namespace chiy {

/// Integer polynomial in u, v; exponents may go negative along uv after
/// localizing at the Lefschetz class.
class HodgePolynomial {
 public:
  using Exponent = std::pair<int, int>;

  HodgePolynomial() = default;
  HodgePolynomial(long c);  // NOLINT(google-explicit-constructor)
  static HodgePolynomial monomial(int p, int q, const BigInt& c = 1);
  /// (uv)^k.
  static HodgePolynomial uv_power(int k) { return monomial(k, k); }
  /// 1 + uv + ... + (uv)^n; zero for n < 0.
  static HodgePolynomial projective(int n);

  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  BigInt coefficient(int p, int q) const;
  bool is_zero() const { return terms_.empty(); }

  HodgePolynomial& operator+=(const HodgePolynomial& other);
  HodgePolynomial& operator-=(const HodgePolynomial& other);
  HodgePolynomial operator-() const;
  friend HodgePolynomial operator+(HodgePolynomial a, const HodgePolynomial& b) { return a += b; }
  friend HodgePolynomial operator-(HodgePolynomial a, const HodgePolynomial& b) { return a -= b; }
  friend HodgePolynomial operator*(const HodgePolynomial& a, const HodgePolynomial& b);
  bool operator==(const HodgePolynomial& other) const = default;

  /// Invariant under u <-> v.
  bool is_symmetric() const;
  /// Largest p + q; INT_MIN for zero.
  int total_degree() const;
  /// The sign-free E-polynomial: coefficient of u^p v^q times (-1)^{p+q}.
  HodgePolynomial e_polynomial() const;

  /// "1 + u + v + u*v": ascending total degree, then descending u-degree.
  std::string to_string() const;

 private:
  void add(const Exponent& e, const BigInt& c);
  std::map<Exponent, BigInt> terms_;
};

enum class Specialization { chi_y, weight, euler };

/// (u,v) = (y,-1) for chi_y, (w,w) for the weight polynomial, (-1,-1) for euler.
/// Euler values come back as a constant LaurentScalar.
LaurentScalar specialize(const HodgePolynomial& h, Specialization target);

class UnknownDeclarationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Named generators with user supplied Hodge data.
class DeclRegistry {
 public:
  struct Entry {
    int dim = 0;
    HodgePolynomial hc;
  };

  /// Empty registry.
  DeclRegistry() = default;
  /// Registry preloaded with "elliptic": dim 1, Hc = (1+u)(1+v).
  static DeclRegistry with_builtins();

  /// Validates symmetry and deg <= 2 dim. Invalid data is a RegistryError
  /// unless allow_invalid is set, in which case a warning is recorded.
  void add(const std::string& name, int dim, const HodgePolynomial& hc, bool allow_invalid = false);
  /// JSON list of {"name", "dim", "hc": [[p, q, coeff], ...]}.
  void load_json_text(const std::string& text, bool allow_invalid = false);
  void load_json_file(const std::string& path, bool allow_invalid = false);

  bool contains(const std::string& name) const { return entries_.count(name) > 0; }
  const Entry& at(const std::string& name) const;
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::map<std::string, Entry> entries_;
  std::vector<std::string> warnings_;
};

/// Expression tree for a class in K_0(var/pt). Nodes are immutable and shared.
class VarietyExpr {
 public:
  enum class Kind { pt, affine, proj, torus, lefschetz, declared, sum, diff, prod, proj_bundle, blow_up };

  static VarietyExpr pt();
  static VarietyExpr affine(int n);
  static VarietyExpr proj(int n);
  static VarietyExpr torus();
  static VarietyExpr lefschetz(int k = 1);
  /// Looks the dimension up in the registry; UnknownDeclarationError if absent.
  static VarietyExpr declared(const std::string& name, const DeclRegistry& reg);
  static VarietyExpr sum(const VarietyExpr& a, const VarietyExpr& b);
  static VarietyExpr diff(const VarietyExpr& a, const VarietyExpr& b);
  static VarietyExpr prod(const VarietyExpr& a, const VarietyExpr& b);
  static VarietyExpr proj_bundle(const VarietyExpr& base, int fiber_dim);
  static VarietyExpr blow_up(const VarietyExpr& base, const VarietyExpr& center, int codim);

  Kind kind() const { return node_->kind; }
  /// Virtual dimension.
  int dimension() const { return node_->dim; }
  /// n for A(n)/P(n), k for L^k, r for projbundle, c for blowup.
  int parameter() const { return node_->param; }
  const std::string& name() const { return node_->name; }
  const VarietyExpr& left() const;
  const VarietyExpr& right() const;

  bool operator==(const VarietyExpr& other) const;

  /// Text in the expression grammar; parse_expr reads it back to an equal tree.
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    int param = 0;
    int dim = 0;
    std::string name;
    std::vector<VarietyExpr> children;
  };
  explicit VarietyExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static VarietyExpr make(Kind kind, int param, int dim, std::string name, std::vector<VarietyExpr> children);

  std::shared_ptr<const Node> node_;
};

/// The Hodge characteristic: ring homomorphism K_0(var/pt) -> Z[u,v] with the
/// sign (-1)^{p+q} built in, so Hc(P^1) = 1 + uv and Hc(E) = (1+u)(1+v).
HodgePolynomial hodge_characteristic(const VarietyExpr& e, const DeclRegistry& reg);

/// Hc at (u,v) = (y,-1).
LaurentScalar chi_y(const VarietyExpr& e, const DeclRegistry& reg);

/// chi_y(X) + chi_y(Y) (-y + ... + (-y)^{c-1}), evaluated from the parts.
LaurentScalar blowup_chi_formula(const VarietyExpr& base, const VarietyExpr& center, int codim,
                                 const DeclRegistry& reg);

/// Hc(Bl) - Hc(E) = Hc(X) - Hc(Y) with E the exceptional P^{c-1}-bundle over Y.
VerifyReport check_blowup_relation(const VarietyExpr& base, const VarietyExpr& center, int codim,
                                   const DeclRegistry& reg);

/// Error from parse_expr, with 1-based line and column of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses the infix expression grammar:
///   expr   := term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := "pt" | "A(" int ")" | "P(" int ")" | "Gm" | "L" ["^(" int ")"]
///           | "decl(" name ")" | "projbundle(" expr "," int ")"
///           | "blowup(" expr ";" expr "," int ")" | "(" expr ")"
VarietyExpr parse_expr(const std::string& text, const DeclRegistry& reg);

}  // namespace chiy
