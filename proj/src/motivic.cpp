#include "chiy/motivic.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace chiy {

// --- HodgePolynomial -------------------------------------------------------

HodgePolynomial::HodgePolynomial(long c) {
  if (c != 0) terms_[{0, 0}] = c;
}

HodgePolynomial HodgePolynomial::monomial(int p, int q, const BigInt& c) {
  HodgePolynomial h;
  h.add({p, q}, c);
  return h;
}

HodgePolynomial HodgePolynomial::projective(int n) {
  HodgePolynomial h;
  for (int i = 0; i <= n; ++i) h.add({i, i}, 1);
  return h;
}

void HodgePolynomial::add(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt HodgePolynomial::coefficient(int p, int q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? BigInt(0) : it->second;
}

HodgePolynomial& HodgePolynomial::operator+=(const HodgePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

HodgePolynomial& HodgePolynomial::operator-=(const HodgePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add(e, -c);
  return *this;
}

HodgePolynomial HodgePolynomial::operator-() const {
  HodgePolynomial out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

HodgePolynomial operator*(const HodgePolynomial& a, const HodgePolynomial& b) {
  HodgePolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

bool HodgePolynomial::is_symmetric() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return coefficient(t.first.second, t.first.first) == t.second; });
}

int HodgePolynomial::total_degree() const {
  int d = INT_MIN;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

HodgePolynomial HodgePolynomial::e_polynomial() const {
  HodgePolynomial out;
  for (const auto& [e, c] : terms_) out.terms_[e] = (e.first + e.second) % 2 == 0 ? c : BigInt(-c);
  return out;
}

std::string HodgePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, BigInt>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    int dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
    if (dx != dy) return dx < dy;
    return x.first.first > y.first.first;
  });
  auto power = [](const char* var, int e) {
    std::string s = var;
    if (e != 1) s += "^" + std::to_string(e);
    return s;
  };
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : sorted) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    if (e.first != 0) mono = power("u", e.first);
    if (e.second != 0) mono += (mono.empty() ? "" : "*") + power("v", e.second);
    if (mono.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

LaurentScalar specialize(const HodgePolynomial& h, Specialization target) {
  LaurentScalar out;
  for (const auto& [e, c] : h.terms()) {
    const auto [p, q] = e;
    switch (target) {
      case Specialization::chi_y:
        out += LaurentScalar::monomial(p, Rational(q % 2 == 0 ? c : BigInt(-c)));
        break;
      case Specialization::weight:
        out += LaurentScalar::monomial(p + q, Rational(c));
        break;
      case Specialization::euler:
        out += LaurentScalar(Rational((p + q) % 2 == 0 ? c : BigInt(-c)));
        break;
    }
  }
  return out;
}

// --- DeclRegistry ----------------------------------------------------------

DeclRegistry DeclRegistry::with_builtins() {
  DeclRegistry reg;
  HodgePolynomial one_plus_u = HodgePolynomial(1) + HodgePolynomial::monomial(1, 0);
  HodgePolynomial one_plus_v = HodgePolynomial(1) + HodgePolynomial::monomial(0, 1);
  reg.add("elliptic", 1, one_plus_u * one_plus_v);
  return reg;
}

void DeclRegistry::add(const std::string& name, int dim, const HodgePolynomial& hc, bool allow_invalid) {
  std::vector<std::string> problems;
  if (!hc.is_symmetric()) problems.push_back("Hodge data is not symmetric under u <-> v");
  if (!hc.is_zero() && hc.total_degree() > 2 * dim)
    problems.push_back("total degree " + std::to_string(hc.total_degree()) + " exceeds 2*dim = " +
                       std::to_string(2 * dim));
  for (const auto& msg : problems) {
    std::string full = "declaration '" + name + "': " + msg;
    if (!allow_invalid) throw RegistryError(full);
    warnings_.push_back(full);
  }
  entries_[name] = Entry{dim, hc};
}

void DeclRegistry::load_json_text(const std::string& text, bool allow_invalid) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw RegistryError(std::string("registry is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw RegistryError("registry must be a JSON list of declarations");
  std::set<std::string> seen;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("name") || !item.contains("dim") || !item.contains("hc"))
      throw RegistryError("each declaration needs \"name\", \"dim\" and \"hc\"");
    if (!item["name"].is_string() || !item["dim"].is_number_integer() || !item["hc"].is_array())
      throw RegistryError("declaration fields have the wrong types");
    std::string name = item["name"].get<std::string>();
    if (!seen.insert(name).second) throw RegistryError("duplicate declaration '" + name + "'");
    HodgePolynomial hc;
    std::set<std::pair<int, int>> pairs;
    for (const auto& t : item["hc"]) {
      if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
          !t[2].is_number_integer())
        throw RegistryError("declaration '" + name + "': hc entries must be [p, q, coeff] integers");
      int p = t[0].get<int>(), q = t[1].get<int>();
      if (!pairs.insert({p, q}).second)
        throw RegistryError("declaration '" + name + "': duplicate (p,q) = (" + std::to_string(p) + "," +
                            std::to_string(q) + ")");
      hc += HodgePolynomial::monomial(p, q, BigInt(std::to_string(t[2].get<long long>())));
    }
    add(name, item["dim"].get<int>(), hc, allow_invalid);
  }
}

void DeclRegistry::load_json_file(const std::string& path, bool allow_invalid) {
  std::ifstream in(path);
  if (!in) throw RegistryError("cannot read registry file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  load_json_text(buf.str(), allow_invalid);
}

const DeclRegistry::Entry& DeclRegistry::at(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw UnknownDeclarationError("unknown declared variety '" + name + "'");
  return it->second;
}

// --- VarietyExpr -----------------------------------------------------------

VarietyExpr VarietyExpr::make(Kind kind, int param, int dim, std::string name, std::vector<VarietyExpr> children) {
  return VarietyExpr(std::make_shared<const Node>(Node{kind, param, dim, std::move(name), std::move(children)}));
}

VarietyExpr VarietyExpr::pt() { return make(Kind::pt, 0, 0, "", {}); }

VarietyExpr VarietyExpr::affine(int n) {
  if (n < 0) throw PreconditionError("affine space of negative dimension");
  return make(Kind::affine, n, n, "", {});
}

VarietyExpr VarietyExpr::proj(int n) {
  if (n < 0) throw PreconditionError("projective space of negative dimension");
  return make(Kind::proj, n, n, "", {});
}

VarietyExpr VarietyExpr::torus() { return make(Kind::torus, 0, 1, "", {}); }

VarietyExpr VarietyExpr::lefschetz(int k) { return make(Kind::lefschetz, k, k, "", {}); }

VarietyExpr VarietyExpr::declared(const std::string& name, const DeclRegistry& reg) {
  return make(Kind::declared, 0, reg.at(name).dim, name, {});
}

VarietyExpr VarietyExpr::sum(const VarietyExpr& a, const VarietyExpr& b) {
  return make(Kind::sum, 0, std::max(a.dimension(), b.dimension()), "", {a, b});
}

VarietyExpr VarietyExpr::diff(const VarietyExpr& a, const VarietyExpr& b) {
  return make(Kind::diff, 0, std::max(a.dimension(), b.dimension()), "", {a, b});
}

VarietyExpr VarietyExpr::prod(const VarietyExpr& a, const VarietyExpr& b) {
  return make(Kind::prod, 0, a.dimension() + b.dimension(), "", {a, b});
}

VarietyExpr VarietyExpr::proj_bundle(const VarietyExpr& base, int fiber_dim) {
  if (fiber_dim < 0) throw PreconditionError("projective bundle fiber dimension must be >= 0");
  return make(Kind::proj_bundle, fiber_dim, base.dimension() + fiber_dim, "", {base});
}

VarietyExpr VarietyExpr::blow_up(const VarietyExpr& base, const VarietyExpr& center, int codim) {
  if (codim < 1) throw PreconditionError("blow-up codimension must be >= 1");
  return make(Kind::blow_up, codim, base.dimension(), "", {base, center});
}

const VarietyExpr& VarietyExpr::left() const {
  if (node_->children.empty()) throw PreconditionError("expression node has no children");
  return node_->children[0];
}

const VarietyExpr& VarietyExpr::right() const {
  if (node_->children.size() < 2) throw PreconditionError("expression node has no second child");
  return node_->children[1];
}

bool VarietyExpr::operator==(const VarietyExpr& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || parameter() != other.parameter() || dimension() != other.dimension() ||
      name() != other.name() || node_->children.size() != other.node_->children.size())
    return false;
  for (size_t i = 0; i < node_->children.size(); ++i)
    if (!(node_->children[i] == other.node_->children[i])) return false;
  return true;
}

std::string VarietyExpr::to_string() const {
  auto wrap_additive = [](const VarietyExpr& e) {
    bool additive = e.kind() == Kind::sum || e.kind() == Kind::diff;
    return additive ? "(" + e.to_string() + ")" : e.to_string();
  };
  switch (kind()) {
    case Kind::pt:
      return "pt";
    case Kind::affine:
      return "A(" + std::to_string(parameter()) + ")";
    case Kind::proj:
      return "P(" + std::to_string(parameter()) + ")";
    case Kind::torus:
      return "Gm";
    case Kind::lefschetz:
      return parameter() == 1 ? "L" : "L^(" + std::to_string(parameter()) + ")";
    case Kind::declared:
      return "decl(" + name() + ")";
    case Kind::sum:
    case Kind::diff:
      return left().to_string() + (kind() == Kind::sum ? " + " : " - ") + wrap_additive(right());
    case Kind::prod: {
      std::string r = right().kind() == Kind::prod ? "(" + right().to_string() + ")" : wrap_additive(right());
      return wrap_additive(left()) + " * " + r;
    }
    case Kind::proj_bundle:
      return "projbundle(" + left().to_string() + ", " + std::to_string(parameter()) + ")";
    case Kind::blow_up:
      return "blowup(" + left().to_string() + "; " + right().to_string() + ", " + std::to_string(parameter()) + ")";
  }
  return "?";
}

// --- evaluation ------------------------------------------------------------

HodgePolynomial hodge_characteristic(const VarietyExpr& e, const DeclRegistry& reg) {
  using K = VarietyExpr::Kind;
  switch (e.kind()) {
    case K::pt:
      return 1;
    case K::affine:
      return HodgePolynomial::uv_power(e.parameter());
    case K::proj:
      return HodgePolynomial::projective(e.parameter());
    case K::torus:
      return HodgePolynomial::uv_power(1) - HodgePolynomial(1);
    case K::lefschetz:
      return HodgePolynomial::uv_power(e.parameter());
    case K::declared:
      return reg.at(e.name()).hc;
    case K::sum:
      return hodge_characteristic(e.left(), reg) + hodge_characteristic(e.right(), reg);
    case K::diff:
      return hodge_characteristic(e.left(), reg) - hodge_characteristic(e.right(), reg);
    case K::prod:
      return hodge_characteristic(e.left(), reg) * hodge_characteristic(e.right(), reg);
    case K::proj_bundle:
      return hodge_characteristic(e.left(), reg) * HodgePolynomial::projective(e.parameter());
    case K::blow_up: {
      // Bl = X - Y + E with E -> Y a P^{c-1}-bundle.
      HodgePolynomial fiber_excess = HodgePolynomial::projective(e.parameter() - 1) - HodgePolynomial(1);
      return hodge_characteristic(e.left(), reg) + hodge_characteristic(e.right(), reg) * fiber_excess;
    }
  }
  throw PreconditionError("unknown expression node");
}

LaurentScalar chi_y(const VarietyExpr& e, const DeclRegistry& reg) {
  return specialize(hodge_characteristic(e, reg), Specialization::chi_y);
}

LaurentScalar blowup_chi_formula(const VarietyExpr& base, const VarietyExpr& center, int codim,
                                 const DeclRegistry& reg) {
  LaurentScalar tail;
  LaurentScalar minus_y = -LaurentScalar::y();
  for (int i = 1; i <= codim - 1; ++i) tail += minus_y.pow(static_cast<unsigned>(i));
  return chi_y(base, reg) + chi_y(center, reg) * tail;
}

VerifyReport check_blowup_relation(const VarietyExpr& base, const VarietyExpr& center, int codim,
                                   const DeclRegistry& reg) {
  auto blown = VarietyExpr::blow_up(base, center, codim);
  auto exceptional = VarietyExpr::proj_bundle(center, codim - 1);
  HodgePolynomial lhs = hodge_characteristic(blown, reg) - hodge_characteristic(exceptional, reg);
  HodgePolynomial rhs = hodge_characteristic(base, reg) - hodge_characteristic(center, reg);
  return make_report("blowup-relation",
                     {{"base", base.to_string()}, {"center", center.to_string()}, {"codim", std::to_string(codim)}},
                     lhs, rhs);
}

}  // namespace chiy
