#include <doctest.h>

#include "chiy/motivic.hpp"
#include "expr_fuzz.hpp"

using namespace chiy;

namespace {

const LaurentScalar y = LaurentScalar::y();
const LaurentScalar one(1);
const DeclRegistry builtins = DeclRegistry::with_builtins();

HodgePolynomial hc(const std::string& text) { return hodge_characteristic(parse_expr(text, builtins), builtins); }
LaurentScalar chi(const std::string& text) { return chi_y(parse_expr(text, builtins), builtins); }

}  // namespace

TEST_CASE("Hodge characteristic of generators") {
  CHECK(hc("P(1)").to_string() == "1 + u*v");
  CHECK(hc("decl(elliptic)").to_string() == "1 + u + v + u*v");
  CHECK(hc("Gm * P(1)").to_string() == "-1 + u^2*v^2");
  CHECK(hc("A(2)") == HodgePolynomial::uv_power(2));
  CHECK(hc("L^(-1)").to_string() == "u^-1*v^-1");
  CHECK(hc("pt") == HodgePolynomial(1));
}

TEST_CASE("specializations") {
  auto p2 = hc("P(2)");
  CHECK(specialize(p2, Specialization::chi_y) == one - y + y * y);
  CHECK(specialize(hc("decl(elliptic)"), Specialization::chi_y).is_zero());
  CHECK(specialize(hc("P(1)"), Specialization::euler) == LaurentScalar(2));
  CHECK(specialize(hc("decl(elliptic)"), Specialization::euler).is_zero());
  auto w = LaurentScalar::y();  // weight polynomial variable
  CHECK(specialize(p2, Specialization::weight) == one + w * w + w * w * w * w);
}

TEST_CASE("chi_y of expressions") {
  CHECK(chi("A(1)") == -y);
  CHECK(chi("L^(-1)") == -LaurentScalar::y(-1));
  CHECK(chi("L * L^(-1)") == one);
  CHECK(chi("blowup(P(2); pt, 2)") == one - y * LaurentScalar(2) + y * y);
  CHECK(chi("P(3)") == one - y + y * y - y * y * y);
  CHECK(chi("projbundle(P(1), 2)") == (one - y) * (one - y + y * y));
}

TEST_CASE("cellular decomposition of projective space") {
  for (int n = 0; n <= 6; ++n) {
    HodgePolynomial cells;
    for (int i = 0; i <= n; ++i) cells += hodge_characteristic(VarietyExpr::affine(i), builtins);
    CHECK(hodge_characteristic(VarietyExpr::proj(n), builtins) == cells);
  }
  // P^1 = A^1 + pt, Gm = A^1 - pt.
  CHECK(hc("P(1)") == hc("A(1) + pt"));
  CHECK(hc("Gm") == hc("L - pt"));
}

TEST_CASE("blow-up relation and formula") {
  DeclRegistry reg;
  auto P = [](int n) { return VarietyExpr::proj(n); };
  CHECK(check_blowup_relation(P(2), VarietyExpr::pt(), 2, reg).pass);
  CHECK(check_blowup_relation(P(4), P(1), 3, reg).pass);
  auto trivial = check_blowup_relation(P(3), P(2), 1, reg);
  CHECK(trivial.pass);
  CHECK(trivial.left == "u^3*v^3");
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m < n; ++m) {
      auto bl = VarietyExpr::blow_up(P(n), P(m), n - m);
      CHECK(chi_y(bl, reg) == blowup_chi_formula(P(n), P(m), n - m, reg));
      CHECK(chi_y(bl, reg).eval(0) == chi_y(P(n), reg).eval(0));
    }
}

TEST_CASE("registry validation and JSON loading") {
  DeclRegistry reg;
  reg.load_json_text(R"([{"name": "curve2", "dim": 1, "hc": [[0,0,1],[1,0,2],[0,1,2],[1,1,1]]}])");
  CHECK(hodge_characteristic(VarietyExpr::declared("curve2", reg), reg).to_string() == "1 + 2*u + 2*v + u*v");

  CHECK_THROWS_AS(reg.load_json_text(R"([{"name": "bad", "dim": 1, "hc": [[1,0,1]]}])"), RegistryError);
  CHECK_THROWS_AS(reg.load_json_text(R"([{"name": "big", "dim": 1, "hc": [[2,2,1]]}])"), RegistryError);
  CHECK_THROWS_AS(reg.load_json_text(R"([{"name": "dup", "dim": 1, "hc": [[0,0,1],[0,0,2]]}])"), RegistryError);
  CHECK_THROWS_AS(reg.load_json_text(R"({"name": "x"})"), RegistryError);
  CHECK_THROWS_AS(reg.load_json_text("not json"), RegistryError);
  CHECK_THROWS_AS(reg.load_json_text(R"([{"name": "a", "dim": 0, "hc": []}, {"name": "a", "dim": 0, "hc": []}])"),
                  RegistryError);

  reg.load_json_text(R"([{"name": "odd", "dim": 1, "hc": [[1,0,1]]}])", true);
  CHECK(reg.contains("odd"));
  CHECK(reg.warnings().size() == 1);

  CHECK_THROWS_AS(VarietyExpr::declared("nope", reg), UnknownDeclarationError);
  CHECK_THROWS_AS(reg.load_json_file("/nonexistent/decls.json"), RegistryError);
}

TEST_CASE("E-polynomial interop drops the sign") {
  auto e = hc("decl(elliptic)").e_polynomial();
  CHECK(e.to_string() == "1 - u - v + u*v");
  CHECK(hc("P(2)").e_polynomial() == hc("P(2)"));
}

TEST_CASE("parser") {
  CHECK(parse_expr("P(2)", builtins) == VarietyExpr::proj(2));
  CHECK(parse_expr("blowup(P(2); pt, 2)", builtins) ==
        VarietyExpr::blow_up(VarietyExpr::proj(2), VarietyExpr::pt(), 2));
  CHECK(parse_expr("Gm * P(1)", builtins) == VarietyExpr::prod(VarietyExpr::torus(), VarietyExpr::proj(1)));
  CHECK(parse_expr(" P ( 2 ) +A(1)*L^( -1 )", builtins) ==
        VarietyExpr::sum(VarietyExpr::proj(2), VarietyExpr::prod(VarietyExpr::affine(1), VarietyExpr::lefschetz(-1))));
  CHECK(parse_expr("pt - pt - pt", builtins) ==
        VarietyExpr::diff(VarietyExpr::diff(VarietyExpr::pt(), VarietyExpr::pt()), VarietyExpr::pt()));
  CHECK(parse_expr("projbundle(P(1) * P(1), 2)", builtins).dimension() == 4);
  CHECK(parse_expr("decl(elliptic)", builtins).dimension() == 1);

  SUBCASE("errors carry positions") {
    try {
      parse_expr("P(2) +\n  Q(1)", builtins);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_expr("P(2", builtins), ParseError);
    CHECK_THROWS_AS(parse_expr("P(-1)", builtins), ParseError);
    CHECK_THROWS_AS(parse_expr("blowup(P(2); pt, 0)", builtins), ParseError);
    CHECK_THROWS_AS(parse_expr("", builtins), ParseError);
    CHECK_THROWS_AS(parse_expr("P(1) $", builtins), ParseError);
    CHECK_THROWS_AS(parse_expr("decl(unknown)", builtins), UnknownDeclarationError);
  }
}

TEST_CASE("render and reparse give equal trees") {
  testing::ExprFuzzer fuzz(99);
  for (int i = 0; i < 500; ++i) {
    auto e = fuzz.next();
    auto text = e.to_string();
    CHECK_MESSAGE(parse_expr(text, builtins) == e, text);
  }
}

TEST_CASE("Hodge invariants on random expressions") {
  testing::ExprFuzzer fuzz(2024);
  DeclRegistry empty;
  for (int i = 0; i < 300; ++i) {
    auto e = fuzz.next();
    auto h = hodge_characteristic(e, empty);
    CHECK(h.is_symmetric());
    if (!h.is_zero()) CHECK(h.total_degree() <= 2 * e.dimension());
    auto chi = specialize(h, Specialization::chi_y);
    if (!chi.is_zero()) CHECK(chi.high() <= e.dimension());
    auto euler = specialize(h, Specialization::euler);
    CHECK(LaurentScalar(chi.eval(-1)) == euler);
    CHECK(LaurentScalar(specialize(h, Specialization::weight).eval(-1)) == euler);
    // Ring homomorphism on products.
    auto f = fuzz.next(2);
    CHECK(hodge_characteristic(VarietyExpr::prod(e, f), empty) == h * hodge_characteristic(f, empty));
  }
}
