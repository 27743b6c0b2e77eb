#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chiy/cli.hpp"
#include "chiy/fgl.hpp"
#include "chiy/motivic.hpp"
#include "chiy/verify.hpp"

namespace py = pybind11;
using namespace chiy;

namespace {

DeclRegistry registry(const std::optional<std::string>& json_text, bool allow_invalid) {
  DeclRegistry reg = DeclRegistry::with_builtins();
  if (json_text) reg.load_json_text(*json_text, allow_invalid);
  return reg;
}

py::int_ to_py(const BigInt& z) { return py::int_(py::str(z.get_str())); }

/// [(exponent, "p/q")] for a Laurent polynomial in y.
std::vector<std::pair<int, std::string>> laurent_terms(const LaurentScalar& s) {
  std::vector<std::pair<int, std::string>> out;
  for (const auto& [k, c] : s.terms()) out.emplace_back(k, to_string(c));
  return out;
}

py::dict report_dict(const VerifyReport& r) {
  py::dict params;
  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
  py::dict d;
  d["identity"] = r.identity;
  d["params"] = params;
  d["left"] = r.left;
  d["right"] = r.right;
  d["passed"] = r.pass;
  return d;
}

py::list report_list(const std::vector<VerifyReport>& rs) {
  py::list out;
  for (const auto& r : rs) out.append(report_dict(r));
  return out;
}

PbBase base_named(const std::string& name) {
  if (name == "pt") return PbBase::pt;
  if (name == "P1") return PbBase::p1;
  throw std::invalid_argument("base must be 'pt' or 'P1'");
}

GenusSpec genus_named(const std::string& name) {
  if (name == "hirzebruch") return GenusSpec::hirzebruch_y();
  if (name == "todd") return GenusSpec::todd();
  if (name == "chern") return GenusSpec::chern();
  if (name == "l") return GenusSpec::l_class();
  throw std::invalid_argument("unknown genus '" + name + "'");
}

LaurentFGL law_named(const std::string& name, int degree) {
  if (name == "additive") return fgl_additive(degree);
  if (name == "multiplicative") return fgl_multiplicative(degree);
  throw std::invalid_argument("law must be 'additive' or 'multiplicative'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact chi_y genus, Hirzebruch class and motivic class computations";

  // Kept alive for the lifetime of the interpreter.
  static py::handle parse_exc = py::exception<ParseError>(m, "ParseError", PyExc_ValueError).release();
  py::register_exception<UnknownDeclarationError>(m, "UnknownDeclarationError", PyExc_KeyError);
  py::register_exception<RegistryError>(m, "RegistryError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      auto cls = py::reinterpret_borrow<py::object>(parse_exc);
      py::object err = cls(py::str(e.what()));
      err.attr("line") = e.line();
      err.attr("column") = e.column();
      PyErr_SetObject(cls.ptr(), err.ptr());
    }
  });

  m.def(
      "chi_y",
      [](const std::string& expr, std::optional<std::string> registry_json, bool allow_invalid) {
        DeclRegistry reg = registry(registry_json, allow_invalid);
        return chi_y(parse_expr(expr, reg), reg).to_string();
      },
      py::arg("expr"), py::arg("registry_json") = py::none(), py::arg("allow_invalid") = false,
      "chi_y genus of a variety expression, rendered as a Laurent polynomial in y.");
  m.def(
      "chi_y_terms",
      [](const std::string& expr, std::optional<std::string> registry_json) {
        DeclRegistry reg = registry(registry_json, false);
        return laurent_terms(chi_y(parse_expr(expr, reg), reg));
      },
      py::arg("expr"), py::arg("registry_json") = py::none(), "Nonzero (exponent, 'p/q') pairs of chi_y.");
  m.def(
      "hodge",
      [](const std::string& expr, std::optional<std::string> registry_json, bool e_poly, bool allow_invalid) {
        DeclRegistry reg = registry(registry_json, allow_invalid);
        HodgePolynomial h = hodge_characteristic(parse_expr(expr, reg), reg);
        return (e_poly ? h.e_polynomial() : h).to_string();
      },
      py::arg("expr"), py::arg("registry_json") = py::none(), py::arg("e_poly") = false,
      py::arg("allow_invalid") = false);
  m.def(
      "hodge_terms",
      [](const std::string& expr, std::optional<std::string> registry_json) {
        DeclRegistry reg = registry(registry_json, false);
        std::map<std::pair<int, int>, py::int_> out;
        HodgePolynomial h = hodge_characteristic(parse_expr(expr, reg), reg);
        for (const auto& [pq, c] : h.terms()) out[pq] = to_py(c);
        return out;
      },
      py::arg("expr"), py::arg("registry_json") = py::none(), "{(p, q): coefficient} of the Hodge characteristic.");
  m.def(
      "render",
      [](const std::string& expr, std::optional<std::string> registry_json) {
        return parse_expr(expr, registry(registry_json, false)).to_string();
      },
      py::arg("expr"), py::arg("registry_json") = py::none(), "Canonical text of a parsed expression.");
  m.def(
      "dimension",
      [](const std::string& expr, std::optional<std::string> registry_json) {
        return parse_expr(expr, registry(registry_json, false)).dimension();
      },
      py::arg("expr"), py::arg("registry_json") = py::none());

  m.def(
      "characteristic_class",
      [](const std::vector<int>& dims, const std::string& genus) {
        auto p = dims.empty() ? ChowPresentation::point() : ChowPresentation::projective_product(dims);
        ChowElement c = characteristic_class(p, genus_named(genus));
        return std::make_pair(c.to_string(), integrate(c).to_string());
      },
      py::arg("dims"), py::arg("genus") = "hirzebruch",
      "Class of a product of projective spaces and its degree, as strings.");
  m.def(
      "series", [](const std::string& genus, int order) { return genus_named(genus).series(order).to_string(); },
      py::arg("genus") = "hirzebruch", py::arg("order") = 6);
  m.def(
      "hypersurface_chi", [](int n, int d) { return hypersurface_chi(n, d).to_string(); }, py::arg("n"),
      py::arg("d"));

  m.def(
      "euler_char_O", [](int n, int k) { return to_py(euler_char_O(n, k)); }, py::arg("n"), py::arg("k"));
  m.def(
      "euler_char_Omega", [](int n, int p, int k) { return to_py(euler_char_Omega(n, p, k)); }, py::arg("n"),
      py::arg("p"), py::arg("k"));

  m.def("ghrr_check", [](int n, int k) { return report_dict(ghrr_check(n, k)); }, py::arg("n"), py::arg("k"));
  m.def(
      "yokura_identity", [](int d, int order) { return report_dict(yokura_identity(d, order)); }, py::arg("d"),
      py::arg("order") = 6);
  m.def("reform_identity", [](int d) { return report_dict(reform_identity(d)); }, py::arg("d"));
  m.def("lambda_gamma_identities", [](int r) { return report_dict(lambda_gamma_identities(r)); }, py::arg("r"));
  m.def(
      "gamma_pb_relation", [](int r, const std::string& base) { return report_dict(gamma_pb_relation(r, base_named(base))); },
      py::arg("r"), py::arg("base") = "pt");
  m.def(
      "higher_chern_check",
      [](int r, const std::string& base) { return report_dict(higher_chern_check(r, base_named(base))); },
      py::arg("r"), py::arg("base") = "pt");
  m.def("vrr_projection", [](int n, int mm) { return report_dict(vrr_projection(n, mm)); }, py::arg("n"), py::arg("m"));
  m.def("composition_check", [](int n) { return report_dict(composition_check(n)); }, py::arg("n"));
  m.def("blowup_checks", [](int n, int mm) { return report_list(blowup_checks(n, mm)); }, py::arg("n"), py::arg("m"));

  m.def(
      "fgl_axioms", [](const std::string& law, int degree) { return report_dict(fgl_axioms(law_named(law, degree), degree)); },
      py::arg("law") = "multiplicative", py::arg("degree") = 8);
  m.def(
      "fgl_inverse", [](const std::string& law, int degree) { return fgl_inverse(law_named(law, degree), degree).to_string(); },
      py::arg("law") = "multiplicative", py::arg("degree") = 6);
  m.def(
      "universal_relations",
      [](int degree) {
        std::vector<std::string> out;
        for (const auto& r : universal_relations(SymbolicCoeffRing(degree))) out.push_back(r.to_string());
        return out;
      },
      py::arg("degree"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        cli::Outcome o = cli::run(args);
        return py::make_tuple(o.out, o.err, o.exit_code);
      },
      py::arg("args"), "Run the command-line front end; returns (stdout, stderr, exit code).");
}
