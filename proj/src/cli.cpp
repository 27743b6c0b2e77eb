#include "chiy/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <future>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <thread>

#include "chiy/fgl.hpp"
#include "chiy/motivic.hpp"
#include "chiy/verify.hpp"

namespace chiy::cli {

namespace {

using json = nlohmann::ordered_json;

json number(const BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json term(std::vector<int> exps, const Rational& c) {
  return json::array({std::move(exps), number(c.get_num()), number(c.get_den())});
}

struct Rendered {
  std::string text;
  json result;
};

Rendered render(const LaurentScalar& s) {
  json terms = json::array();
  for (const auto& [k, c] : s.terms()) terms.push_back(term({k}, c));
  return {s.to_string(), {{"vars", {"y"}}, {"terms", terms}}};
}

Rendered render(const HodgePolynomial& h) {
  json terms = json::array();
  for (const auto& [pq, c] : h.terms()) terms.push_back(term({pq.first, pq.second}, Rational(c)));
  return {h.to_string(), {{"vars", {"u", "v"}}, {"terms", terms}}};
}

Rendered render(const MultiPoly& p) {
  json vars = json::array();
  size_t width = p.ring() ? p.ring()->size() : 0;
  for (size_t i = 0; i < width; ++i) vars.push_back(p.ring()->names[i]);
  vars.push_back("y");
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [k, q] : c.terms()) {
      std::vector<int> e = m;
      e.resize(width, 0);
      e.push_back(k);
      terms.push_back(term(std::move(e), q));
    }
  }
  return {p.to_string(), {{"vars", vars}, {"terms", terms}}};
}

Rendered render(const TruncSeries& s) {
  json terms = json::array();
  for (int i = 0; i <= s.order(); ++i)
    for (const auto& [k, q] : s.coefficient(i).terms()) terms.push_back(term({i, k}, q));
  return {s.to_string(), {{"vars", {s.var(), "y"}}, {"terms", terms}}};
}

json report_json(const VerifyReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return {{"identity", r.identity}, {"params", params}, {"left", r.left}, {"right", r.right}, {"pass", r.pass}};
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo;
  int hi;
};

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    size_t used = 0;
    if (dots == std::string::npos) {
      int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    if (lo > hi) throw UsageError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--k expects <a>..<b>, got '" + text + "'");
  }
}

GenusSpec genus_named(const std::string& name) {
  if (name == "hirzebruch") return GenusSpec::hirzebruch_y();
  if (name == "todd") return GenusSpec::todd();
  if (name == "chern") return GenusSpec::chern();
  return GenusSpec::l_class();
}

/// Grid cells run concurrently; results keep the cell order.
std::vector<VerifyReport> run_grid(const std::vector<std::function<std::vector<VerifyReport>()>>& cells) {
  std::vector<std::future<std::vector<VerifyReport>>> futures;
  futures.reserve(cells.size());
  for (const auto& cell : cells) futures.push_back(std::async(std::launch::async, cell));
  std::vector<VerifyReport> out;
  for (auto& f : futures) {
    auto part = f.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

using Cell = std::function<std::vector<VerifyReport>()>;

template <class F>
Cell one(F f) {
  return [f] { return std::vector<VerifyReport>{f()}; };
}

struct VerifyArgs {
  std::string target;
  std::optional<int> max_n, d, degree, order;
  std::optional<std::string> k;
};

std::vector<VerifyReport> run_verify(const VerifyArgs& a) {
  std::vector<Cell> cells;
  auto limit = [](const std::optional<int>& v, int fallback) {
    int x = v.value_or(fallback);
    if (x < 0) throw UsageError("limits must be non-negative");
    return x;
  };
  const std::string& t = a.target;
  if (t == "ghrr") {
    int max_n = limit(a.max_n, 4);
    Range k = parse_range(a.k.value_or("-3..5"));
    for (int n = 0; n <= max_n; ++n)
      for (int kk = k.lo; kk <= k.hi; ++kk) cells.push_back(one([n, kk] { return ghrr_check(n, kk); }));
  } else if (t == "yokura") {
    int d = limit(a.d, 4), order = limit(a.order, 6);
    for (int i = 0; i <= d; ++i) cells.push_back(one([i, order] { return yokura_identity(i, order); }));
  } else if (t == "reform") {
    int d = limit(a.d, 3);
    for (int i = 0; i <= d; ++i) cells.push_back(one([i] { return reform_identity(i); }));
  } else if (t == "lambda-gamma") {
    int r = limit(a.max_n, 4);
    for (int i = 1; i <= r; ++i) cells.push_back(one([i] { return lambda_gamma_identities(i); }));
  } else if (t == "gamma" || t == "higher-chern") {
    int r = limit(a.max_n, 3);
    bool gamma = t == "gamma";
    for (auto base : {PbBase::pt, PbBase::p1})
      for (int i = 1; i <= r; ++i)
        cells.push_back(one([i, base, gamma] { return gamma ? gamma_pb_relation(i, base) : higher_chern_check(i, base); }));
  } else if (t == "blowup") {
    int max_n = limit(a.max_n, 4);
    for (int n = 1; n <= max_n; ++n)
      for (int m = 0; m < n; ++m) cells.push_back([n, m] { return blowup_checks(n, m); });
  } else if (t == "vrr") {
    int max_n = limit(a.max_n, 3);
    for (int n = 0; n <= max_n; ++n)
      for (int m = 0; m <= max_n; ++m) cells.push_back(one([n, m] { return vrr_projection(n, m); }));
  } else if (t == "composition") {
    int max_n = limit(a.max_n, 3);
    for (int n = 0; n <= max_n; ++n) cells.push_back(one([n] { return composition_check(n); }));
  } else if (t == "fgl") {
    int degree = a.degree.value_or(4);
    if (degree < 2) throw UsageError("--degree must be at least 2");
    int axioms = a.order.value_or(8);
    cells.push_back(one([axioms] { return fgl_axioms(fgl_additive(axioms), axioms); }));
    cells.push_back(one([axioms] { return fgl_axioms(fgl_multiplicative(axioms), axioms); }));
    cells.push_back(one([axioms] {
      auto iota = fgl_inverse(fgl_multiplicative(axioms), axioms);
      return make_report("fgl-inverse-involution", {{"D", std::to_string(axioms)}}, compose_univariate(iota, iota),
                         MultiPoly::variable(iota.ring(), 0));
    }));
    cells.push_back([] {
      auto p1 = ChowPresentation::projective_product({1});
      auto p2 = ChowPresentation::projective_product({2});
      auto p11 = ChowPresentation::projective_product({1, 1});
      auto bundle = p1.with_split_bundle({p1.constant(LaurentScalar()), p1.hyperplane(0)});
      auto h = p1.hyperplane(0), H = p2.hyperplane(0);
      return std::vector<VerifyReport>{
          c1_tensor_check(h, h, p1),
          c1_tensor_check(h, -h, p1),
          c1_tensor_check(H, H, p2),
          c1_tensor_check(H.scaled(LaurentScalar(2)), -H, p2),
          c1_tensor_check(p11.hyperplane(0), p11.hyperplane(1), p11),
          c1_tensor_check(bundle.tautological(), h.extend_to(bundle.ring()), bundle),
      };
    });
    cells.push_back(one([degree] { return universal_relation_check(degree); }));
  }
  return run_grid(cells);
}

struct Options {
  std::string format = "text";
  std::string expr;
  std::string registry;
  bool allow_invalid = false;
  bool e_poly = false;
  std::string genus = "hirzebruch";
  int order = 6;
  VerifyArgs verify;
};

std::string joined(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) out += (out.empty() ? "" : " ") + a;
  return out;
}

DeclRegistry load_registry(const Options& o, std::string& warnings) {
  DeclRegistry reg = DeclRegistry::with_builtins();
  if (!o.registry.empty()) reg.load_json_file(o.registry, o.allow_invalid);
  for (const auto& w : reg.warnings()) warnings += "warning: " + w + "\n";
  return reg;
}

ChowPresentation product_model(const VarietyExpr& e) {
  std::vector<int> dims;
  std::function<void(const VarietyExpr&)> walk = [&](const VarietyExpr& x) {
    if (x.kind() == VarietyExpr::Kind::proj) {
      dims.push_back(x.parameter());
    } else if (x.kind() == VarietyExpr::Kind::prod) {
      walk(x.left());
      walk(x.right());
    } else if (x.kind() != VarietyExpr::Kind::pt) {
      throw UsageError("classes expects a product of projective spaces, got " + x.to_string());
    }
  };
  walk(e);
  return dims.empty() ? ChowPresentation::point() : ChowPresentation::projective_product(dims);
}

}  // namespace

std::string reports_json(const std::vector<VerifyReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump();
}

Outcome run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Hirzebruch chi_y genus and motivic characteristic class calculator", "chiy"};
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* s) {
    s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto with_expr = [&](CLI::App* s) {
    s->add_option("expr", o.expr, "Variety expression")->required();
    s->add_option("--registry", o.registry, "JSON file of declared varieties");
    s->add_flag("--allow-invalid", o.allow_invalid, "Accept declarations failing validation, with a warning");
  };
  const std::vector<std::string> genera{"hirzebruch", "todd", "chern", "l"};

  auto* chi = app.add_subcommand("chi", "chi_y genus of an expression");
  common(chi);
  with_expr(chi);
  auto* hodge = app.add_subcommand("hodge", "Hodge characteristic of an expression");
  common(hodge);
  with_expr(hodge);
  hodge->add_flag("--e-poly", o.e_poly, "Print the sign-free E-polynomial instead");
  auto* classes = app.add_subcommand("classes", "characteristic class of a product of projective spaces");
  common(classes);
  classes->add_option("expr", o.expr, "Product of P(n) factors")->required();
  classes->add_option("--genus", o.genus)->check(CLI::IsMember(genera));
  auto* series = app.add_subcommand("series", "generating series of a genus");
  common(series);
  series->add_option("--genus", o.genus)->check(CLI::IsMember(genera));
  series->add_option("--order", o.order)->check(CLI::NonNegativeNumber);
  auto* verify = app.add_subcommand("verify", "run an identity grid");
  common(verify);
  verify->add_option("target", o.verify.target)
      ->required()
      ->check(CLI::IsMember({"ghrr", "yokura", "reform", "lambda-gamma", "gamma", "higher-chern", "blowup", "vrr",
                             "composition", "fgl"}));
  verify->add_option("--max-n", o.verify.max_n);
  verify->add_option("--k", o.verify.k, "Range <a>..<b>");
  verify->add_option("--d", o.verify.d);
  verify->add_option("--degree", o.verify.degree);
  verify->add_option("--order", o.verify.order);

  Outcome res;
  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.exit_code = code == 0 ? ok : usage_error;
    return res;
  }

  const bool as_json = o.format == "json";
  json doc{{"query", joined(args)}, {"status", "ok"}, {"result", nullptr}, {"reports", json::array()}};
  std::string warnings;
  try {
    std::optional<Rendered> value;
    std::vector<VerifyReport> reports;
    if (chi->parsed() || hodge->parsed()) {
      DeclRegistry reg = load_registry(o, warnings);
      VarietyExpr e = parse_expr(o.expr, reg);
      if (chi->parsed()) {
        value = render(chi_y(e, reg));
      } else {
        HodgePolynomial h = hodge_characteristic(e, reg);
        value = render(o.e_poly ? h.e_polynomial() : h);
      }
      out << value->text << "\n";
    } else if (classes->parsed()) {
      ChowPresentation p = product_model(parse_expr(o.expr, DeclRegistry()));
      ChowElement c = characteristic_class(p, genus_named(o.genus));
      value = render(c.poly());
      LaurentScalar total = integrate(c);
      out << "class: " << value->text << "\nintegral: " << total.to_string() << "\n";
      value->result["integral"] = render(total).result;
    } else if (series->parsed()) {
      value = render(genus_named(o.genus).series(o.order));
      out << value->text << "\n";
    } else {
      reports = run_verify(o.verify);
      size_t passed = 0;
      for (const auto& r : reports) {
        passed += r.pass ? 1 : 0;
        out << (r.pass ? "PASS " : "FAIL ") << r.identity << " (" << r.params_string() << "): " << r.left
            << (r.pass ? " = " : " != ") << r.right << "\n";
      }
      out << passed << "/" << reports.size() << " passed\n";
      for (const auto& r : reports) doc["reports"].push_back(report_json(r));
      if (passed != reports.size()) {
        doc["status"] = "fail";
        res.exit_code = verification_failed;
      }
    }
    if (value) doc["result"] = value->result;
  } catch (const ParseError& e) {
    res.err = warnings + "parse error: " + e.what() + "\n";
    res.exit_code = parse_error;
    return res;
  } catch (const UnknownDeclarationError& e) {
    res.err = warnings + "error: " + e.what() + "\n";
    res.exit_code = usage_error;
    return res;
  } catch (const RegistryError& e) {
    res.err = "registry error: " + std::string(e.what()) + "\n";
    res.exit_code = usage_error;
    return res;
  } catch (const UsageError& e) {
    res.err = std::string("usage error: ") + e.what() + "\n";
    res.exit_code = usage_error;
    return res;
  } catch (const std::invalid_argument& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = usage_error;
    return res;
  }
  res.out = as_json ? doc.dump(2) + "\n" : out.str();
  res.err = warnings;
  return res;
}

}  // namespace chiy::cli
