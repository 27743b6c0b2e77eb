#include "chiy/verify.hpp"

#include "chiy/motivic.hpp"

namespace chiy {

namespace {

const LaurentScalar kY = LaurentScalar::y();
const LaurentScalar kOnePlusY = LaurentScalar(1) + kY;

using Params = std::vector<std::pair<std::string, std::string>>;

template <class T>
VerifyReport joined_report(std::string identity, Params params, const std::vector<T>& left,
                           const std::vector<T>& right) {
  VerifyReport r{std::move(identity), std::move(params), "", "", left.size() == right.size()};
  for (size_t i = 0; i < left.size(); ++i) {
    if (i > 0) {
      r.left += " ; ";
      r.right += " ; ";
    }
    r.left += left[i].to_string();
    r.right += right[i].to_string();
    if (r.pass && !(left[i] == right[i])) r.pass = false;
  }
  return r;
}

std::string str(int v) { return std::to_string(v); }

RingPtr root_ring(const std::string& prefix, int count, int max_degree) {
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return make_ring(std::move(names), {}, max_degree);
}

std::vector<MultiPoly> variables(const RingPtr& ring) {
  std::vector<MultiPoly> out;
  for (size_t i = 0; i < ring->size(); ++i) out.push_back(MultiPoly::variable(ring, i));
  return out;
}

/// E* - rk E for E with the given roots.
BundleRoots reduced_dual(const std::vector<MultiPoly>& roots) {
  BundleRoots out;
  for (const auto& x : roots) {
    out.plus.push_back(-x);
    out.minus.push_back(MultiPoly());
  }
  return out;
}

ChowPresentation pb_model(int r, PbBase base) {
  if (base == PbBase::pt) {
    return ChowPresentation::point().with_split_bundle(std::vector<MultiPoly>(static_cast<size_t>(r)));
  }
  auto p1 = ChowPresentation::projective_product({1});
  std::vector<MultiPoly> roots;
  for (int j = 0; j < r; ++j) roots.push_back(p1.hyperplane(0).scaled(LaurentScalar(j)));
  return p1.with_split_bundle(roots);
}

std::string base_name(PbBase base) { return base == PbBase::pt ? "pt" : "P1"; }

/// gamma^0..gamma^r of E* - r, lifted to the total space of P(E), and 1 - e^{-xi}.
struct PbData {
  ChowPresentation pres;
  std::vector<MultiPoly> gammas;
  MultiPoly one_minus_dual;
};

PbData pb_data(int r, PbBase base) {
  if (r < 1) throw PreconditionError("rank must be at least 1");
  ChowPresentation pres = pb_model(r, base);
  std::vector<MultiPoly> lifted;
  for (const auto& x : pres.stages().back().roots) lifted.push_back(x.extend_to(pres.ring()));
  MultiPoly gamma = gamma_class(reduced_dual(lifted));
  MultiPoly xi = pres.tautological();
  return {pres, y_components(gamma, r), pres.constant(1) - exp_of(-xi)};
}

MultiPoly from_model(const MultiPoly& p, const RingPtr& target) {
  std::vector<MultiPoly> images;
  images.push_back(MultiPoly::variable(target, "h2"));
  return p.substitute(images);
}

}  // namespace

BigInt euler_char_O(int n, int k) {
  if (n < 0) throw PreconditionError("n must be non-negative");
  // prod_{i=1}^{n} (k+i) / n!, exact for every integer k.
  BigInt num = 1, den = 1;
  for (int i = 1; i <= n; ++i) {
    num *= k + i;
    den *= i;
  }
  return num / den;
}

BigInt euler_char_Omega(int n, int p, int k) {
  if (p < 0) throw PreconditionError("p must be non-negative");
  if (p > n) return 0;
  if (p == 0) return euler_char_O(n, k);
  return binomial(n + 1, p) * euler_char_O(n, k - p) - euler_char_Omega(n, p - 1, k);
}

LaurentScalar chi_y_line_bundle_oracle(int n, int k) {
  LaurentScalar out;
  for (int p = 0; p <= n; ++p) out += LaurentScalar::monomial(p, Rational(euler_char_Omega(n, p, k)));
  return out;
}

VerifyReport ghrr_check(int n, int k) {
  if (n < 0) throw PreconditionError("n must be non-negative");
  LaurentScalar lhs = chi_y_line_bundle_oracle(n, k);
  auto pn = ChowPresentation::projective_product({n});
  MultiPoly h = pn.hyperplane(0);
  MultiPoly integrand = apply_series(q_series(n), h).pow(static_cast<unsigned>(n + 1)) *
                        exp_of(h.scaled(kOnePlusY * LaurentScalar(k)));
  LaurentScalar rhs = integrate(ChowElement(pn, integrand));
  return make_report("ghrr", {{"n", str(n)}, {"k", str(k)}}, lhs, rhs);
}

VerifyReport yokura_identity(int d, int order) {
  if (d < 0 || order < 0) throw PreconditionError("d and order must be non-negative");
  RingPtr ring = root_ring("a", d, order);
  MultiPoly y = MultiPoly::constant(ring, kY);
  MultiPoly numer = MultiPoly::constant(ring, LaurentScalar(1));
  MultiPoly rhs = numer;
  TruncSeries td = todd_series(order), q = q_series(order);
  for (const auto& a : variables(ring)) {
    MultiPoly twisted = a.scaled(kOnePlusY);
    numer *= (MultiPoly::constant(ring, LaurentScalar(1)) + y * exp_of(-twisted)) * apply_series(td, twisted);
    rhs *= apply_series(q, a);
  }
  const LaurentScalar denom = one_plus_y_pow(static_cast<unsigned>(d));
  bool divisible = true;
  MultiPoly lhs = numer.map_coefficients([&](const LaurentScalar& c) {
    auto quotient = c.divide_exact(denom);
    if (!quotient) divisible = false;
    return quotient ? *quotient : c;
  });
  Params params{{"d", str(d)}, {"order", str(order)}};
  if (!divisible) {
    return VerifyReport{"yokura", params, "(" + numer.to_string() + ")/(1 + y)^" + str(d), rhs.to_string(), false};
  }
  return make_report("yokura", params, lhs, rhs);
}

VerifyReport reform_identity(int d) {
  if (d < 0) throw PreconditionError("d must be non-negative");
  RingPtr ring = root_ring("x", d, d + 2);
  auto roots = variables(ring);
  auto gammas = y_components(gamma_class(reduced_dual(roots)), d);
  auto weights = tilde_lambda_coeffs(d);
  MultiPoly lhs = MultiPoly::constant(ring, LaurentScalar());
  for (int j = 0; j <= d; ++j) {
    LaurentScalar sign(j % 2 == 0 ? 1 : -1);
    MultiPoly c_tilde = gammas[static_cast<size_t>(j)].scaled(sign * LaurentScalar::y(-j));
    lhs += c_tilde.scaled(weights[static_cast<size_t>(j)] * LaurentScalar::y(d));
  }
  BundleRoots tangent{roots, {}};
  MultiPoly rhs = MultiPoly::constant(ring, LaurentScalar(1)) * lambda_class(tangent.dual());
  return make_report("reform", {{"d", str(d)}}, lhs, rhs);
}

VerifyReport lambda_gamma_identities(int r) {
  if (r < 1) throw PreconditionError("rank must be at least 1");
  RingPtr ring = root_ring("x", r, r + 2);
  auto roots = variables(ring);
  BundleRoots dual = BundleRoots{roots, {}}.dual();
  auto lambdas = y_components(lambda_class(dual), r);
  auto gammas = y_components(gamma_class(reduced_dual(roots)), r);

  std::vector<MultiPoly> left, right;
  MultiPoly gsum = MultiPoly::constant(ring, LaurentScalar()), lsum = gsum;
  for (int i = 0; i <= r; ++i) {
    gsum += gammas[static_cast<size_t>(r - i)].scaled(one_plus_y_pow(static_cast<unsigned>(i)));
    lsum += lambdas[static_cast<size_t>(r - i)].scaled(LaurentScalar::y(i));
  }
  left.push_back(gsum);
  right.push_back(lsum);
  for (int i = 0; i <= r; ++i) {
    MultiPoly from_gamma = MultiPoly::constant(ring, LaurentScalar());
    for (int j = 0; j <= i; ++j)
      from_gamma += gammas[static_cast<size_t>(j)].scaled(LaurentScalar(Rational(binomial(r - j, r - i))));
    left.push_back(from_gamma);
    right.push_back(lambdas[static_cast<size_t>(i)]);
  }
  return joined_report("lambda-gamma", {{"r", str(r)}}, left, right);
}

VerifyReport gamma_pb_relation(int r, PbBase base) {
  PbData data = pb_data(r, base);
  MultiPoly sum = data.pres.constant(LaurentScalar());
  for (int i = 0; i <= r; ++i)
    sum += data.gammas[static_cast<size_t>(i)] * data.one_minus_dual.pow(static_cast<unsigned>(r - i));
  return make_report("gamma", {{"r", str(r)}, {"base", base_name(base)}}, ChowElement(data.pres, sum),
                     ChowElement(data.pres, data.pres.constant(LaurentScalar())));
}

VerifyReport higher_chern_check(int r, PbBase base) {
  PbData data = pb_data(r, base);
  MultiPoly c1 = data.one_minus_dual.scaled(LaurentScalar::y(-1));
  MultiPoly sum = data.pres.constant(LaurentScalar());
  for (int i = 0; i <= r; ++i) {
    LaurentScalar sign(i % 2 == 0 ? 1 : -1);
    MultiPoly c_tilde = data.gammas[static_cast<size_t>(i)].scaled(sign * LaurentScalar::y(-i));
    sum += (c_tilde * c1.pow(static_cast<unsigned>(r - i))).scaled(sign);
  }
  return make_report("higher-chern", {{"r", str(r)}, {"base", base_name(base)}}, ChowElement(data.pres, sum),
                     ChowElement(data.pres, data.pres.constant(LaurentScalar())));
}

VerifyReport vrr_projection(int n, int m) {
  if (n < 0 || m < 0) throw PreconditionError("dimensions must be non-negative");
  auto product = ChowPresentation::projective_product({n, m});
  auto target = ChowPresentation::projective_product({m});
  const RingPtr& ring = product.ring();

  // Relative tangent bundle: the pulled back Euler sequence of P^n.
  BundleRoots tf;
  tf.plus.assign(static_cast<size_t>(n + 1), product.hyperplane(0));
  tf.minus.push_back(MultiPoly());

  std::vector<ChowElement> left, right;

  ChowElement td_f(product, class_of_roots(tf, GenusSpec::hirzebruch_y()));
  ChowElement pulled_t(product, from_model(hirzebruch_class(target).poly(), ring));
  left.push_back(td_f * pulled_t);
  right.push_back(hirzebruch_class(product));

  ChowElement lambda_f(product, lambda_class(tf.dual()));
  ChowElement pulled_mc(product, from_model(lambda_cotangent_image(target).poly(), ring));
  ChowElement mc_total = lambda_cotangent_image(product);
  left.push_back(lambda_f * pulled_mc);
  right.push_back(mc_total);

  BundleRoots tf_star = tf.dual();
  tf_star.minus.assign(static_cast<size_t>(n + 1), MultiPoly());
  auto gammas = y_components(gamma_class(tf_star), n);
  auto weights = tilde_lambda_coeffs(n);
  MultiPoly tilde_lambda = product.constant(LaurentScalar());
  for (int j = 0; j <= n; ++j) {
    LaurentScalar sign(j % 2 == 0 ? 1 : -1);
    tilde_lambda += gammas[static_cast<size_t>(j)].scaled(sign * LaurentScalar::y(-j) * weights[static_cast<size_t>(j)]);
  }
  left.push_back(ChowElement(product, tilde_lambda) * pulled_mc.scaled(LaurentScalar::y(n)));
  right.push_back(mc_total);

  return joined_report("vrr", {{"n", str(n)}, {"m", str(m)}}, left, right);
}

VerifyReport composition_check(int n) {
  if (n < 0) throw PreconditionError("n must be non-negative");
  auto pn = ChowPresentation::projective_product({n});
  TwistedClass composed = todd_transform_twist(lambda_cotangent_image(pn));
  ChowElement hirz = hirzebruch_class(pn);
  std::string left = composed.numerator.to_string();
  if (composed.denominator_power > 0) left = "(" + left + ")/(1 + y)^" + str(static_cast<int>(composed.denominator_power));
  return VerifyReport{"composition", {{"n", str(n)}}, left, hirz.to_string(), composed == TwistedClass{hirz, 0}};
}

std::vector<VerifyReport> blowup_checks(int n, int m) {
  if (m < 0 || m >= n) throw PreconditionError("need 0 <= m < n");
  DeclRegistry reg;
  const int codim = n - m;
  auto pn = VarietyExpr::proj(n), pm = VarietyExpr::proj(m);
  auto bl = VarietyExpr::blow_up(pn, pm, codim);
  Params params{{"n", str(n)}, {"m", str(m)}};
  LaurentScalar chi = chi_y(bl, reg);

  std::vector<VerifyReport> out;
  out.push_back(make_report("blowup-formula", params, chi, blowup_chi_formula(pn, pm, codim, reg)));

  auto base = ChowPresentation::projective_product({n - m - 1});
  std::vector<MultiPoly> roots(static_cast<size_t>(m + 1), base.constant(LaurentScalar()));
  roots.push_back(base.hyperplane(0));
  out.push_back(make_report("blowup-chow", params, chi, integrate(hirzebruch_class(base.with_split_bundle(roots)))));

  VerifyReport rel = check_blowup_relation(pn, pm, codim, reg);
  rel.params = params;
  out.push_back(rel);

  out.push_back(make_report("blowup-chi0", params, LaurentScalar(chi.eval(0)), LaurentScalar(chi_y(pn, reg).eval(0))));
  return out;
}

std::vector<VerifyReport> projective_chi_routes(int n) {
  DeclRegistry reg;
  LaurentScalar scissor = chi_y(VarietyExpr::proj(n), reg);
  LaurentScalar chow = integrate(hirzebruch_class(ChowPresentation::projective_product({n})));
  LaurentScalar oracle = chi_y_line_bundle_oracle(n, 0);
  return {make_report("chi-projective-scissor-chow", {{"n", str(n)}}, scissor, chow),
          make_report("chi-projective-chow-oracle", {{"n", str(n)}}, chow, oracle)};
}

}  // namespace chiy
