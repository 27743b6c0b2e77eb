#pragma once

#include <vector>

#include "chiy/chow.hpp"
#include "chiy/report.hpp"

namespace chiy {

/// chi(P^n, O(k)) = C(n+k, n) read as a polynomial in k.
BigInt euler_char_O(int n, int k);

/// chi(P^n, Omega^p(k)) through the Euler-sequence recursion; 0 for p > n.
BigInt euler_char_Omega(int n, int p, int k);

/// Sum_p chi(P^n, Omega^p(k)) y^p from the cohomology oracle.
LaurentScalar chi_y_line_bundle_oracle(int n, int k);

/// sum_p chi(Omega^p(k)) y^p against the coefficient of h^n in Q_y(h)^{n+1} e^{kh(1+y)}.
VerifyReport ghrr_check(int n, int k);

/// (1+y)^{-d} prod (1 + y e^{-a(1+y)}) Td(a(1+y)) = prod Q_y(a) in d free roots,
/// modulo total degree > order.
VerifyReport yokura_identity(int d, int order);

/// sum_j w_j c~_j(T) y^d = ch lambda_y(T*) for d free tangent roots, with
/// c~_j = (-1)^j gamma^j(T* - d) y^{-j}.
VerifyReport reform_identity(int d);

/// Both lambda/gamma conversions for a split rank-r bundle. Sides list the
/// generating identity first, then lambda^0..lambda^r.
VerifyReport lambda_gamma_identities(int r);

enum class PbBase { pt, p1 };

/// sum gamma^i(E* - r) (1 - O(1)*)^{r-i} in the Chow model of P(E), where
/// E = O^r over a point or O + O(1) + ... + O(r-1) over P^1.
VerifyReport gamma_pb_relation(int r, PbBase base);

/// sum (-1)^i c~_i(E) c~_1(O(1))^{r-i} on the same models.
VerifyReport higher_chern_check(int r, PbBase base);

/// Verdier-Riemann-Roch for the projection P^n x P^m -> P^m applied to [id].
/// Sides list the T_y form, the mC form with plain pullback, and the mC form
/// with the y^n-twisted pullback and the tilde-lambda class of T*_f.
VerifyReport vrr_projection(int n, int m);

/// td_(1+y) of ch lambda_y(T*P^n) against the Hirzebruch class of P^n.
VerifyReport composition_check(int n);

/// Blow-up of P^n along a linear P^m: chi_y against the blow-up formula,
/// against the Chow model P(O^{m+1} + O(1)) over P^{n-m-1}, the scissor
/// relation, and chi_0 invariance.
std::vector<VerifyReport> blowup_checks(int n, int m);

/// chi_y(P^n) by the scissor calculus, by integrating the Hirzebruch class and
/// by the cohomology oracle: two reports chaining the three values.
std::vector<VerifyReport> projective_chi_routes(int n);

}  // namespace chiy
