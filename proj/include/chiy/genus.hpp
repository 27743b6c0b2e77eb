#pragma once

#include <optional>
#include <vector>

#include "chiy/multipoly.hpp"
#include "chiy/series.hpp"

namespace chiy {

/// Which normalized power series generates a multiplicative class.
class GenusSpec {
 public:
  enum class Kind { hirzebruch_y, chern, todd, l_class, custom };

  static GenusSpec hirzebruch_y() { return GenusSpec(Kind::hirzebruch_y); }
  static GenusSpec chern() { return GenusSpec(Kind::chern); }
  static GenusSpec todd() { return GenusSpec(Kind::todd); }
  static GenusSpec l_class() { return GenusSpec(Kind::l_class); }
  /// Throws PreconditionError unless the constant term is 1.
  static GenusSpec custom(TruncSeries series);

  Kind kind() const { return kind_; }
  /// The generating series to the requested order.
  TruncSeries series(int order) const;

 private:
  explicit GenusSpec(Kind kind) : kind_(kind) {}
  Kind kind_;
  std::optional<TruncSeries> custom_;
};

/// Todd series t / (1 - e^{-t}).
TruncSeries todd_series(int order);

/// Q_y(a) = a(1+y) / (1 - e^{-a(1+y)}) - a y.
TruncSeries q_series(int order);

/// A virtual bundle given by Chern roots: sum of plus roots minus sum of minus roots.
struct BundleRoots {
  std::vector<MultiPoly> plus;
  std::vector<MultiPoly> minus;

  int rank() const { return static_cast<int>(plus.size()) - static_cast<int>(minus.size()); }
  /// Disjoint union of root collections (direct sum of virtual bundles).
  BundleRoots operator+(const BundleRoots& other) const;
  /// Roots of the dual: every root negated.
  BundleRoots dual() const;
  bool empty() const { return plus.empty() && minus.empty(); }
};

/// prod_plus f(root) / prod_minus f(root) for the genus series f.
MultiPoly class_of_roots(const BundleRoots& roots, const GenusSpec& genus);

/// ch_{(1+y)}: sum of e^{root (1+y)} over plus roots minus the same over minus roots.
MultiPoly ch_twisted(const BundleRoots& roots);

/// Plain Chern character sum e^{root} (the y = 0 case of ch_twisted).
MultiPoly chern_character(const BundleRoots& roots);

/// Chern-character image of lambda_y: prod (1 + y e^{x}) over plus roots
/// divided by the same over minus roots. The division must be exact in
/// Q[y, 1/y], otherwise DomainError.
MultiPoly lambda_class(const BundleRoots& roots);

/// Chern-character image of gamma_y = sum gamma^i y^i of a rank-0 virtual
/// bundle: prod (1 + y (e^{x} - 1)) over plus roots divided by minus roots.
/// PreconditionError for nonzero rank.
MultiPoly gamma_class(const BundleRoots& roots);

enum class LambdaGamma { lambda, gamma };
MultiPoly lambda_gamma(const BundleRoots& roots, LambdaGamma which);

/// Coefficient of y^i in a class built by lambda_class or gamma_class, for i = 0..max.
std::vector<MultiPoly> y_components(const MultiPoly& total, int max);

/// Weights w_0..w_d with w_j = sum_{i=j}^{d} (-1)^j C(d-j, d-i) y^{i+j-d}.
std::vector<LaurentScalar> tilde_lambda_coeffs(int d);

}  // namespace chiy
