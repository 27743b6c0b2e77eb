#pragma once

#include <memory>
#include <vector>

#include "chiy/genus.hpp"

namespace chiy {

/// Chow ring of P^{n_1} x ... x P^{n_s}, optionally followed by a tower of
/// projective bundles P(E) of split bundles.
///
/// Hyperplane classes h_i satisfy h_i^{n_i+1} = 0. A bundle stage of rank r
/// with roots x_1..x_r adds xi = c_1(O(1)) (O(1) the canonical quotient of E)
/// subject to prod_j (xi - x_j) = 0.
class ChowPresentation {
 public:
  struct Stage {
    std::vector<MultiPoly> roots;  // in the ring of the preceding level
    MultiPoly tail;                // xi^r - prod (xi - x_j), in this level's ring
  };

  static ChowPresentation point();
  static ChowPresentation projective_product(const std::vector<int>& dims);
  /// Adds P(E) -> (this) for the split bundle with the given Chern roots.
  ChowPresentation with_split_bundle(const std::vector<MultiPoly>& roots) const;

  int dimension() const { return data_->dimension; }
  const RingPtr& ring() const { return data_->ring; }
  const std::vector<int>& factors() const { return data_->factors; }
  const std::vector<Stage>& stages() const { return data_->stages; }
  bool has_stage() const { return !data_->stages.empty(); }
  /// The presentation with the last bundle stage removed.
  ChowPresentation base() const;

  MultiPoly hyperplane(size_t factor) const;
  MultiPoly tautological(size_t stage) const;
  MultiPoly tautological() const { return tautological(stages().size() - 1); }
  MultiPoly constant(const LaurentScalar& c) const { return MultiPoly::constant(ring(), c); }

  /// Normal form in the monomial basis h^a xi^b with a_i <= n_i, b_k < r_k.
  MultiPoly reduce(const MultiPoly& p) const;
  Monomial top_monomial() const;

  bool operator==(const ChowPresentation& other) const { return *ring() == *other.ring(); }

 private:
  struct Data {
    std::vector<int> factors;
    std::vector<Stage> stages;
    std::vector<RingPtr> level_rings;  // level_rings[k] = ring after k stages
    RingPtr ring;
    int dimension = 0;
  };
  explicit ChowPresentation(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// A reduced class in a Chow presentation with Q[y, 1/y] coefficients.
/// On these smooth models [X] = 1 and homology is identified with the ring.
class ChowElement {
 public:
  ChowElement(ChowPresentation pres, const MultiPoly& poly);
  static ChowElement one(const ChowPresentation& pres) { return {pres, pres.constant(1)}; }

  const ChowPresentation& presentation() const { return pres_; }
  const MultiPoly& poly() const { return poly_; }

  ChowElement operator+(const ChowElement& other) const;
  ChowElement operator-(const ChowElement& other) const;
  ChowElement operator*(const ChowElement& other) const;
  ChowElement scaled(const LaurentScalar& c) const { return {pres_, poly_.scaled(c)}; }
  bool operator==(const ChowElement& other) const { return poly_ == other.poly_; }
  /// Component of cohomological degree k.
  ChowElement degree_component(int k) const { return {pres_, poly_.homogeneous_component(k)}; }
  std::string to_string() const { return poly_.to_string(); }

 private:
  void check_same(const ChowElement& other) const;
  ChowPresentation pres_;
  MultiPoly poly_;
};

/// Chern-character image of a K-theory class; the same ring, different reading.
using GClassImage = ChowElement;

/// Coefficient of the top monomial.
LaurentScalar integrate(const ChowElement& e);

/// Push forward along the last bundle stage P(E) -> X: the coefficient of xi^{r-1}.
ChowElement pb_pushforward(const ChowElement& e);

/// Pull back a class from the base of the last stage.
ChowElement pullback(const ChowElement& base_class, const ChowPresentation& total);

/// Euler-sequence model of the tangent bundle: (n+1) copies of h minus O
/// per factor; each stage adds the relative tangent roots xi - x_j minus O.
BundleRoots tangent_data(const ChowPresentation& p);

/// prod of the genus series over the tangent roots, reduced.
ChowElement characteristic_class(const ChowPresentation& p, const GenusSpec& genus);
ChowElement hirzebruch_class(const ChowPresentation& p);

/// Chern-character images: e^{root}, and y^dim for the fundamental G-class.
GClassImage line_class_image(const ChowPresentation& p, const MultiPoly& root);
GClassImage fundamental_g_class(const ChowPresentation& p);
/// ch(lambda_y(T*X)) on the tangent model.
GClassImage lambda_cotangent_image(const ChowPresentation& p);

/// numerator * (1+y)^{-denominator_power}; the twisted Todd transform lands
/// here because intermediate components may carry (1+y) denominators.
struct TwistedClass {
  ChowElement numerator;
  unsigned denominator_power = 0;

  /// Cancels common factors of (1+y).
  TwistedClass normalized() const;
  /// The class itself; DomainError if a (1+y) denominator survives.
  ChowElement to_element() const;
  bool operator==(const TwistedClass& other) const;
};

/// td_{(1+y)}: ch(g) Td(TX), with the homological degree-i part scaled by (1+y)^{-i}.
TwistedClass todd_transform_twist(const GClassImage& g);

/// chi_y of a smooth degree-d hypersurface in P^n by adjunction.
LaurentScalar hypersurface_chi(int n, int d);

}  // namespace chiy
