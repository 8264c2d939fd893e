#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mpext/scalar.hpp"
#include "mpext/vector.hpp"

namespace mpext {

/// Finite subset G of X. Points are kept in insertion order without repeats.
class FiniteSet {
 public:
  explicit FiniteSet(std::size_t dim) : dim_(dim) {}
  FiniteSet(std::size_t dim, const std::vector<Vector>& points);

  void insert(const Vector& g);
  std::size_t dim() const { return dim_; }
  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  const std::vector<Vector>& points() const { return points_; }
  bool contains(const Vector& x) const;

 private:
  std::size_t dim_;
  std::vector<Vector> points_;
};

/// σ_G(y) = sup_{g∈G} g/y (ε for empty G).
ExtendedScalar support_function(const FiniteSet& g, const Vector& y);
/// y ∈ G°  ⇔  σ_G(y) ≤ e.
bool polar_membership(const Vector& y, const FiniteSet& g);
/// y/g ≤ e for every g ∈ G.
bool bar_polar_membership(const Vector& y, const FiniteSet& g);

/// Some g ∈ G with x ≤ g.
bool in_downward_hull(const Vector& x, const FiniteSet& g);

/// y with σ_G(y) ≤ e < x/y.
struct SeparationWitness {
  Vector y;
  ExtendedScalar sigma_value;
  ExtendedScalar x_over_y;
};

struct BipolarResult {
  bool member = false;
  std::optional<SeparationWitness> witness;
};

/// Membership of x in the bipolar of a finite G over the rational instance.
///
/// Members are exactly the points of the downward hull of G. Every
/// non-member comes with a separating y, checked against σ_G(y) ≤ e < x/y
/// before it is returned. Throws PreconditionError for the Boolean instance,
/// where x/y never exceeds e and no separation exists.
BipolarResult bipolar_membership(const Vector& x, const FiniteSet& g,
                                 Semifield semifield = Semifield::RationalMaxPlus);

/// Order-closure over all comparable pairs of `domain`.
bool is_upward(const std::vector<Vector>& domain, const std::function<bool(const Vector&)>& member);
bool is_downward(const std::vector<Vector>& domain, const std::function<bool(const Vector&)>& member);

// Polarities on a finite domain. Subsets are bitmasks over domain indices.

using Subset = std::uint64_t;
using Coupling = std::function<ExtendedScalar(const Vector&, const Vector&)>;

/// Δ_π(G) = {y : π(g, y) ≤ e for all g ∈ G}.
Subset polarity(const std::vector<Vector>& domain, Subset g, const Coupling& pi);
/// Δ′(P) = {x : P ⊆ Δ_π({x})}, straight from the definition of the dual.
Subset dual_polarity(const std::vector<Vector>& domain, Subset p, const Coupling& pi);
/// π̄(y, x) = π(x, y).
Coupling reflect(Coupling pi);
/// Δ′_π = Δ_π̄ on every subset of `domain`.
bool check_polarity_dual(const std::vector<Vector>& domain, const Coupling& pi);

Subset subset_of(const std::vector<Vector>& domain, const std::function<bool(const Vector&)>& member);
FiniteSet to_finite_set(const std::vector<Vector>& domain, Subset s);

}  // namespace mpext
