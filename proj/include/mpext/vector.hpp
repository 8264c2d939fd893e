#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mpext/scalar.hpp"

namespace mpext {

/// Point of the free semimodule Kⁿ. Coordinates are ε or finite, never ⊤.
class Vector {
 public:
  Vector() = default;
  /// Throws PreconditionError if any coordinate is ⊤.
  explicit Vector(std::vector<ExtendedScalar> coords);
  Vector(std::initializer_list<ExtendedScalar> coords);

  std::size_t dim() const { return coords_.size(); }
  const ExtendedScalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<ExtendedScalar>& coords() const { return coords_; }
  bool is_bottom() const;

  friend bool operator==(const Vector&, const Vector&) = default;
  /// Lexicographic order, only for use as a container key. Not the semimodule order.
  friend bool operator<(const Vector& a, const Vector& b) { return a.coords_ < b.coords_; }

  std::string to_string() const;

 private:
  std::vector<ExtendedScalar> coords_;
};

/// inf X = (ε, ..., ε).
Vector bottom(std::size_t dim);

Vector join(const Vector& x, const Vector& y);
bool leq_vec(const Vector& x, const Vector& y);
/// λx coordinatewise. λ = ⊤ is rejected: ⊤x is left undefined.
Vector scale(const ExtendedScalar& lam, const Vector& x);

/// x/y = sup{λ ∈ K : λy ≤ x}, valued in K ∪ {⊤}.
ExtendedScalar residuate(const Vector& x, const Vector& y);

/// π_μ(x, y) = min_i x_i ⊗ y_i. Arguments must not carry ⊤, so y is a Vector too.
ExtendedScalar min_plus_coupling(const Vector& x, const Vector& y);

/// Coordinatewise inverse of an all-finite vector (so that π_μ(x, y⁻¹) makes sense).
Vector invert_finite(const Vector& y);

void require_same_dim(const Vector& x, const Vector& y);

}  // namespace mpext
