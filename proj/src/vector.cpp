#include "mpext/vector.hpp"

#include <algorithm>

#include "mpext/errors.hpp"

namespace mpext {

Vector::Vector(std::vector<ExtendedScalar> coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_) {
    if (c.is_top()) throw PreconditionError("vector coordinates must lie in K, got top");
  }
}

Vector::Vector(std::initializer_list<ExtendedScalar> coords)
    : Vector(std::vector<ExtendedScalar>(coords)) {}

bool Vector::is_bottom() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const auto& c) { return c.is_eps(); });
}

std::string Vector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].to_string();
  }
  return out + ")";
}

void require_same_dim(const Vector& x, const Vector& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch(x.dim(), y.dim());
}

Vector bottom(std::size_t dim) { return Vector(std::vector<ExtendedScalar>(dim)); }

Vector join(const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  std::vector<ExtendedScalar> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = oplus(x[i], y[i]);
  return Vector(std::move(out));
}

bool leq_vec(const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (y[i] < x[i]) return false;
  }
  return true;
}

Vector scale(const ExtendedScalar& lam, const Vector& x) {
  if (lam.is_top()) throw PreconditionError("scalar action by top is undefined");
  std::vector<ExtendedScalar> out(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out[i] = otimes(lam, x[i]);
  return Vector(std::move(out));
}

ExtendedScalar residuate(const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  // Coordinates with y_i = ε constrain nothing; if all of them are ε the
  // feasible set is all of K and the sup is ⊤.
  ExtendedScalar best = ExtendedScalar::top();
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (y[i].is_eps()) continue;
    best = meet(best, residual_scalar(x[i], y[i]));
    if (best.is_eps()) break;
  }
  return best;
}

ExtendedScalar min_plus_coupling(const Vector& x, const Vector& y) {
  require_same_dim(x, y);
  ExtendedScalar best = ExtendedScalar::top();
  for (std::size_t i = 0; i < x.dim(); ++i) best = meet(best, otimes(x[i], y[i]));
  return best;
}

Vector invert_finite(const Vector& y) {
  std::vector<ExtendedScalar> out(y.dim());
  for (std::size_t i = 0; i < y.dim(); ++i) {
    if (!y[i].is_finite()) throw PreconditionError("invert_finite needs finite coordinates");
    out[i] = invert(y[i]);
  }
  return Vector(std::move(out));
}

}  // namespace mpext
