#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mpext/scalar.hpp"
#include "mpext/vector.hpp"

namespace mpext {

/// One term c ⊗ (x/y) of a finitely generated topical function.
struct Generator {
  Vector y;
  ExtendedScalar c;
};

enum class KnownClass { Topical, AntiTopical, Unknown };

/// Immutable handle to a function X → K̄.
///
/// Cheap to copy; the representation is shared. Construction validates
/// its invariants, so every handle that exists is well-formed.
class Function {
 public:
  struct FinGen {
    std::vector<Generator> generators;
  };
  /// Total map on Bⁿ. values[mask] is the value at the point whose
  /// coordinate i is e exactly when bit i of mask is set.
  struct Table {
    std::size_t dim;
    std::vector<ExtendedScalar> values;
  };
  struct InverseOf {
    std::shared_ptr<const Function> inner;
  };
  struct Constant {
    ExtendedScalar value;
  };
  /// Arbitrary callable, e.g. a conjugate viewed as a function of y.
  struct Callable {
    std::function<ExtendedScalar(const Vector&)> fn;
    std::string name;
    KnownClass known = KnownClass::Unknown;
  };
  using Repr = std::variant<FinGen, Table, InverseOf, Constant, Callable>;

  /// ⊕_j c_j ⊗ (x/y_j). Generators need y_j ≠ inf X and c_j ≠ ε; an empty
  /// list yields the constant ε.
  static Function fingen(std::vector<Generator> generators);
  static Function table(std::size_t dim, std::vector<ExtendedScalar> values);
  static Function inverse_of(const Function& f);
  static Function constant(const ExtendedScalar& value);
  static Function callable(std::function<ExtendedScalar(const Vector&)> fn, std::string name,
                           KnownClass known = KnownClass::Unknown);

  ExtendedScalar operator()(const Vector& x) const;
  ExtendedScalar eval(const Vector& x) const { return (*this)(x); }

  /// Classification that follows from the representation alone, without probing.
  KnownClass known_class() const;
  /// Fixed domain dimension, if the representation pins one.
  std::optional<std::size_t> dim() const;

  const Repr& repr() const { return *repr_; }
  /// Generator list when this is a finitely generated function, else nullptr.
  const std::vector<Generator>* generators() const;
  std::string describe() const;

 private:
  explicit Function(Repr repr) : repr_(std::make_shared<const Repr>(std::move(repr))) {}

  std::shared_ptr<const Repr> repr_;
};

/// Index of a Boolean point in the table layout; throws PreconditionError for
/// coordinates outside {ε, e}.
std::size_t boolean_index(const Vector& x);
Vector boolean_point(std::size_t dim, std::size_t mask);

/// Tabulate any function over Bⁿ.
Function tabulate(std::size_t dim, const std::function<ExtendedScalar(const Vector&)>& fn);

/// s_{y,d}(x) = inf{x/y, d}.
ExtendedScalar s_yd(const Vector& y, const ExtendedScalar& d, const Vector& x);
/// s̄_{y,d}(x) = sup{(x/y)⁻¹, d}.
ExtendedScalar sbar_yd(const Vector& y, const ExtendedScalar& d, const Vector& x);

}  // namespace mpext
