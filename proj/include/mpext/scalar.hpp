#pragma once

#include <compare>
#include <string>

#include "mpext/rational.hpp"

namespace mpext {

/// The two semifield instances the library computes over.
///
/// RationalMaxPlus: carrier Q ∪ {ε}, ⊕ = max, ⊗ = +, e = 0.
/// Boolean: carrier {ε, e}, the two-element sub-semifield of the former.
/// Both share one representation, so every scalar operation below is
/// instance-independent; the instance only restricts which finite values
/// may be constructed and which domains are enumerated.
enum class Semifield { RationalMaxPlus, Boolean };

std::string to_string(Semifield s);

/// Element of the enlargement K ∪ {⊤}: ε, a finite value, or ⊤.
///
/// Ordered totally with ε ≤ every finite value ≤ ⊤.
class ExtendedScalar {
 public:
  enum class Kind : unsigned char { Eps = 0, Finite = 1, Top = 2 };

  constexpr ExtendedScalar() = default;  // ε

  static constexpr ExtendedScalar eps() { return ExtendedScalar(); }
  static ExtendedScalar top() { return ExtendedScalar(Kind::Top, Rational()); }
  static ExtendedScalar unit() { return ExtendedScalar(Kind::Finite, Rational()); }
  static ExtendedScalar finite(Rational q) { return ExtendedScalar(Kind::Finite, q); }

  Kind kind() const { return kind_; }
  bool is_eps() const { return kind_ == Kind::Eps; }
  bool is_top() const { return kind_ == Kind::Top; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// True for elements of the base semifield K (everything except ⊤).
  bool in_base() const { return kind_ != Kind::Top; }
  /// Finite payload; only meaningful when is_finite().
  const Rational& value() const { return value_; }

  friend bool operator==(const ExtendedScalar&, const ExtendedScalar&) = default;
  friend std::strong_ordering operator<=>(const ExtendedScalar& a, const ExtendedScalar& b);

  /// "eps", "top", or the rational literal.
  std::string to_string() const;

 private:
  ExtendedScalar(Kind kind, Rational value) : kind_(kind), value_(value) {}

  Kind kind_ = Kind::Eps;
  Rational value_;
};

/// True when `a` is a legal value of instance `s` (Boolean admits only ε, e, ⊤).
bool admits(Semifield s, const ExtendedScalar& a);

/// Supremum under the extended order; ⊤ absorbs, ε is neutral.
ExtendedScalar oplus(const ExtendedScalar& a, const ExtendedScalar& b);
/// Infimum under the extended order.
ExtendedScalar meet(const ExtendedScalar& a, const ExtendedScalar& b);

/// Lower product ⊗: ε absorbs everything (including ⊤), then ⊤ absorbs.
ExtendedScalar otimes(const ExtendedScalar& a, const ExtendedScalar& b);
/// Upper product ⊗̇: ⊤ absorbs everything (including ε), then ε absorbs.
ExtendedScalar otimes_dot(const ExtendedScalar& a, const ExtendedScalar& b);

/// Group inverse on finite values, with ε⁻¹ = ⊤ and ⊤⁻¹ = ε.
///
/// Not a group inverse at ε and ⊤: ε⁻¹ ⊗ ε = ε and ⊤⁻¹ ⊗̇ ⊤ = ⊤, neither is e.
ExtendedScalar invert(const ExtendedScalar& a);

/// Scalar residuation lam / mu = lam ⊗̇ mu⁻¹, the largest ν ∈ K with mu ⊗ ν ≤ lam
/// (⊤ when that set is unbounded).
ExtendedScalar residual_scalar(const ExtendedScalar& lam, const ExtendedScalar& mu);

inline bool leq(const ExtendedScalar& a, const ExtendedScalar& b) { return a <= b; }

}  // namespace mpext
