#include "mpext/scalar.hpp"

namespace mpext {

using Kind = ExtendedScalar::Kind;

std::string to_string(Semifield s) {
  return s == Semifield::Boolean ? "boolean" : "qmax";
}

std::strong_ordering operator<=>(const ExtendedScalar& a, const ExtendedScalar& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ == Kind::Finite) return a.value_ <=> b.value_;
  return std::strong_ordering::equal;
}

std::string ExtendedScalar::to_string() const {
  switch (kind_) {
    case Kind::Eps:
      return "eps";
    case Kind::Top:
      return "top";
    case Kind::Finite:
      break;
  }
  return value_.to_string();
}

bool admits(Semifield s, const ExtendedScalar& a) {
  if (s == Semifield::RationalMaxPlus || !a.is_finite()) return true;
  return a.value() == Rational(0);
}

ExtendedScalar oplus(const ExtendedScalar& a, const ExtendedScalar& b) { return a < b ? b : a; }

ExtendedScalar meet(const ExtendedScalar& a, const ExtendedScalar& b) { return b < a ? b : a; }

// The two products differ only on the {ε, ⊤} cell. The table is written out
// in full so each cell can be tested against its rule.
//
//   ⊗   | ε   fin  ⊤          ⊗̇  | ε   fin  ⊤
//   ε   | ε   ε    ε          ε   | ε   ε    ⊤
//   fin | ε   sum  ⊤          fin | ε   sum  ⊤
//   ⊤   | ε   ⊤    ⊤          ⊤   | ⊤   ⊤    ⊤
ExtendedScalar otimes(const ExtendedScalar& a, const ExtendedScalar& b) {
  if (a.is_eps() || b.is_eps()) return ExtendedScalar::eps();
  if (a.is_top() || b.is_top()) return ExtendedScalar::top();
  return ExtendedScalar::finite(a.value() + b.value());
}

ExtendedScalar otimes_dot(const ExtendedScalar& a, const ExtendedScalar& b) {
  if (a.is_top() || b.is_top()) return ExtendedScalar::top();
  if (a.is_eps() || b.is_eps()) return ExtendedScalar::eps();
  return ExtendedScalar::finite(a.value() + b.value());
}

ExtendedScalar invert(const ExtendedScalar& a) {
  switch (a.kind()) {
    case Kind::Eps:
      return ExtendedScalar::top();
    case Kind::Top:
      return ExtendedScalar::eps();
    case Kind::Finite:
      break;
  }
  return ExtendedScalar::finite(-a.value());
}

ExtendedScalar residual_scalar(const ExtendedScalar& lam, const ExtendedScalar& mu) {
  if (lam.is_finite() && mu.is_finite()) return ExtendedScalar::finite(lam.value() - mu.value());
  return otimes_dot(lam, invert(mu));
}

}  // namespace mpext
