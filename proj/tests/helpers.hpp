#pragma once

#include <doctest.h>

#include "mpext/function.hpp"
#include "mpext/scalar.hpp"
#include "mpext/vector.hpp"

namespace testing {

using mpext::ExtendedScalar;
using mpext::Rational;
using mpext::Vector;

inline ExtendedScalar q(std::int64_t n, std::int64_t d = 1) { return ExtendedScalar::finite(Rational(n, d)); }
inline const ExtendedScalar eps = ExtendedScalar::eps();
inline const ExtendedScalar top = ExtendedScalar::top();
inline const ExtendedScalar e = ExtendedScalar::unit();

inline Vector vq(std::initializer_list<std::int64_t> xs) {
  std::vector<ExtendedScalar> c;
  for (auto x : xs) c.push_back(q(x));
  return Vector(std::move(c));
}

inline mpext::Function fingen(std::vector<mpext::Generator> g) { return mpext::Function::fingen(std::move(g)); }

}  // namespace testing

namespace doctest {
template <>
struct StringMaker<mpext::ExtendedScalar> {
  static String convert(const mpext::ExtendedScalar& a) { return a.to_string().c_str(); }
};
template <>
struct StringMaker<mpext::Vector> {
  static String convert(const mpext::Vector& v) { return v.to_string().c_str(); }
};
}  // namespace doctest
