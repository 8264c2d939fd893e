#pragma once

#include <cstdint>
#include <random>

#include "mpext/function.hpp"
#include "mpext/vector.hpp"

namespace mpext {

/// Seeded generator for test populations.
///
/// Draws use the raw 64-bit engine output reduced by modulo, never the
/// standard distributions, so the sequence is identical across standard
/// library implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi] (modulo bias is irrelevant at these ranges).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(unsigned numerator, unsigned denominator);

  /// Numerator in [-20, 20], denominator in [1, 6].
  Rational rational();
  /// Finite value, ε with probability eps_num / eps_den.
  ExtendedScalar base_scalar(unsigned eps_num = 1, unsigned eps_den = 6);
  /// Any of ε, finite or ⊤ (one in eight each for the infinite ones).
  ExtendedScalar extended_scalar();
  Vector vector(std::size_t dim, unsigned eps_num = 1, unsigned eps_den = 6);
  /// Vector different from inf X.
  Vector nonbottom_vector(std::size_t dim, unsigned eps_num = 1, unsigned eps_den = 6);
  /// Finitely generated topical function with 1..max_generators terms and
  /// finite coefficients.
  Function fingen(std::size_t dim, std::size_t max_generators);

 private:
  std::mt19937_64 engine_;
};

}  // namespace mpext
