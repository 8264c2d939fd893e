#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace mpext {

__extension__ using WideInt = __int128;

/// Exact rational p/q with q > 0 and gcd(p, q) = 1.
///
/// Only the operations the max-plus carrier needs are provided: addition,
/// subtraction, negation and comparison. Every operation is overflow-checked
/// and throws std::overflow_error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  /// Accepts "p" or "p/q" (q may be negative; zero is rejected). Throws
  /// std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

 private:
  struct Raw {};
  constexpr Rational(Raw, std::int64_t num, std::int64_t den) : num_(num), den_(den) {}
  friend Rational make_reduced(WideInt num, WideInt den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace mpext
