#include "mpext/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mpext {
namespace {

using Wide = WideInt;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  constexpr Wide kMax = std::numeric_limits<std::uint64_t>::max();
  if (a <= kMax && b <= kMax) return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational make_reduced(Wide num, Wide den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den != 1) {
    Wide g = wide_gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  return Rational(Rational::Raw{}, narrow(num), narrow(den));
}

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) { *this = make_reduced(num, den); }

Rational Rational::operator-() const { return Rational(Raw{}, narrow(-Wide(num_)), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  std::int64_t sum = 0;
  if (a.den_ == 1 && b.den_ == 1 && !__builtin_add_overflow(a.num_, b.num_, &sum)) return Rational(sum);
  if (a.den_ == b.den_) return make_reduced(Wide(a.num_) + b.num_, a.den_);
  return make_reduced(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  std::int64_t diff = 0;
  if (a.den_ == 1 && b.den_ == 1 && !__builtin_sub_overflow(a.num_, b.num_, &diff)) return Rational(diff);
  if (a.den_ == b.den_) return make_reduced(Wide(a.num_) - b.num_, a.den_);
  return make_reduced(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t num = parse_int(text.substr(0, slash));
  std::int64_t den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num, den);
}

}  // namespace mpext
