#include <array>

#include "helpers.hpp"
#include "mpext/errors.hpp"
#include "mpext/random.hpp"

using namespace mpext;
using namespace testing;

TEST_CASE("rational arithmetic normalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(1, 3) - Rational(1, 2)) == Rational(-1, 6));
  CHECK(Rational(-7, 3).to_string() == "-7/3");
  CHECK(Rational(4).to_string() == "4");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse(""));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational overflow is reported, not wrapped") {
  const Rational big(INT64_MAX);
  CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
  CHECK_THROWS_AS(-Rational(INT64_MIN), std::overflow_error);
}

TEST_CASE("oplus") {
  CHECK(oplus(top, q(3)) == top);
  CHECK(oplus(eps, q(5)) == q(5));
  CHECK(oplus(q(2), q(3)) == q(3));
}

TEST_CASE("otimes") {
  CHECK(otimes(top, eps) == eps);
  CHECK(otimes(top, q(3)) == top);
  CHECK(otimes(q(2), q(3)) == q(5));
}

TEST_CASE("otimes_dot") {
  CHECK(otimes_dot(eps, top) == top);
  CHECK(otimes_dot(q(2), q(3)) == q(5));
  CHECK(otimes_dot(eps, q(4)) == eps);
}

TEST_CASE("ε/⊤ product table, cell by cell") {
  // Rows a, columns b over {ε, 1, ⊤}.
  const std::array<ExtendedScalar, 3> v = {eps, q(1), top};
  const ExtendedScalar lower[3][3] = {{eps, eps, eps}, {eps, q(2), top}, {eps, top, top}};
  const ExtendedScalar upper[3][3] = {{eps, eps, top}, {eps, q(2), top}, {top, top, top}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(otimes(v[i], v[j]) == lower[i][j]);
      CHECK(otimes_dot(v[i], v[j]) == upper[i][j]);
    }
}

TEST_CASE("invert") {
  CHECK(invert(eps) == top);
  CHECK(invert(top) == eps);
  CHECK(invert(q(3)) == q(-3));
  SeededRng rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = rng.extended_scalar();
    CHECK(invert(invert(a)) == a);
  }
}

TEST_CASE("residual_scalar") {
  CHECK(residual_scalar(q(5), q(3)) == q(2));
  CHECK(residual_scalar(eps, eps) == top);
  CHECK(residual_scalar(q(5), top) == eps);
}

TEST_CASE("residual_scalar is the sup of the adjunction") {
  // sup{ν ∈ K : μν ≤ λ} over a dense rational grid plus ε, compared with the closed form.
  const std::array<ExtendedScalar, 6> values = {eps, q(-3, 2), q(0), q(2), q(7, 3), top};
  for (const auto& lam : values)
    for (const auto& mu : values) {
      const auto r = residual_scalar(lam, mu);
      CAPTURE(lam);
      CAPTURE(mu);
      if (r.is_finite()) {
        CHECK(otimes(mu, r) <= lam);
        CHECK_FALSE(otimes(mu, ExtendedScalar::finite(r.value() + Rational(1, 1000))) <= lam);
      } else if (r.is_eps()) {
        CHECK_FALSE(otimes(mu, q(-1000)) <= lam);
      } else {
        CHECK(otimes(mu, q(1000)) <= lam);
      }
    }
}

TEST_CASE("order") {
  CHECK(eps <= top);
  CHECK_FALSE(q(3) <= q(2));
  SeededRng rng(3);
  for (int i = 0; i < 300; ++i) {
    const auto a = rng.extended_scalar();
    const auto b = rng.extended_scalar();
    CHECK(a <= a);
    CHECK((a <= b) == (oplus(a, b) == b));
    CHECK(meet(a, b) <= oplus(a, b));
  }
}

TEST_CASE("algebraic laws on random extended scalars") {
  SeededRng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto a = rng.extended_scalar();
    const auto b = rng.extended_scalar();
    const auto c = rng.extended_scalar();
    CHECK(otimes(a, b) == otimes(b, a));
    CHECK(otimes_dot(a, b) == otimes_dot(b, a));
    CHECK(otimes(otimes(a, b), c) == otimes(a, otimes(b, c)));
    CHECK(otimes_dot(otimes_dot(a, b), c) == otimes_dot(a, otimes_dot(b, c)));
    CHECK(otimes(a, e) == a);
    CHECK(otimes_dot(a, e) == a);
    CHECK(oplus(a, a) == a);
    CHECK(otimes(a, b) <= otimes_dot(a, b));
  }
}

TEST_CASE("the conventions at ε and ⊤ are not group inverses") {
  CHECK(otimes(invert(eps), eps) == eps);
  CHECK(otimes_dot(invert(top), top) == top);
  CHECK(otimes(invert(eps), eps) != e);
}

TEST_CASE("boolean instance admits only e as finite value") {
  CHECK(admits(Semifield::Boolean, e));
  CHECK(admits(Semifield::Boolean, eps));
  CHECK(admits(Semifield::Boolean, top));
  CHECK_FALSE(admits(Semifield::Boolean, q(1)));
  CHECK(admits(Semifield::RationalMaxPlus, q(1)));
}
