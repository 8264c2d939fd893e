#include "helpers.hpp"
#include "mpext/errors.hpp"
#include "mpext/random.hpp"

using namespace mpext;
using namespace testing;

namespace {

// Coordinatewise residuation written out from the definition sup{λ : λy ≤ x}:
// each coordinate with y_i finite bounds λ by x_i - y_i (or forces ε when x_i = ε).
ExtendedScalar residual_by_hand(const Vector& x, const Vector& y) {
  std::optional<ExtendedScalar> best;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (y[i].is_eps()) continue;
    const auto bound = x[i].is_eps() ? eps : ExtendedScalar::finite(x[i].value() - y[i].value());
    best = best ? meet(*best, bound) : bound;
  }
  return best.value_or(top);
}

}  // namespace

TEST_CASE("join") {
  CHECK(join(Vector{q(1), eps}, vq({0, 2})) == vq({1, 2}));
  const auto x = vq({4, -1});
  CHECK(join(x, x) == x);
  CHECK(join(x, bottom(2)) == x);
  CHECK_THROWS_AS(join(vq({1}), vq({1, 2})), DimensionMismatch);
}

TEST_CASE("leq_vec") {
  CHECK(leq_vec(vq({0, 1}), vq({0, 2})));
  CHECK(leq_vec(bottom(2), vq({-5, 3})));
  CHECK_FALSE(leq_vec(vq({1, 0}), vq({0, 1})));
}

TEST_CASE("scale") {
  CHECK(scale(q(2), vq({1, 3})) == vq({3, 5}));
  CHECK(scale(eps, vq({1, 3})) == bottom(2));
  CHECK(scale(e, vq({1, 3})) == vq({1, 3}));
  CHECK_THROWS_AS(scale(top, vq({1})), PreconditionError);
}

TEST_CASE("residuate") {
  CHECK(residuate(vq({1, 3}), vq({0, 2})) == q(1));
  CHECK(residuate(vq({1, 3}), bottom(2)) == top);
  CHECK(residuate(bottom(2), vq({1, 3})) == eps);
  CHECK(residuate(bottom(2), bottom(2)) == top);
  CHECK(residuate(Vector{eps, q(5)}, Vector{eps, q(1)}) == q(4));
  CHECK(residuate(Vector{eps, q(5)}, Vector{q(0), q(1)}) == eps);
  CHECK_THROWS_AS(residuate(vq({1}), vq({1, 2})), DimensionMismatch);
}

TEST_CASE("min_plus_coupling") {
  CHECK(min_plus_coupling(vq({1, 3}), vq({0, -2})) == q(1));
  CHECK(min_plus_coupling(Vector{eps, q(3)}, vq({0, -2})) == eps);
}

TEST_CASE("residuation against the definition on random vectors") {
  SeededRng rng(21);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + i % 4;
    const auto x = rng.vector(n, 1, 4);
    const auto y = rng.vector(n, 1, 4);
    const auto r = residuate(x, y);
    CAPTURE(x);
    CAPTURE(y);
    REQUIRE(r == residual_by_hand(x, y));
    if (!y.is_bottom()) {
      CHECK(r.in_base());
      // Adjunction at the optimum and one step above it.
      CHECK(leq_vec(scale(r, y), x));
      if (r.is_finite()) CHECK_FALSE(leq_vec(scale(ExtendedScalar::finite(r.value() + Rational(1, 7)), y), x));
      const auto lam = rng.base_scalar();
      CHECK(leq_vec(scale(lam, y), x) == (lam <= r));
      CHECK(residuate(y, y) == e);
    }
    const auto mu = rng.base_scalar();
    CHECK(residuate(x, scale(mu, y)) == otimes_dot(invert(mu), r));
  }
}

TEST_CASE("residuation is increasing in x and decreasing in y") {
  SeededRng rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto a = rng.vector(3);
    const auto b = rng.vector(3);
    const auto y = rng.vector(3);
    CHECK(residuate(a, y) <= residuate(join(a, b), y));
    CHECK(residuate(y, join(a, b)) <= residuate(y, a));
  }
}

TEST_CASE("x/y equals the min-plus coupling with y inverted for finite y") {
  SeededRng rng(9);
  for (int i = 0; i < 500; ++i) {
    const auto x = rng.vector(3);
    const auto y = rng.vector(3, 0, 1);
    CHECK(residuate(x, y) == min_plus_coupling(x, invert_finite(y)));
  }
}

TEST_CASE("boolean points and indices round trip") {
  for (std::size_t m = 0; m < 4; ++m) CHECK(boolean_index(boolean_point(2, m)) == m);
  CHECK(boolean_point(2, 0) == bottom(2));
  CHECK(boolean_point(2, 1) == Vector{e, eps});
}
