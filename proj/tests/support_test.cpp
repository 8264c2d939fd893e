#include "helpers.hpp"
#include "mpext/errors.hpp"
#include "mpext/oracle.hpp"
#include "mpext/random.hpp"
#include "mpext/support.hpp"

using namespace mpext;
using namespace testing;

namespace {

const Function& sample() {
  static const Function f = fingen({{vq({0, 2}), q(1)}, {vq({3, 0}), q(-1, 2)}});
  return f;
}

}  // namespace

TEST_CASE("supp_membership") {
  const auto probes = ProbeSet::for_function(sample(), 2, 2);
  const auto y = vq({-1, 1});
  REQUIRE(e <= sample()(y));
  CHECK(supp_membership(sample(), y, probes).member);
  const auto z = vq({-5, -5});
  REQUIRE(sample()(z) < e);
  const auto m = supp_membership(sample(), z, probes);
  CHECK_FALSE(m.member);
  CHECK(m.violated_at);
  CHECK(m.certified);
  CHECK_THROWS_AS(supp_membership(sample(), bottom(2), probes), PreconditionError);
}

TEST_CASE("support sets are upward") {
  SeededRng rng(12);
  const auto probes = ProbeSet::for_function(sample(), 2, 2);
  for (int i = 0; i < 200; ++i) {
    const auto y = rng.nonbottom_vector(2);
    const auto z = join(y, rng.vector(2));
    if (supp_membership(sample(), y, probes).member) CHECK(supp_membership(sample(), z, probes).member);
  }
}

TEST_CASE("supp_reconstruct") {
  const auto probes = ProbeSet::for_function(sample(), 2, 2);
  const auto x = vq({2, 3});
  const auto b = supp_reconstruct(sample(), x, probes);
  CHECK(b.value == sample()(x));
  REQUIRE(b.witness);
  CHECK(supp_reconstruct(sample(), Vector{eps, eps}, probes).value == eps);
  CHECK_THROWS_AS(supp_reconstruct(fingen({{vq({0, 0}), top}}), vq({1, 1}), probes), PreconditionError);
}

TEST_CASE("canonical witnesses are members") {
  const auto probes = ProbeSet::for_function(sample(), 2, 2);
  const auto x0 = vq({1, 4});
  const auto y = canonical_support_point(sample(), x0);
  CHECK(y == scale(invert(sample()(x0)), x0));
  CHECK(supp_at_point_X(sample(), x0, y, probes).member);
  CHECK(supp_at_point_XK(sample(), x0, y, sample()(x0), probes).member);
  CHECK(phi_subdiff_membership(sample(), x0, y, probes).member);
}

TEST_CASE("support at a point rejects points off the level set") {
  const auto probes = ProbeSet::for_function(sample(), 2, 2);
  const auto x0 = vq({1, 4});
  const auto y = vq({-3, -3});
  REQUIRE(sample()(y) != e);
  CHECK_FALSE(supp_at_point_X(sample(), x0, y, probes).member);
  const auto c = canonical_support_point(sample(), x0);
  const auto d = ExtendedScalar::finite(sample()(x0).value() - Rational(1));
  CHECK_FALSE(supp_at_point_XK(sample(), x0, c, d, probes).member);
}

TEST_CASE("support at a point enforces its hypotheses") {
  const auto probes = ProbeSet::for_function(sample(), 2, 2);
  CHECK_THROWS_AS(supp_at_point_X(sample(), bottom(2), vq({0, 0}), probes), PreconditionError);
  CHECK_THROWS_AS(supp_at_point_X(sample(), vq({1, 1}), bottom(2), probes), PreconditionError);
  CHECK_THROWS_AS(supp_at_point_XK(sample(), vq({1, 1}), vq({0, 0}), top, probes), PreconditionError);
  CHECK_THROWS_AS(supp_at_point_X(Function::constant(e), vq({1, 1}), vq({0, 0}), probes), PreconditionError);
  CHECK_THROWS_AS(phi_subdiff_membership(Function::constant(top), vq({1, 1}), vq({0, 0}), probes),
                  PreconditionError);
}

TEST_CASE("subdifferential of the constant ε") {
  const auto domain = ProbeSet::boolean_domain(2);
  const auto f = Function::constant(eps);
  for (const auto& x0 : domain.points())
    for (const auto& y0 : domain.points()) CHECK(phi_subdiff_membership(f, x0, y0, domain).member);
}

TEST_CASE("topical Boolean functions with f(x) = ⊤ are not recovered from their support set") {
  // ⊤ off inf X and e off inf X share a support set; reconstruction needs f(x) ∈ K.
  const auto domain = ProbeSet::boolean_domain(2);
  const auto f_top = Function::table(2, {eps, top, top, top});
  const auto f_e = Function::table(2, {eps, e, e, e});
  for (std::size_t m = 1; m < 4; ++m) {
    const auto y = boolean_point(2, m);
    CHECK(supp_membership(f_top, y, domain).member == supp_membership(f_e, y, domain).member);
  }
  CHECK_THROWS_AS(supp_reconstruct(f_top, boolean_point(2, 3), domain), PreconditionError);
  CHECK(supp_reconstruct(f_e, boolean_point(2, 3), domain).value == e);
}
