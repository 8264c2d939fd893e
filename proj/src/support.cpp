#include "mpext/support.hpp"

#include "mpext/characterize.hpp"
#include "mpext/errors.hpp"

namespace mpext {
namespace {

bool is_topical_for(const Function& f, const ProbeSet& probes) {
  if (f.known_class() == KnownClass::Topical) return true;
  return probes.exhaustive() && check_topical(f, probes).pass;
}

}  // namespace

SupportChecker::SupportChecker(Function f, ProbeSet probes)
    : f_(std::move(f)), probes_(std::move(probes)), topical_(is_topical_for(f_, probes_)) {
  values_.reserve(probes_.points().size());
  for (const auto& x : probes_.points()) values_.push_back(f_(x));
}

template <class Ok>
std::optional<Vector> SupportChecker::first_failure(std::initializer_list<Vector> extra, Ok ok) const {
  const auto& pts = probes_.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!ok(pts[i], values_[i])) return pts[i];
  }
  for (const auto& x : extra) {
    require_same_dim(x, pts.front());
    if (!probes_.contains(x) && !ok(x, f_(x))) return x;
  }
  return std::nullopt;
}

void SupportChecker::require_point_hypotheses(const Vector& x0, const Vector& y) const {
  require_same_dim(x0, y);
  if (y.is_bottom()) throw PreconditionError("support points must differ from inf X");
  if (!topical_) throw PreconditionError("support set at a point needs a topical function");
  const auto fx0 = f_(x0);
  if (!fx0.is_finite()) {
    throw PreconditionError("support set at a point needs f(x0) in K \\ {eps}, got " + fx0.to_string());
  }
}

Membership SupportChecker::supp(const Vector& y) const {
  if (y.is_bottom()) throw PreconditionError("support set excludes inf X");
  const auto bad = first_failure({y}, [&](const Vector& x, const ExtendedScalar& fx) { return residuate(x, y) <= fx; });
  Membership out{!bad, probes_.exhaustive(), bad};
  if (f_.known_class() == KnownClass::Topical) {
    const bool closed = ExtendedScalar::unit() <= f_(y);
    if (closed != out.member) {
      throw InternalConsistencyError("support membership closed form disagrees with probes at " +
                                     y.to_string());
    }
    out.certified = true;
  }
  return out;
}

Bound SupportChecker::reconstruct(const Vector& x) const {
  const auto fx = f_(x);
  if (fx.is_top()) throw PreconditionError("reconstruction needs f(x) in K");
  if (!topical_) throw PreconditionError("reconstruction needs a topical function");
  const bool closed = f_.known_class() == KnownClass::Topical;
  Bound best{ExtendedScalar::eps(), Exactness::Exact, std::nullopt};
  auto consider = [&](const Vector& y, const ExtendedScalar& fy) {
    if (y.is_bottom()) return;
    if (!(closed ? ExtendedScalar::unit() <= fy : supp(y).member)) return;
    const auto t = residuate(x, y);
    if (!best.witness || best.value < t) {
      best.value = t;
      best.witness = y;
    }
  };
  const auto& pts = probes_.points();
  for (std::size_t i = 0; i < pts.size(); ++i) consider(pts[i], values_[i]);
  if (fx.is_finite()) {
    const auto c = canonical_support_point(f_, x);
    if (!probes_.contains(c)) consider(c, f_(c));
  }
  if (best.value != fx) {
    throw InternalConsistencyError("support-set reconstruction gives " + best.value.to_string() +
                                   " instead of " + fx.to_string());
  }
  return best;
}

Membership SupportChecker::at_point_X(const Vector& x0, const Vector& y) const {
  require_point_hypotheses(x0, y);
  const auto fx0 = f_(x0);
  const bool closed = f_(y) == ExtendedScalar::unit() && fx0 <= residuate(x0, y);

  auto bad = first_failure({x0, y}, [&](const Vector& x, const ExtendedScalar& fx) { return residuate(x, y) <= fx; });
  if (!bad && residuate(x0, y) != fx0) bad = x0;
  if (closed == bool(bad)) {
    throw InternalConsistencyError("X-support at " + x0.to_string() + ": closed form and defining form disagree at y = " +
                                   y.to_string());
  }
  return {closed, true, bad};
}

Membership SupportChecker::at_point_XK(const Vector& x0, const Vector& y, const ExtendedScalar& d) const {
  require_point_hypotheses(x0, y);
  if (d.is_top()) throw PreconditionError("support pairs need d in K");
  const auto fx0 = f_(x0);
  const bool closed = f_(y) == ExtendedScalar::unit() && fx0 <= s_yd(y, d, x0);

  auto ok = [&](const Vector& x, const ExtendedScalar& fx) { return s_yd(y, d, x) <= fx; };
  auto bad = d.is_finite() ? first_failure({x0, y, scale(d, y)}, ok) : first_failure({x0, y}, ok);
  if (!bad && s_yd(y, d, x0) != fx0) bad = x0;
  if (closed == bool(bad)) {
    throw InternalConsistencyError("(X,K)-support at " + x0.to_string() +
                                   ": closed form and defining form disagree at y = " + y.to_string() +
                                   ", d = " + d.to_string());
  }
  return {closed, true, bad};
}

Membership SupportChecker::subdiff(const Vector& x0, const Vector& y0) const {
  require_same_dim(x0, y0);
  const auto fx0 = f_(x0);
  if (fx0.is_top()) throw PreconditionError("subdifferential needs f(x0) in K");
  const auto factor = otimes(invert(residuate(x0, y0)), fx0);
  const auto bad = first_failure({x0, y0}, [&](const Vector& x, const ExtendedScalar& fx) {
    return otimes(residuate(x, y0), factor) <= fx;
  });
  return {!bad, probes_.exhaustive(), bad};
}

Membership supp_membership(const Function& f, const Vector& y, const ProbeSet& probes) {
  if (y.is_bottom()) throw PreconditionError("support set excludes inf X");
  return SupportChecker(f, probes).supp(y);
}

Vector canonical_support_point(const Function& f, const Vector& x0) {
  const auto fx0 = f(x0);
  if (!fx0.is_finite()) throw PreconditionError("canonical support point needs f(x0) in K \\ {eps}");
  return scale(invert(fx0), x0);
}

Bound supp_reconstruct(const Function& f, const Vector& x, const ProbeSet& probes) {
  return SupportChecker(f, probes).reconstruct(x);
}

Membership supp_at_point_X(const Function& f, const Vector& x0, const Vector& y, const ProbeSet& probes) {
  return SupportChecker(f, probes).at_point_X(x0, y);
}

Membership supp_at_point_XK(const Function& f, const Vector& x0, const Vector& y, const ExtendedScalar& d,
                            const ProbeSet& probes) {
  return SupportChecker(f, probes).at_point_XK(x0, y, d);
}

Membership phi_subdiff_membership(const Function& f, const Vector& x0, const Vector& y0,
                                  const ProbeSet& probes) {
  return SupportChecker(f, probes).subdiff(x0, y0);
}

}  // namespace mpext
