#pragma once

#include <optional>

#include "mpext/conjugation.hpp"
#include "mpext/function.hpp"
#include "mpext/probes.hpp"

namespace mpext {

struct Membership {
  bool member = false;
  /// Decided for all of X (closed form or exhaustive probes), not just the probes.
  bool certified = false;
  /// Probe x at which the defining inequality fails, for non-members.
  std::optional<Vector> violated_at;
};

/// y ∈ Supp(f): x/y ≤ f(x) for all x. Needs y ≠ inf X.
///
/// For f of known topical class the answer is e ≤ f(y); the defining form
/// is still evaluated on the probes (plus y) and must agree.
Membership supp_membership(const Function& f, const Vector& y, const ProbeSet& probes);

/// max of x/y over support-set members y among the probes and the point
/// f(x)⁻¹ x. Needs f topical and f(x) ∈ K.
Bound supp_reconstruct(const Function& f, const Vector& x, const ProbeSet& probes);

/// f(x0)⁻¹ x0.
Vector canonical_support_point(const Function& f, const Vector& x0);

/// y ∈ Supp_X(f; x0), decided by f(y) = e and x0/y ≥ f(x0). The defining
/// form (x/y ≤ f(x) on probes, x0/y = f(x0)) is evaluated too and must
/// agree. Needs f topical, f(x0) ∈ K \ {ε} and y ≠ inf X.
Membership supp_at_point_X(const Function& f, const Vector& x0, const Vector& y,
                           const ProbeSet& probes);

/// (y, d) ∈ Supp_(X,K)(f; x0), decided by f(y) = e and s_{y,d}(x0) ≥ f(x0),
/// with the defining form cross-checked. Needs additionally d ∈ K.
Membership supp_at_point_XK(const Function& f, const Vector& x0, const Vector& y,
                            const ExtendedScalar& d, const ProbeSet& probes);

/// y0 ∈ ∂_φ f(x0): (x/y0) (x0/y0)⁻¹ f(x0) ≤ f(x) for all probes x.
/// Needs f(x0) ∈ K.
Membership phi_subdiff_membership(const Function& f, const Vector& x0, const Vector& y0,
                                  const ProbeSet& probes);

/// The queries above for one function and probe set, with f evaluated once
/// per probe. The free functions build a checker per call.
class SupportChecker {
 public:
  SupportChecker(Function f, ProbeSet probes);

  const Function& function() const { return f_; }
  const ProbeSet& probes() const { return probes_; }

  Membership supp(const Vector& y) const;
  Bound reconstruct(const Vector& x) const;
  Membership at_point_X(const Vector& x0, const Vector& y) const;
  Membership at_point_XK(const Vector& x0, const Vector& y, const ExtendedScalar& d) const;
  Membership subdiff(const Vector& x0, const Vector& y0) const;

 private:
  /// First probe x (then the extra points) at which ok(x, f(x)) fails.
  template <class Ok>
  std::optional<Vector> first_failure(std::initializer_list<Vector> extra, Ok ok) const;
  void require_point_hypotheses(const Vector& x0, const Vector& y) const;

  Function f_;
  ProbeSet probes_;
  std::vector<ExtendedScalar> values_;
  bool topical_;
};

}  // namespace mpext
