#pragma once

#include <map>
#include <optional>
#include <string>

#include "mpext/function.hpp"
#include "mpext/probes.hpp"

namespace mpext {

/// How a reported sup/inf relates to the true value over all of X.
enum class Exactness { Exact, LowerBound, UpperBound };

std::string to_string(Exactness e);

/// A computed sup or inf.
///
/// `value` is the optimum over the (augmented) probes unless a closed form
/// pins the true value, in which case the closed-form value is reported and
/// the probe optimum is only required not to overshoot it. `witness` is the
/// probe attaining `value`, when one does.
struct Bound {
  ExtendedScalar value;
  Exactness exactness = Exactness::Exact;
  std::optional<Vector> witness;

  bool exact() const { return exactness == Exactness::Exact; }
};

/// f^{c(φ)}(y) = sup_x f(x)⁻¹ ⊗ x/y.
Bound conjugate_phi(const Function& f, const Vector& y, const ProbeSet& probes);
/// f^{c(ψ)}(y, d) = sup_x f(x)⁻¹ ⊗ s_{y,d}(x).
Bound conjugate_psi(const Function& f, const Vector& y, const ExtendedScalar& d,
                    const ProbeSet& probes);
/// f^{θ(φ)}(y) = inf_x f(x)⁻¹ ⊗̇ (x/y)⁻¹.
Bound lower_conjugate_phi(const Function& f, const Vector& y, const ProbeSet& probes);
/// f^{θ(ψ)}(y, d) = inf_x f(x)⁻¹ ⊗̇ s̄_{y,d}(x).
Bound lower_conjugate_psi(const Function& f, const Vector& y, const ExtendedScalar& d,
                          const ProbeSet& probes);
/// Conjugate for the reflected coupling φ̄(y, x) = φ(x, y):
/// f^{c(φ̄)}(x) = sup_y f(y)⁻¹ ⊗ x/y. This is the dual of the φ-conjugation.
Bound conjugate_reflected(const Function& f, const Vector& x, const ProbeSet& probes);

/// Memoised y ↦ f^{c(φ)}(y) over one probe set.
class PhiConjugate {
 public:
  PhiConjugate(Function f, ProbeSet probes) : f_(std::move(f)), probes_(std::move(probes)) {}

  const Bound& at(const Vector& y);
  const Function& function() const { return f_; }
  const ProbeSet& probes() const { return probes_; }

 private:
  Function f_;
  ProbeSet probes_;
  std::map<Vector, Bound> cache_;
};

/// (f^{c(φ)})^{c(φ̄)}(x). Only conjugate values certified exact enter the
/// outer sup, so the result is a lower bound of the true biconjugate; it is
/// exact when it reaches f(x) (the biconjugate never exceeds f) or ⊤.
Bound biconjugate_phi(PhiConjugate& conj, const Vector& x);
Bound biconjugate_phi(const Function& f, const Vector& x, const ProbeSet& probes);

/// y ↦ f^{c(φ)}(y) and y ↦ f^{θ(φ)}(y) tabulated over an exhaustive probe set.
Function tabulate_conjugate_phi(const Function& f, const ProbeSet& probes);
Function tabulate_lower_conjugate_phi(const Function& f, const ProbeSet& probes);
Function tabulate_conjugate_reflected(const Function& f, const ProbeSet& probes);

struct BiconjugateFixedPoints {
  bool topical = false;
  bool anti_topical = false;
  bool const_top = false;
  /// f^{c(φ)θ(φ)} = f.
  bool upper_then_lower = false;
  /// f^{θ(φ)c(φ)} = f.
  bool lower_then_upper = false;
  /// topical ⇔ (f ≢ ⊤ and upper_then_lower).
  bool topical_iff_holds = false;
  /// anti_topical ⇔ lower_then_upper.
  bool anti_topical_iff_holds = false;
};

/// Requires an exhaustive probe set.
BiconjugateFixedPoints check_tantibiconj(const Function& f, const ProbeSet& probes);

}  // namespace mpext
