#pragma once

#include <optional>
#include <string>

#include "mpext/function.hpp"
#include "mpext/probes.hpp"

namespace mpext {

struct Counterexample {
  Vector x;
  Vector y;
  std::optional<ExtendedScalar> d;
  std::string clause;
};

/// Outcome of a "for all probes" check.
struct Verdict {
  bool pass = true;
  std::optional<Counterexample> counterexample;
  std::string strength;

  explicit operator bool() const { return pass; }
  static Verdict ok(const ProbeSet& probes) { return {true, std::nullopt, probes.strength()}; }
  static Verdict fail(Counterexample c, const ProbeSet& probes) {
    return {false, std::move(c), probes.strength()};
  }
};

// Individual inequality forms. Each returns the first violating probe pair
// (x, y[, d]) in probe order, or nullopt.

/// f(y) ⊗ x/y ≤ f(x).
std::optional<Counterexample> violates_lower_phi(const Function& f, const ProbeSet& probes);
/// f(y) ⊗ s_{y,d}(x) ≤ f(x).
std::optional<Counterexample> violates_lower_psi(const Function& f, const ProbeSet& probes);
/// f(y) ⊗̇ (x/y)⁻¹ ≥ f(x).
std::optional<Counterexample> violates_upper_phi(const Function& f, const ProbeSet& probes);
/// f(y) ⊗̇ s̄_{y,d}(x) ≥ f(x).
std::optional<Counterexample> violates_upper_psi(const Function& f, const ProbeSet& probes);
/// f(x) ⊗ x/y ≤ f(y).
std::optional<Counterexample> violates_swapped_phi(const Function& f, const ProbeSet& probes);
/// f(x) ⊗ s_{y,d}(x) ≤ f(y).
std::optional<Counterexample> violates_swapped_psi(const Function& f, const ProbeSet& probes);
/// f(y) / (x/y) ≥ f(x).
std::optional<Counterexample> violates_residual_form(const Function& f, const ProbeSet& probes);

/// Topicality through f(inf X) = ε and the lower φ-form; the ψ-form is
/// evaluated on the same probes and must give the same verdict.
Verdict check_topical(const Function& f, const ProbeSet& probes);
/// Anti-topicality through f(inf X) = ⊤ and the upper φ-form, the swapped
/// form and the residual form. All three must agree.
Verdict check_anti_topical(const Function& f, const ProbeSet& probes);

/// Straight from the definition: increasing on comparable probe pairs and
/// f(λx) = λ f(x) for the λ sample.
Verdict is_topical_by_definition(const Function& f, const ProbeSet& probes);
/// Decreasing and f(λx) = λ⁻¹ ⊗̇ f(x).
Verdict is_anti_topical_by_definition(const Function& f, const ProbeSet& probes);

/// True when f(x) = value at every probe.
bool is_constant_on(const Function& f, const ProbeSet& probes, const ExtendedScalar& value);

enum class LowerFormClass { Topical, ConstTop, Neither };
enum class UpperFormClass { AntiTopical, ConstEps, Neither };

/// Splits the functions satisfying the lower φ-form into topical ones and ≡ ⊤.
LowerFormClass classify_lower_form(const Function& f, const ProbeSet& probes);
/// Splits the functions satisfying the upper φ-form into anti-topical ones and ≡ ε.
UpperFormClass classify_upper_form(const Function& f, const ProbeSet& probes);

std::string to_string(LowerFormClass c);
std::string to_string(UpperFormClass c);

}  // namespace mpext
