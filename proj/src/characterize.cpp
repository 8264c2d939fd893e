#include "mpext/characterize.hpp"

#include "mpext/errors.hpp"

namespace mpext {
namespace {

std::vector<ExtendedScalar> values_on(const Function& f, const ProbeSet& probes) {
  std::vector<ExtendedScalar> out;
  out.reserve(probes.points().size());
  for (const auto& x : probes.points()) out.push_back(f(x));
  return out;
}

// Runs pred(x_index, y_index, residual) over all ordered probe pairs.
template <class Pred>
std::optional<Counterexample> scan_pairs(const ProbeSet& probes, const char* clause, Pred pred) {
  const auto& pts = probes.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (!pred(i, j, residuate(pts[i], pts[j]))) return Counterexample{pts[i], pts[j], std::nullopt, clause};
    }
  }
  return std::nullopt;
}

template <class Pred>
std::optional<Counterexample> scan_pairs_d(const ProbeSet& probes, const char* clause, Pred pred) {
  const auto& pts = probes.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const auto r = residuate(pts[i], pts[j]);
      for (const auto& d : probes.ds()) {
        if (!pred(i, j, r, d)) return Counterexample{pts[i], pts[j], d, clause};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Counterexample> violates_lower_phi(const Function& f, const ProbeSet& probes) {
  const auto v = values_on(f, probes);
  return scan_pairs(probes, "f(y) (x/y) <= f(x)",
                    [&](auto i, auto j, const auto& r) { return otimes(v[j], r) <= v[i]; });
}

std::optional<Counterexample> violates_lower_psi(const Function& f, const ProbeSet& probes) {
  const auto v = values_on(f, probes);
  return scan_pairs_d(probes, "f(y) s_{y,d}(x) <= f(x)", [&](auto i, auto j, const auto& r, const auto& d) {
    return otimes(v[j], meet(r, d)) <= v[i];
  });
}

std::optional<Counterexample> violates_upper_phi(const Function& f, const ProbeSet& probes) {
  const auto v = values_on(f, probes);
  return scan_pairs(probes, "f(y) .* (x/y)^-1 >= f(x)",
                    [&](auto i, auto j, const auto& r) { return v[i] <= otimes_dot(v[j], invert(r)); });
}

std::optional<Counterexample> violates_upper_psi(const Function& f, const ProbeSet& probes) {
  const auto v = values_on(f, probes);
  return scan_pairs_d(probes, "f(y) .* sbar_{y,d}(x) >= f(x)", [&](auto i, auto j, const auto& r, const auto& d) {
    return v[i] <= otimes_dot(v[j], oplus(invert(r), d));
  });
}

std::optional<Counterexample> violates_swapped_phi(const Function& f, const ProbeSet& probes) {
  const auto v = values_on(f, probes);
  return scan_pairs(probes, "f(x) (x/y) <= f(y)",
                    [&](auto i, auto j, const auto& r) { return otimes(v[i], r) <= v[j]; });
}

std::optional<Counterexample> violates_swapped_psi(const Function& f, const ProbeSet& probes) {
  const auto v = values_on(f, probes);
  return scan_pairs_d(probes, "f(x) s_{y,d}(x) <= f(y)", [&](auto i, auto j, const auto& r, const auto& d) {
    return otimes(v[i], meet(r, d)) <= v[j];
  });
}

std::optional<Counterexample> violates_residual_form(const Function& f, const ProbeSet& probes) {
  const auto v = values_on(f, probes);
  return scan_pairs(probes, "f(y) / (x/y) >= f(x)",
                    [&](auto i, auto j, const auto& r) { return v[i] <= residual_scalar(v[j], r); });
}

Verdict check_topical(const Function& f, const ProbeSet& probes) {
  const auto& inf = probes.points().front();
  if (!f(inf).is_eps()) return Verdict::fail({inf, inf, std::nullopt, "f(inf X) = eps"}, probes);
  auto phi = violates_lower_phi(f, probes);
  auto psi = violates_lower_psi(f, probes);
  if (phi.has_value() != psi.has_value()) {
    throw InternalConsistencyError("phi and psi forms of topicality disagree for " + f.describe());
  }
  if (phi) return Verdict::fail(std::move(*phi), probes);
  return Verdict::ok(probes);
}

Verdict check_anti_topical(const Function& f, const ProbeSet& probes) {
  const auto& inf = probes.points().front();
  if (!f(inf).is_top()) return Verdict::fail({inf, inf, std::nullopt, "f(inf X) = top"}, probes);
  auto upper = violates_upper_phi(f, probes);
  auto swapped = violates_swapped_phi(f, probes);
  auto residual = violates_residual_form(f, probes);
  if (upper.has_value() != swapped.has_value() || upper.has_value() != residual.has_value()) {
    throw InternalConsistencyError("anti-topicality forms disagree for " + f.describe());
  }
  if (upper) return Verdict::fail(std::move(*upper), probes);
  return Verdict::ok(probes);
}

Verdict is_topical_by_definition(const Function& f, const ProbeSet& probes) {
  const auto& pts = probes.points();
  const auto v = values_on(f, probes);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (leq_vec(pts[i], pts[j]) && !(v[i] <= v[j])) {
        return Verdict::fail({pts[i], pts[j], std::nullopt, "x <= y implies f(x) <= f(y)"}, probes);
      }
    }
    for (const auto& lam : probes.lambdas()) {
      if (f(scale(lam, pts[i])) != otimes(lam, v[i])) {
        return Verdict::fail({pts[i], scale(lam, pts[i]), lam, "f(lam x) = lam f(x)"}, probes);
      }
    }
  }
  return Verdict::ok(probes);
}

Verdict is_anti_topical_by_definition(const Function& f, const ProbeSet& probes) {
  const auto& pts = probes.points();
  const auto v = values_on(f, probes);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (leq_vec(pts[i], pts[j]) && !(v[j] <= v[i])) {
        return Verdict::fail({pts[i], pts[j], std::nullopt, "x <= y implies f(x) >= f(y)"}, probes);
      }
    }
    for (const auto& lam : probes.lambdas()) {
      if (f(scale(lam, pts[i])) != otimes_dot(invert(lam), v[i])) {
        return Verdict::fail({pts[i], scale(lam, pts[i]), lam, "f(lam x) = lam^-1 .* f(x)"}, probes);
      }
    }
  }
  return Verdict::ok(probes);
}

bool is_constant_on(const Function& f, const ProbeSet& probes, const ExtendedScalar& value) {
  for (const auto& x : probes.points()) {
    if (f(x) != value) return false;
  }
  return true;
}

LowerFormClass classify_lower_form(const Function& f, const ProbeSet& probes) {
  if (violates_lower_phi(f, probes)) return LowerFormClass::Neither;
  if (check_topical(f, probes)) return LowerFormClass::Topical;
  // With y = inf X the form reads f(inf X) ⊤ ≤ f(x), so f(inf X) ≠ ε forces ≡ ⊤.
  if (is_constant_on(f, probes, ExtendedScalar::top())) return LowerFormClass::ConstTop;
  throw InternalConsistencyError("lower form holds but f is neither topical nor top: " + f.describe());
}

UpperFormClass classify_upper_form(const Function& f, const ProbeSet& probes) {
  if (violates_upper_phi(f, probes)) return UpperFormClass::Neither;
  if (check_anti_topical(f, probes)) return UpperFormClass::AntiTopical;
  if (is_constant_on(f, probes, ExtendedScalar::eps())) return UpperFormClass::ConstEps;
  throw InternalConsistencyError("upper form holds but f is neither anti-topical nor eps: " +
                                 f.describe());
}

std::string to_string(LowerFormClass c) {
  switch (c) {
    case LowerFormClass::Topical:
      return "topical";
    case LowerFormClass::ConstTop:
      return "const_top";
    case LowerFormClass::Neither:
      break;
  }
  return "neither";
}

std::string to_string(UpperFormClass c) {
  switch (c) {
    case UpperFormClass::AntiTopical:
      return "anti_topical";
    case UpperFormClass::ConstEps:
      return "const_eps";
    case UpperFormClass::Neither:
      break;
  }
  return "neither";
}

}  // namespace mpext
