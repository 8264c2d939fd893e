#include "mpext/conjugation.hpp"

#include "mpext/characterize.hpp"
#include "mpext/errors.hpp"

namespace mpext {
namespace {

enum class Direction { Sup, Inf };

// Probe points followed by the extra points not already among them.
std::vector<Vector> augmented(const ProbeSet& probes, std::initializer_list<Vector> extra) {
  std::vector<Vector> pts = probes.points();
  for (const auto& x : extra) {
    require_same_dim(x, pts.front());
    if (probes.contains(x)) continue;
    bool dup = false;
    for (std::size_t i = probes.points().size(); i < pts.size(); ++i) dup = dup || pts[i] == x;
    if (!dup) pts.push_back(x);
  }
  return pts;
}

template <class Term>
Bound optimise(Direction dir, const std::vector<Vector>& pts, Term term) {
  Bound best{dir == Direction::Sup ? ExtendedScalar::eps() : ExtendedScalar::top(), Exactness::Exact,
             std::nullopt};
  for (const auto& x : pts) {
    const auto t = term(x);
    const bool better = dir == Direction::Sup ? best.value < t : t < best.value;
    if (better || !best.witness) {
      best.value = t;
      best.witness = x;
    }
  }
  return best;
}

// Attaches the exactness tag. `closed` is the true optimum when known.
Bound finalise(Direction dir, Bound probe, const std::optional<ExtendedScalar>& closed,
               const ProbeSet& probes, const char* what) {
  if (probes.exhaustive()) return probe;
  if (closed) {
    const bool overshoot = dir == Direction::Sup ? *closed < probe.value : probe.value < *closed;
    if (overshoot) {
      throw InternalConsistencyError(std::string(what) + ": probe optimum " + probe.value.to_string() +
                                     " passes the closed form " + closed->to_string());
    }
    if (probe.value == *closed) return probe;
    return {*closed, Exactness::Exact, std::nullopt};
  }
  if (dir == Direction::Sup) {
    probe.exactness = probe.value.is_top() ? Exactness::Exact : Exactness::LowerBound;
  } else {
    probe.exactness = probe.value.is_eps() ? Exactness::Exact : Exactness::UpperBound;
  }
  return probe;
}

const ExtendedScalar* constant_value(const Function& f) {
  if (const auto* c = std::get_if<Function::Constant>(&f.repr())) return &c->value;
  return nullptr;
}

}  // namespace

std::string to_string(Exactness e) {
  switch (e) {
    case Exactness::Exact:
      return "exact";
    case Exactness::LowerBound:
      return "lower_bound";
    case Exactness::UpperBound:
      break;
  }
  return "upper_bound";
}

Bound conjugate_phi(const Function& f, const Vector& y, const ProbeSet& probes) {
  auto probe = optimise(Direction::Sup, augmented(probes, {y}),
                        [&](const Vector& x) { return otimes(invert(f(x)), residuate(x, y)); });
  std::optional<ExtendedScalar> closed;
  if (f.known_class() == KnownClass::Topical) {
    closed = invert(f(y));
  } else if (const auto* c = constant_value(f)) {
    // x/y is unbounded in x, so any constant below ⊤ gives ⊤.
    closed = c->is_top() ? ExtendedScalar::eps() : ExtendedScalar::top();
  }
  return finalise(Direction::Sup, std::move(probe), closed, probes, "phi-conjugate");
}

Bound conjugate_psi(const Function& f, const Vector& y, const ExtendedScalar& d,
                    const ProbeSet& probes) {
  if (d.is_top()) return conjugate_phi(f, y, probes);
  std::vector<Vector> pts = d.is_finite() ? augmented(probes, {y, scale(d, y)}) : augmented(probes, {y});
  auto probe = optimise(Direction::Sup, pts,
                        [&](const Vector& x) { return otimes(invert(f(x)), s_yd(y, d, x)); });
  std::optional<ExtendedScalar> closed;
  if (d.is_eps()) {
    closed = ExtendedScalar::eps();
  } else if (f.known_class() == KnownClass::Topical) {
    closed = invert(f(y));
  } else if (const auto* c = constant_value(f)) {
    closed = otimes(invert(*c), d);
  }
  return finalise(Direction::Sup, std::move(probe), closed, probes, "psi-conjugate");
}

Bound lower_conjugate_phi(const Function& f, const Vector& y, const ProbeSet& probes) {
  auto probe = optimise(Direction::Inf, augmented(probes, {y}), [&](const Vector& x) {
    return otimes_dot(invert(f(x)), invert(residuate(x, y)));
  });
  std::optional<ExtendedScalar> closed;
  if (f.known_class() == KnownClass::AntiTopical) {
    closed = invert(f(y));
  } else if (const auto* c = constant_value(f)) {
    closed = c->is_eps() ? ExtendedScalar::top() : ExtendedScalar::eps();
  }
  return finalise(Direction::Inf, std::move(probe), closed, probes, "phi-lower-conjugate");
}

Bound lower_conjugate_psi(const Function& f, const Vector& y, const ExtendedScalar& d,
                          const ProbeSet& probes) {
  if (d.is_eps()) return lower_conjugate_phi(f, y, probes);
  std::vector<Vector> pts =
      d.is_finite() ? augmented(probes, {y, scale(invert(d), y)}) : augmented(probes, {y});
  auto probe = optimise(Direction::Inf, pts,
                        [&](const Vector& x) { return otimes_dot(invert(f(x)), sbar_yd(y, d, x)); });
  std::optional<ExtendedScalar> closed;
  if (d.is_top()) {
    closed = ExtendedScalar::top();
  } else if (f.known_class() == KnownClass::AntiTopical) {
    closed = invert(f(y));
  } else if (const auto* c = constant_value(f)) {
    closed = c->is_eps() ? ExtendedScalar::top() : otimes(invert(*c), d);
  }
  return finalise(Direction::Inf, std::move(probe), closed, probes, "psi-lower-conjugate");
}

Bound conjugate_reflected(const Function& f, const Vector& x, const ProbeSet& probes) {
  auto probe = optimise(Direction::Sup, augmented(probes, {x}),
                        [&](const Vector& y) { return otimes(invert(f(y)), residuate(x, y)); });
  std::optional<ExtendedScalar> closed;
  if (const auto* c = constant_value(f); c && c->is_top()) closed = ExtendedScalar::eps();
  return finalise(Direction::Sup, std::move(probe), closed, probes, "reflected conjugate");
}

const Bound& PhiConjugate::at(const Vector& y) {
  auto it = cache_.find(y);
  if (it == cache_.end()) it = cache_.emplace(y, conjugate_phi(f_, y, probes_)).first;
  return it->second;
}

Bound biconjugate_phi(PhiConjugate& conj, const Vector& x) {
  const auto& f = conj.function();
  const auto& probes = conj.probes();
  const auto fx = f(x);
  Bound best{ExtendedScalar::eps(), Exactness::Exact, std::nullopt};
  for (const auto& y : augmented(probes, {x})) {
    const auto& h = conj.at(y);
    if (!h.exact()) continue;
    const auto t = otimes(invert(h.value), residuate(x, y));
    if (!best.witness || best.value < t) {
      best.value = t;
      best.witness = y;
    }
  }
  if (fx < best.value) {
    throw InternalConsistencyError("biconjugate " + best.value.to_string() + " exceeds f(x) = " +
                                   fx.to_string() + " for " + f.describe());
  }
  if (!probes.exhaustive() && best.value != fx && !best.value.is_top()) {
    best.exactness = Exactness::LowerBound;
  }
  return best;
}

Bound biconjugate_phi(const Function& f, const Vector& x, const ProbeSet& probes) {
  PhiConjugate conj(f, probes);
  return biconjugate_phi(conj, x);
}

namespace {

void require_exhaustive(const ProbeSet& probes) {
  if (!probes.exhaustive()) throw PreconditionError("tabulation needs an exhaustive probe set");
}

}  // namespace

Function tabulate_conjugate_phi(const Function& f, const ProbeSet& probes) {
  require_exhaustive(probes);
  return tabulate(probes.dim(), [&](const Vector& y) { return conjugate_phi(f, y, probes).value; });
}

Function tabulate_lower_conjugate_phi(const Function& f, const ProbeSet& probes) {
  require_exhaustive(probes);
  return tabulate(probes.dim(), [&](const Vector& y) { return lower_conjugate_phi(f, y, probes).value; });
}

Function tabulate_conjugate_reflected(const Function& f, const ProbeSet& probes) {
  require_exhaustive(probes);
  return tabulate(probes.dim(), [&](const Vector& x) { return conjugate_reflected(f, x, probes).value; });
}

BiconjugateFixedPoints check_tantibiconj(const Function& f, const ProbeSet& probes) {
  require_exhaustive(probes);
  BiconjugateFixedPoints out;
  out.topical = check_topical(f, probes).pass;
  out.anti_topical = check_anti_topical(f, probes).pass;
  out.const_top = is_constant_on(f, probes, ExtendedScalar::top());

  const auto upper = tabulate_conjugate_phi(f, probes);
  const auto upper_lower = tabulate_lower_conjugate_phi(upper, probes);
  const auto lower = tabulate_lower_conjugate_phi(f, probes);
  const auto lower_upper = tabulate_conjugate_phi(lower, probes);
  out.upper_then_lower = true;
  out.lower_then_upper = true;
  for (const auto& x : probes.points()) {
    out.upper_then_lower = out.upper_then_lower && upper_lower(x) == f(x);
    out.lower_then_upper = out.lower_then_upper && lower_upper(x) == f(x);
  }
  out.topical_iff_holds = out.topical == (!out.const_top && out.upper_then_lower);
  out.anti_topical_iff_holds = out.anti_topical == out.lower_then_upper;
  return out;
}

}  // namespace mpext
