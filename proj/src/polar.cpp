#include "mpext/polar.hpp"

#include <algorithm>

#include "mpext/errors.hpp"

namespace mpext {

FiniteSet::FiniteSet(std::size_t dim, const std::vector<Vector>& points) : dim_(dim) {
  for (const auto& p : points) insert(p);
}

void FiniteSet::insert(const Vector& g) {
  if (g.dim() != dim_) throw DimensionMismatch(dim_, g.dim());
  if (!contains(g)) points_.push_back(g);
}

bool FiniteSet::contains(const Vector& x) const {
  return std::find(points_.begin(), points_.end(), x) != points_.end();
}

ExtendedScalar support_function(const FiniteSet& g, const Vector& y) {
  if (y.dim() != g.dim()) throw DimensionMismatch(g.dim(), y.dim());
  ExtendedScalar sigma;
  for (const auto& p : g.points()) sigma = oplus(sigma, residuate(p, y));
  return sigma;
}

bool polar_membership(const Vector& y, const FiniteSet& g) {
  return support_function(g, y) <= ExtendedScalar::unit();
}

bool bar_polar_membership(const Vector& y, const FiniteSet& g) {
  if (y.dim() != g.dim()) throw DimensionMismatch(g.dim(), y.dim());
  return std::all_of(g.points().begin(), g.points().end(),
                     [&](const Vector& p) { return residuate(y, p) <= ExtendedScalar::unit(); });
}

bool in_downward_hull(const Vector& x, const FiniteSet& g) {
  if (x.dim() != g.dim()) throw DimensionMismatch(g.dim(), x.dim());
  return std::any_of(g.points().begin(), g.points().end(), [&](const Vector& p) { return leq_vec(x, p); });
}

BipolarResult bipolar_membership(const Vector& x, const FiniteSet& g, Semifield semifield) {
  if (semifield == Semifield::Boolean) {
    throw PreconditionError("bipolar separation needs the rational instance");
  }
  if (x.dim() != g.dim()) throw DimensionMismatch(g.dim(), x.dim());
  if (in_downward_hull(x, g)) return {true, std::nullopt};

  Vector y = x;
  if (!x.is_bottom()) {
    // Outside the hull every g/x < e, so σ_G(x) < e. Scaling x by σ_G(x)
    // (or by -1 when σ_G(x) = ε) moves σ_G up to at most e and x/y above e.
    const auto sigma_x = support_function(g, x);
    const auto lam = sigma_x.is_finite() ? sigma_x : ExtendedScalar::finite(Rational(-1));
    y = scale(lam, x);
  }
  // x = inf X lands here only for G = ∅, where y = inf X separates.
  SeparationWitness w{y, support_function(g, y), residuate(x, y)};
  if (!(w.sigma_value <= ExtendedScalar::unit() && ExtendedScalar::unit() < w.x_over_y)) {
    throw InternalConsistencyError("separation witness " + y.to_string() + " fails for x = " +
                                   x.to_string());
  }
  return {false, std::move(w)};
}

bool is_upward(const std::vector<Vector>& domain, const std::function<bool(const Vector&)>& member) {
  for (const auto& a : domain) {
    if (!member(a)) continue;
    for (const auto& b : domain) {
      if (leq_vec(a, b) && !member(b)) return false;
    }
  }
  return true;
}

bool is_downward(const std::vector<Vector>& domain, const std::function<bool(const Vector&)>& member) {
  for (const auto& a : domain) {
    if (!member(a)) continue;
    for (const auto& b : domain) {
      if (leq_vec(b, a) && !member(b)) return false;
    }
  }
  return true;
}

namespace {

void require_small(const std::vector<Vector>& domain) {
  if (domain.size() > 64) throw PreconditionError("finite polarity domain limited to 64 points");
}

bool has(Subset s, std::size_t i) { return (s >> i) & 1U; }

}  // namespace

Subset polarity(const std::vector<Vector>& domain, Subset g, const Coupling& pi) {
  require_small(domain);
  Subset out = 0;
  for (std::size_t j = 0; j < domain.size(); ++j) {
    bool in = true;
    for (std::size_t i = 0; i < domain.size() && in; ++i) {
      if (has(g, i)) in = pi(domain[i], domain[j]) <= ExtendedScalar::unit();
    }
    if (in) out |= Subset{1} << j;
  }
  return out;
}

Subset dual_polarity(const std::vector<Vector>& domain, Subset p, const Coupling& pi) {
  require_small(domain);
  Subset out = 0;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const Subset single = polarity(domain, Subset{1} << i, pi);
    if ((p & ~single) == 0) out |= Subset{1} << i;
  }
  return out;
}

Coupling reflect(Coupling pi) {
  return [pi = std::move(pi)](const Vector& a, const Vector& b) { return pi(b, a); };
}

bool check_polarity_dual(const std::vector<Vector>& domain, const Coupling& pi) {
  require_small(domain);
  if (domain.size() > 16) throw PreconditionError("exhaustive subset check limited to 16 points");
  const auto bar = reflect(pi);
  const Subset count = Subset{1} << domain.size();
  for (Subset p = 0; p < count; ++p) {
    if (dual_polarity(domain, p, pi) != polarity(domain, p, bar)) return false;
  }
  return true;
}

Subset subset_of(const std::vector<Vector>& domain, const std::function<bool(const Vector&)>& member) {
  require_small(domain);
  Subset out = 0;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (member(domain[i])) out |= Subset{1} << i;
  }
  return out;
}

FiniteSet to_finite_set(const std::vector<Vector>& domain, Subset s) {
  FiniteSet out(domain.front().dim());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (has(s, i)) out.insert(domain[i]);
  }
  return out;
}

}  // namespace mpext
