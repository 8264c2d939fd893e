#include "mpext/oracle.hpp"

#include <array>
#include <functional>

#include "mpext/characterize.hpp"
#include "mpext/conjugation.hpp"
#include "mpext/errors.hpp"
#include "mpext/polar.hpp"
#include "mpext/probes.hpp"
#include "mpext/support.hpp"

// Everything here is brute force over the finite model: sups and infs are
// plain loops over Bⁿ, duals are infima over all 3^(2ⁿ) functions, and the
// (anti-)topical predicates come straight from the definitions. Library
// routines are only ever compared against these values, never trusted.

namespace mpext {
namespace {

using json::Json;
using Tab = std::vector<ExtendedScalar>;
using Mat = std::vector<Tab>;

const ExtendedScalar kEps = ExtendedScalar::eps();
const ExtendedScalar kE = ExtendedScalar::unit();
const ExtendedScalar kTop = ExtendedScalar::top();
const std::array<ExtendedScalar, 3> kBar = {kEps, kE, kTop};
const std::array<ExtendedScalar, 2> kBase = {kEps, kE};

constexpr Semifield kBool = Semifield::Boolean;

struct World {
  std::size_t n;
  std::size_t size;
  std::vector<Vector> pts;
  Mat phi;  // phi[x][y] = x/y
  Mat pmu;  // min-plus coupling
  std::vector<Function> fns;
  std::vector<Tab> tabs;
  ProbeSet domain;

  explicit World(std::size_t dim)
      : n(dim), size(std::size_t{1} << dim), domain(ProbeSet::boolean_domain(dim)) {
    for (std::size_t m = 0; m < size; ++m) pts.push_back(boolean_point(n, m));
    phi.assign(size, Tab(size));
    pmu.assign(size, Tab(size));
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = 0; y < size; ++y) {
        phi[x][y] = residuate(pts[x], pts[y]);
        pmu[x][y] = min_plus_coupling(pts[x], pts[y]);
      }
    }
    fns = enumerate_functions(n);
    for (const auto& f : fns) tabs.push_back(std::get<Function::Table>(f.repr()).values);
  }

  // Table index 0 is inf X; the order on Bⁿ is inclusion of bit masks.
  static bool below(std::size_t a, std::size_t b) { return (a & ~b) == 0; }

  Json point(std::size_t m) const { return json::encode(pts[m], kBool); }
  Json fn(std::size_t k) const { return json::encode(fns[k], kBool); }
};

Json sc(const ExtendedScalar& a) { return json::encode(a, kBool); }

// ---- definitions ---------------------------------------------------------

bool increasing(const World& w, const Tab& t) {
  for (std::size_t a = 0; a < w.size; ++a)
    for (std::size_t b = 0; b < w.size; ++b)
      if (World::below(a, b) && !(t[a] <= t[b])) return false;
  return true;
}

bool decreasing(const World& w, const Tab& t) {
  for (std::size_t a = 0; a < w.size; ++a)
    for (std::size_t b = 0; b < w.size; ++b)
      if (World::below(a, b) && !(t[b] <= t[a])) return false;
  return true;
}

// Homogeneity over K = {ε, e}: λ = e is trivial, λ = ε pins the value at inf X.
bool homogeneous(const World& w, const Tab& t) {
  for (std::size_t x = 0; x < w.size; ++x)
    for (const auto& lam : kBase)
      if (t[boolean_index(scale(lam, w.pts[x]))] != otimes(lam, t[x])) return false;
  return true;
}

bool anti_homogeneous(const World& w, const Tab& t) {
  for (std::size_t x = 0; x < w.size; ++x)
    for (const auto& lam : kBase)
      if (t[boolean_index(scale(lam, w.pts[x]))] != otimes_dot(invert(lam), t[x])) return false;
  return true;
}

bool topical(const World& w, const Tab& t) { return increasing(w, t) && homogeneous(w, t); }
bool anti_topical(const World& w, const Tab& t) { return decreasing(w, t) && anti_homogeneous(w, t); }

bool constant(const Tab& t, const ExtendedScalar& v) {
  for (const auto& a : t)
    if (a != v) return false;
  return true;
}

// ---- inequality forms, quantified over all x, y (and d ∈ K̄) -----------

template <class Pred>
bool for_all_xy(const World& w, Pred p) {
  for (std::size_t x = 0; x < w.size; ++x)
    for (std::size_t y = 0; y < w.size; ++y)
      if (!p(x, y)) return false;
  return true;
}

template <class Pred>
bool for_all_xyd(const World& w, Pred p) {
  return for_all_xy(w, [&](std::size_t x, std::size_t y) {
    for (const auto& d : kBar)
      if (!p(x, y, d)) return false;
    return true;
  });
}

bool lower_phi(const World& w, const Tab& t) {
  return for_all_xy(w, [&](auto x, auto y) { return otimes(t[y], w.phi[x][y]) <= t[x]; });
}
bool lower_psi(const World& w, const Tab& t) {
  return for_all_xyd(w, [&](auto x, auto y, auto d) { return otimes(t[y], meet(w.phi[x][y], d)) <= t[x]; });
}
bool upper_phi(const World& w, const Tab& t) {
  return for_all_xy(w, [&](auto x, auto y) { return t[x] <= otimes_dot(t[y], invert(w.phi[x][y])); });
}
bool upper_psi(const World& w, const Tab& t) {
  return for_all_xyd(w, [&](auto x, auto y, auto d) {
    return t[x] <= otimes_dot(t[y], oplus(invert(w.phi[x][y]), d));
  });
}
bool swapped_phi(const World& w, const Tab& t) {
  return for_all_xy(w, [&](auto x, auto y) { return otimes(t[x], w.phi[x][y]) <= t[y]; });
}
bool swapped_psi(const World& w, const Tab& t) {
  return for_all_xyd(w, [&](auto x, auto y, auto d) { return otimes(t[x], meet(w.phi[x][y], d)) <= t[y]; });
}
bool residual_form(const World& w, const Tab& t) {
  return for_all_xy(w, [&](auto x, auto y) { return t[x] <= residual_scalar(t[y], w.phi[x][y]); });
}

// ---- conjugates ----------------------------------------------------------

// g^{c(π)}(y) = sup_x g(x)⁻¹ ⊗ π(x, y).
Tab conj(const World& w, const Tab& g, const Mat& pi) {
  Tab out(w.size, kEps);
  for (std::size_t y = 0; y < w.size; ++y)
    for (std::size_t x = 0; x < w.size; ++x) out[y] = oplus(out[y], otimes(invert(g[x]), pi[x][y]));
  return out;
}

// h^{c(π̄)}(x) = sup_y h(y)⁻¹ ⊗ π̄(y, x) with π̄(y, x) = π(x, y).
Tab conj_reflected(const World& w, const Tab& h, const Mat& pi) {
  Tab out(w.size, kEps);
  for (std::size_t x = 0; x < w.size; ++x)
    for (std::size_t y = 0; y < w.size; ++y) out[x] = oplus(out[x], otimes(invert(h[y]), pi[x][y]));
  return out;
}

// g^{θ(φ)}(y) = inf_x g(x)⁻¹ ⊗̇ (x/y)⁻¹.
Tab lower_conj(const World& w, const Tab& g) {
  Tab out(w.size, kTop);
  for (std::size_t y = 0; y < w.size; ++y)
    for (std::size_t x = 0; x < w.size; ++x)
      out[y] = meet(out[y], otimes_dot(invert(g[x]), invert(w.phi[x][y])));
  return out;
}

ExtendedScalar conj_psi(const World& w, const Tab& g, std::size_t y, const ExtendedScalar& d) {
  ExtendedScalar out = kEps;
  for (std::size_t x = 0; x < w.size; ++x) out = oplus(out, otimes(invert(g[x]), meet(w.phi[x][y], d)));
  return out;
}

ExtendedScalar lower_conj_psi(const World& w, const Tab& g, std::size_t y, const ExtendedScalar& d) {
  ExtendedScalar out = kTop;
  for (std::size_t x = 0; x < w.size; ++x)
    out = meet(out, otimes_dot(invert(g[x]), oplus(invert(w.phi[x][y]), d)));
  return out;
}

Tab inverse(const Tab& t) {
  Tab out;
  for (const auto& a : t) out.push_back(invert(a));
  return out;
}

bool leq_tab(const Tab& a, const Tab& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] <= b[i])) return false;
  return true;
}

// h^{u'} = inf{g : g^u ≤ h} over every g, given the table of all g^u.
Tab dual(const World& w, const Tab& h, const std::vector<Tab>& all_conj) {
  Tab out(w.size, kTop);
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    if (!leq_tab(all_conj[k], h)) continue;
    for (std::size_t x = 0; x < w.size; ++x) out[x] = meet(out[x], w.tabs[k][x]);
  }
  return out;
}

// ---- runner --------------------------------------------------------------

struct Run {
  explicit Run(const World& world) : w(world) {}

  const World& w;
  std::size_t checked = 0;
  Json counterexample;
  Json data = Json::object();

  template <class Make>
  void require(bool ok, Make make) {
    ++checked;
    if (!ok && counterexample.is_null()) counterexample = make();
  }
};

Json with_fn(const World& w, std::size_t k, const char* clause) {
  return Json{{"clause", clause}, {"f", w.fn(k)}};
}

// ---- scalar laws ---------------------------------------------------------

void check_tunu(Run& r) {
  for (const auto& a : kBar)
    for (const auto& b : kBar) {
      r.require(otimes_dot(a, b) == invert(otimes(invert(a), invert(b))), [&] {
        return Json{{"clause", "a (.) b = (a^-1 (x) b^-1)^-1"}, {"a", sc(a)}, {"b", sc(b)}};
      });
      r.require(otimes(a, b) == invert(otimes_dot(invert(a), invert(b))), [&] {
        return Json{{"clause", "a (x) b = (a^-1 (.) b^-1)^-1"}, {"a", sc(a)}, {"b", sc(b)}};
      });
    }
}

template <class Body>
void for_triples(Body body) {
  for (const auto& l : kBar)
    for (const auto& m : kBar)
      for (const auto& b : kBar) body(l, m, b);
}

Json triple(const char* clause, const ExtendedScalar& l, const ExtendedScalar& m, const ExtendedScalar& b) {
  return Json{{"clause", clause}, {"lambda", sc(l)}, {"mu", sc(m)}, {"beta", sc(b)}};
}

void check_lineq(Run& r) {
  for_triples([&](const auto& l, const auto& m, const auto& b) {
    r.require((otimes(l, m) <= b) == (otimes(invert(b), m) <= invert(l)),
              [&] { return triple("l m <= b iff b^-1 m <= l^-1", l, m, b); });
    r.require((b <= otimes_dot(l, m)) == (invert(l) <= otimes_dot(invert(b), m)),
              [&] { return triple("l (.) m >= b iff b^-1 (.) m >= l^-1", l, m, b); });
  });
  // The tempting variants are not laws; both stated instances must break them.
  r.require((otimes(kEps, kE) <= kEps) && !(kE <= otimes(invert(kEps), kEps)),
            [&] { return triple("l m <= b vs m <= l^-1 b must differ", kEps, kE, kEps); });
  r.require((kTop <= otimes_dot(kTop, kE)) && !(otimes_dot(invert(kTop), kTop) <= kE),
            [&] { return triple("l (.) m >= b vs m >= l^-1 (.) b must differ", kTop, kE, kTop); });
  // Reversed inequalities are not equivalent either.
  r.require((kEps <= otimes(kEps, kEps)) && !(invert(kEps) <= otimes(invert(kEps), kEps)),
            [&] { return triple("reversed inequality must fail", kEps, kEps, kEps); });
}

void check_ctipmor(Run& r) {
  for_triples([&](const auto& l, const auto& m, const auto& v) {
    r.require((otimes(m, v) <= l) == (v <= otimes_dot(l, invert(m))),
              [&] { return Json{{"clause", "m v <= l iff v <= l (.) m^-1"}, {"lambda", sc(l)}, {"mu", sc(m)}, {"nu", sc(v)}}; });
  });
}

void check_lresid(Run& r) {
  const auto& w = r.w;
  for (std::size_t x = 0; x < w.size; ++x)
    for (std::size_t y = 0; y < w.size; ++y) {
      const auto& X = w.pts[x];
      const auto& Y = w.pts[y];
      auto pair = [&](const char* clause) { return Json{{"clause", clause}, {"x", w.point(x)}, {"y", w.point(y)}}; };
      for (const auto& mu : kBase) {
        r.require(residuate(X, scale(mu, Y)) == otimes_dot(invert(mu), residuate(X, Y)), [&] {
          auto j = pair("x/(mu y) = mu^-1 (.) x/y");
          j["mu"] = sc(mu);
          return j;
        });
      }
      if (y == 0) {
        r.require(w.phi[x][y] == kTop, [&] { return pair("x / inf X = top"); });
        continue;
      }
      // sup{λ ∈ K : λy ≤ x} by enumeration of K.
      ExtendedScalar sup = kEps;
      for (const auto& lam : kBase)
        if (leq_vec(scale(lam, Y), X)) sup = oplus(sup, lam);
      r.require(w.phi[x][y] == sup, [&] { return pair("x/y = sup{l : l y <= x}"); });
      r.require(leq_vec(scale(w.phi[x][y], Y), X), [&] { return pair("(x/y) y <= x"); });
      if (x == y) r.require(w.phi[x][y] == kE, [&] { return pair("y/y = e"); });
      if (x == 0) r.require(w.phi[x][y] == kEps, [&] { return pair("inf X / y = eps"); });
      bool finite_y = true;
      for (const auto& c : Y.coords()) finite_y = finite_y && c.is_finite();
      if (finite_y) {
        r.require(w.phi[x][y] == min_plus_coupling(X, invert_finite(Y)), [&] { return pair("x/y = pi_mu(x, y^-1)"); });
      }
    }
}

// ---- characterizations -------------------------------------------------

void check_lanti_bis1a(Run& r) {
  const auto& w = r.w;
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& t = w.tabs[k];
    const bool def = topical(w, t);
    const bool bottom_eps = t[0] == kEps;
    r.require(def == (bottom_eps && lower_phi(w, t)), [&] { return with_fn(w, k, "topical iff f(inf X) = eps and f(y) x/y <= f(x)"); });
    r.require(def == (bottom_eps && lower_psi(w, t)), [&] { return with_fn(w, k, "topical iff f(inf X) = eps and f(y) s_yd(x) <= f(x)"); });
    r.require(def == check_topical(w.fns[k], w.domain).pass, [&] { return with_fn(w, k, "library topicality check agrees"); });
    r.require(def == is_topical_by_definition(w.fns[k], w.domain).pass, [&] { return with_fn(w, k, "library definition check agrees"); });
    if (def) {
      // t_y(x) = f(y) x/y lies below f and touches it at y.
      for (std::size_t y = 0; y < w.size; ++y)
        for (std::size_t x = 0; x < w.size; ++x) {
          r.require(otimes(t[y], w.phi[x][y]) <= t[x], [&] { return with_fn(w, k, "t_y <= f"); });
        }
      for (std::size_t x = 1; x < w.size; ++x) {
        r.require(otimes(t[x], w.phi[x][x]) == t[x], [&] { return with_fn(w, k, "t_x(x) = f(x)"); });
      }
    }
  }
}

void check_lanti_bis1b(Run& r) {
  const auto& w = r.w;
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& t = w.tabs[k];
    const bool def = anti_topical(w, t);
    const bool bottom_top = t[0] == kTop;
    r.require(def == (bottom_top && upper_phi(w, t)), [&] { return with_fn(w, k, "anti-topical iff f(inf X) = top and f(y) (.) (x/y)^-1 >= f(x)"); });
    r.require(def == (bottom_top && upper_psi(w, t)), [&] { return with_fn(w, k, "anti-topical iff f(inf X) = top and f(y) (.) sbar_yd(x) >= f(x)"); });
    r.require(def == check_anti_topical(w.fns[k], w.domain).pass, [&] { return with_fn(w, k, "library anti-topicality check agrees"); });
    r.require(def == topical(w, inverse(t)), [&] { return with_fn(w, k, "anti-topical iff 1/f topical"); });
    r.require(def == check_topical(Function::inverse_of(w.fns[k]), w.domain).pass, [&] { return with_fn(w, k, "library round trip through inverse_of"); });
    if (def) {
      for (std::size_t y = 0; y < w.size; ++y)
        for (std::size_t x = 0; x < w.size; ++x)
          r.require(t[x] <= otimes_dot(invert(w.phi[x][y]), t[y]), [&] { return with_fn(w, k, "q_y >= f"); });
      for (std::size_t x = 1; x < w.size; ++x)
        r.require(otimes_dot(invert(w.phi[x][x]), t[x]) == t[x], [&] { return with_fn(w, k, "q_x(x) = f(x)"); });
    }
  }
}

void check_ttrei(Run& r) {
  const auto& w = r.w;
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& t = w.tabs[k];
    const bool def = anti_topical(w, t);
    const bool bottom_top = t[0] == kTop;
    r.require(def == (bottom_top && swapped_phi(w, t)), [&] { return with_fn(w, k, "anti-topical iff f(inf X) = top and f(x) x/y <= f(y)"); });
    r.require(def == (bottom_top && swapped_psi(w, t)), [&] { return with_fn(w, k, "anti-topical iff f(inf X) = top and f(x) s_yd(x) <= f(y)"); });
    r.require(def == (bottom_top && residual_form(w, t)), [&] { return with_fn(w, k, "anti-topical iff f(inf X) = top and f(y)/(x/y) >= f(x)"); });
  }
}

void check_c0(Run& r) {
  const auto& w = r.w;
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& t = w.tabs[k];
    const bool top = topical(w, t);
    const bool anti = anti_topical(w, t);
    r.require(!(top && anti), [&] { return with_fn(w, k, "not both topical and anti-topical"); });
    for (std::size_t y = 0; y < w.size; ++y)
      for (std::size_t x = 0; x < w.size; ++x) {
        if (top && t[y] == kTop) {
          r.require(t[x] == kTop || w.phi[x][y] == kEps, [&] { return with_fn(w, k, "topical, f(y) = top: f(x) = top or x/y = eps"); });
        }
        if (anti && t[y] == kEps) {
          r.require(t[x] == kEps || invert(w.phi[x][y]) == kTop, [&] { return with_fn(w, k, "anti-topical, f(y) = eps: f(x) = eps or (x/y)^-1 = top"); });
        }
      }
  }
  r.require(topical(w, Tab(w.size, kEps)), [&] { return Json{{"clause", "f = eps is topical"}}; });
  r.require(anti_topical(w, Tab(w.size, kTop)) && !topical(w, Tab(w.size, kTop)),
            [&] { return Json{{"clause", "f = top is anti-topical and not topical"}}; });
}

void check_cbun(Run& r) {
  const auto& w = r.w;
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& t = w.tabs[k];
    const bool a3 = topical(w, t) || constant(t, kTop);
    r.require(lower_phi(w, t) == a3, [&] { return with_fn(w, k, "f(y) x/y <= f(x) iff topical or f = top"); });
    r.require(lower_psi(w, t) == a3, [&] { return with_fn(w, k, "f(y) s_yd(x) <= f(x) iff topical or f = top"); });
    const bool b3 = anti_topical(w, t) || constant(t, kEps);
    r.require(upper_phi(w, t) == b3, [&] { return with_fn(w, k, "f(y) (.) (x/y)^-1 >= f(x) iff anti-topical or f = eps"); });
    r.require(upper_psi(w, t) == b3, [&] { return with_fn(w, k, "f(y) (.) sbar_yd(x) >= f(x) iff anti-topical or f = eps"); });

    const auto lower = classify_lower_form(w.fns[k], w.domain);
    const auto expect_lower = topical(w, t) ? LowerFormClass::Topical
                              : constant(t, kTop) ? LowerFormClass::ConstTop
                                                  : LowerFormClass::Neither;
    r.require(lower == expect_lower, [&] { return with_fn(w, k, "library lower-form classification agrees"); });
    const auto upper = classify_upper_form(w.fns[k], w.domain);
    const auto expect_upper = anti_topical(w, t) ? UpperFormClass::AntiTopical
                              : constant(t, kEps) ? UpperFormClass::ConstEps
                                                  : UpperFormClass::Neither;
    r.require(upper == expect_upper, [&] { return with_fn(w, k, "library upper-form classification agrees"); });
  }
}

// ---- conjugation ---------------------------------------------------------

struct UpperStatements {
  bool eq_phi, le_phi, eq_psi, le_psi;
};

// f^{c(φ)} vs f⁻¹, and f^{c(ψ)}(., d) vs f⁻¹ for d ∈ {e, ⊤}.
UpperStatements upper_statements(const World& w, const Tab& t) {
  const auto c = conj(w, t, w.phi);
  UpperStatements s{true, true, true, true};
  for (std::size_t y = 0; y < w.size; ++y) {
    s.eq_phi = s.eq_phi && c[y] == invert(t[y]);
    s.le_phi = s.le_phi && c[y] <= invert(t[y]);
    for (const auto& d : {kE, kTop}) {
      const auto v = conj_psi(w, t, y, d);
      s.eq_psi = s.eq_psi && v == invert(t[y]);
      s.le_psi = s.le_psi && v <= invert(t[y]);
    }
  }
  return s;
}

struct LowerStatements {
  bool ge_phi, eq_phi, ge_psi, eq_psi;
};

// f^{θ(φ)} vs f⁻¹, and f^{θ(ψ)}(., d) vs f⁻¹ for d ∈ K = {ε, e}.
LowerStatements lower_statements(const World& w, const Tab& t) {
  const auto c = lower_conj(w, t);
  LowerStatements s{true, true, true, true};
  for (std::size_t y = 0; y < w.size; ++y) {
    s.ge_phi = s.ge_phi && invert(t[y]) <= c[y];
    s.eq_phi = s.eq_phi && c[y] == invert(t[y]);
    for (const auto& d : kBase) {
      const auto v = lower_conj_psi(w, t, y, d);
      s.ge_psi = s.ge_psi && invert(t[y]) <= v;
      s.eq_psi = s.eq_psi && v == invert(t[y]);
    }
  }
  return s;
}

void check_radaug_d(Run& r) {
  const auto& w = r.w;
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& t = w.tabs[k];
    const auto s = upper_statements(w, t);
    const bool five = topical(w, t) || constant(t, kTop);
    r.require(s.eq_phi == five, [&] { return with_fn(w, k, "c(phi) = f^-1 iff topical or f = top"); });
    r.require(s.le_phi == five, [&] { return with_fn(w, k, "c(phi) <= f^-1 iff topical or f = top"); });
    r.require(s.eq_psi == five, [&] { return with_fn(w, k, "c(psi)(., d) = f^-1 for d != eps iff topical or f = top"); });
    r.require(s.le_psi == five, [&] { return with_fn(w, k, "c(psi)(., d) <= f^-1 for d != eps iff topical or f = top"); });
  }
}

void check_tconj(Run& r) {
  const auto& w = r.w;
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& t = w.tabs[k];
    const bool one = topical(w, t);
    const bool bottom_eps = t[0] == kEps;
    const auto s = upper_statements(w, t);
    r.require(one == (bottom_eps && s.eq_phi), [&] { return with_fn(w, k, "topical iff f(inf X) = eps and c(phi) = f^-1"); });
    r.require(one == (bottom_eps && s.le_phi), [&] { return with_fn(w, k, "topical iff f(inf X) = eps and c(phi) <= f^-1"); });
    r.require(one == (bottom_eps && s.eq_psi), [&] { return with_fn(w, k, "topical iff f(inf X) = eps and c(psi) = f^-1"); });
    r.require(one == (bottom_eps && s.le_psi), [&] { return with_fn(w, k, "topical iff f(inf X) = eps and c(psi) <= f^-1"); });

    // d = ε cannot join the list: c(ψ)(y, ε) = ε for every f.
    const auto c = conj(w, t, w.phi);
    for (std::size_t y = 0; y < w.size; ++y) {
      auto at = [&](const char* clause) {
        auto j = with_fn(w, k, clause);
        j["y"] = w.point(y);
        return j;
      };
      r.require(conj_psi(w, t, y, kEps) == kEps, [&] { return at("c(psi)(y, eps) = eps"); });
      r.require(conj_psi(w, t, y, kTop) == c[y], [&] { return at("c(psi)(y, top) = c(phi)(y)"); });
      r.require(conjugate_phi(w.fns[k], w.pts[y], w.domain).value == c[y], [&] { return at("library c(phi) agrees"); });
      for (const auto& d : kBar) {
        r.require(conjugate_psi(w.fns[k], w.pts[y], d, w.domain).value == conj_psi(w, t, y, d), [&] {
          auto j = at("library c(psi) agrees");
          j["d"] = sc(d);
          return j;
        });
      }
    }
  }
  const Tab top(w.size, kTop);
  r.require(constant(conj(w, top, w.phi), kEps), [&] { return Json{{"clause", "top^c(phi) = eps"}}; });
}

void check_tconj_antitop(Run& r) {
  const auto& w = r.w;
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& t = w.tabs[k];
    const bool one = anti_topical(w, t);
    const bool bottom_top = t[0] == kTop;
    const auto s = lower_statements(w, t);
    r.require(one == (bottom_top && s.ge_phi), [&] { return with_fn(w, k, "anti-topical iff f(inf X) = top and theta(phi) >= f^-1"); });
    r.require(one == (bottom_top && s.eq_phi), [&] { return with_fn(w, k, "anti-topical iff f(inf X) = top and theta(phi) = f^-1"); });
    r.require(one == (bottom_top && s.ge_psi), [&] { return with_fn(w, k, "anti-topical iff f(inf X) = top and theta(psi) >= f^-1"); });
    r.require(one == (bottom_top && s.eq_psi), [&] { return with_fn(w, k, "anti-topical iff f(inf X) = top and theta(psi) = f^-1"); });

    const auto c = lower_conj(w, t);
    for (std::size_t y = 0; y < w.size; ++y) {
      auto at = [&](const char* clause) {
        auto j = with_fn(w, k, clause);
        j["y"] = w.point(y);
        return j;
      };
      r.require(lower_conjugate_phi(w.fns[k], w.pts[y], w.domain).value == c[y], [&] { return at("library theta(phi) agrees"); });
      for (const auto& d : kBar) {
        r.require(lower_conjugate_psi(w.fns[k], w.pts[y], d, w.domain).value == lower_conj_psi(w, t, y, d), [&] {
          auto j = at("library theta(psi) agrees");
          j["d"] = sc(d);
          return j;
        });
      }
    }
  }
}

void check_cbun3(Run& r) {
  const auto& w = r.w;
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& t = w.tabs[k];
    const auto s = lower_statements(w, t);
    const bool five = anti_topical(w, t) || constant(t, kEps);
    r.require(s.ge_phi == five, [&] { return with_fn(w, k, "theta(phi) >= f^-1 iff anti-topical or f = eps"); });
    r.require(s.eq_phi == five, [&] { return with_fn(w, k, "theta(phi) = f^-1 iff anti-topical or f = eps"); });
    r.require(s.ge_psi == five, [&] { return with_fn(w, k, "theta(psi) >= f^-1 iff anti-topical or f = eps"); });
    r.require(s.eq_psi == five, [&] { return with_fn(w, k, "theta(psi) = f^-1 iff anti-topical or f = eps"); });
  }
}

std::vector<Tab> all_conjugates(const World& w, const Mat& pi) {
  std::vector<Tab> out;
  for (const auto& g : w.tabs) out.push_back(conj(w, g, pi));
  return out;
}

void check_tbiconj(Run& r) {
  const auto& w = r.w;
  Json fixed = Json::array();
  std::size_t fixed_nontopical = 0;
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& t = w.tabs[k];
    const auto bic = conj_reflected(w, conj(w, t, w.phi), w.phi);
    r.require(leq_tab(bic, t), [&] { return with_fn(w, k, "biconjugate <= f"); });
    if (topical(w, t) || constant(t, kTop)) {
      r.require(bic == t, [&] { return with_fn(w, k, "biconjugate = f for topical f and f = top"); });
    }
    PhiConjugate pc(w.fns[k], w.domain);
    for (std::size_t x = 0; x < w.size; ++x) {
      r.require(biconjugate_phi(pc, w.pts[x]).value == bic[x], [&] {
        auto j = with_fn(w, k, "library biconjugate agrees");
        j["x"] = w.point(x);
        return j;
      });
    }
    if (bic == t) {
      fixed.push_back(k);
      if (!topical(w, t) && !constant(t, kTop)) ++fixed_nontopical;
    }
  }
  r.data["fixed_points"] = fixed;
  r.data["fixed_points_neither_topical_nor_top"] = fixed_nontopical;
}

void check_tantibiconj(Run& r) {
  const auto& w = r.w;
  Json failing = Json::array();
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& t = w.tabs[k];
    const bool bic = lower_conj(w, conj(w, t, w.phi)) == t;
    const bool antibic = conj(w, lower_conj(w, t), w.phi) == t;
    r.require(topical(w, t) == (!constant(t, kTop) && bic), [&] { return with_fn(w, k, "topical iff f != top and c(phi) theta(phi) fixes f"); });
    r.require(anti_topical(w, t) == antibic, [&] { return with_fn(w, k, "anti-topical iff theta(phi) c(phi) fixes f"); });
    if (topical(w, t) != (!constant(t, kTop) && bic) || anti_topical(w, t) != antibic) failing.push_back(w.fn(k));
    const auto lib = check_tantibiconj(w.fns[k], w.domain);
    r.require(lib.upper_then_lower == bic && lib.lower_then_upper == antibic && lib.topical_iff_holds &&
                  lib.anti_topical_iff_holds,
              [&] { return with_fn(w, k, "library fixed-point report agrees"); });
  }
  r.data["failing_functions"] = failing;
}

void check_dual_against(Run& r, const Mat& pi, const Mat& expected_coupling, const char* clause) {
  const auto& w = r.w;
  const auto conjs = all_conjugates(w, pi);
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& h = w.tabs[k];
    r.require(dual(w, h, conjs) == conj_reflected(w, h, expected_coupling), [&] { return with_fn(w, k, clause); });
  }
}

void check_ll51(Run& r) {
  const auto& w = r.w;
  check_dual_against(r, w.phi, w.phi, "dual of c(phi) = c(reflected phi)");
  const auto conjs = all_conjugates(w, w.phi);
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& h = w.tabs[k];
    const auto refl = conj_reflected(w, h, w.phi);
    for (std::size_t x = 0; x < w.size; ++x) {
      r.require(conjugate_reflected(w.fns[k], w.pts[x], w.domain).value == refl[x], [&] {
        auto j = with_fn(w, k, "library reflected conjugate agrees");
        j["x"] = w.point(x);
        return j;
      });
    }
    // The chain of equivalences between the two dual inequalities, for every pair (g, h).
    for (std::size_t g = 0; g < w.tabs.size(); ++g) {
      const auto& gt = w.tabs[g];
      const bool a = leq_tab(conjs[g], h);
      const bool b = for_all_xy(w, [&](auto x, auto y) { return otimes(invert(gt[x]), w.phi[x][y]) <= h[y]; });
      const bool c = for_all_xy(w, [&](auto x, auto y) { return otimes(invert(h[y]), w.phi[x][y]) <= gt[x]; });
      const bool d = leq_tab(refl, gt);
      const bool fy = for_all_xy(w, [&](auto x, auto y) { return w.phi[x][y] <= otimes_dot(h[y], gt[x]); });
      r.require(a == b && b == c && c == d && d == fy, [&] {
        return Json{{"clause", "g^c <= h iff g^-1 phi <= h iff h^-1 phi <= g iff h^c(reflected) <= g iff phi <= h (.) g"},
                    {"g", w.fn(g)},
                    {"h", w.fn(k)}};
      });
    }
  }
}

void check_cor51(Run& r) {
  const auto& w = r.w;
  r.require(for_all_xy(w, [&](auto x, auto y) { return w.pmu[x][y] == w.pmu[y][x]; }),
            [&] { return Json{{"clause", "pi_mu is symmetric"}}; });
  check_dual_against(r, w.pmu, w.pmu, "dual of c(pi_mu) = c(pi_mu)");
  const auto conjs = all_conjugates(w, w.pmu);
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    r.require(dual(w, w.tabs[k], conjs) == conj(w, w.tabs[k], w.pmu), [&] { return with_fn(w, k, "self-dual in the same orientation"); });
  }
}

void check_lpartial(Run& r) {
  const auto& w = r.w;
  Json failing = Json::array();
  for (std::size_t y = 0; y < w.size; ++y) {
    Tab col(w.size);
    for (std::size_t x = 0; x < w.size; ++x) col[x] = w.phi[x][y];
    r.require(topical(w, col), [&] { return Json{{"clause", "x -> x/y topical"}, {"y", w.point(y)}}; });
    if (!topical(w, col)) failing.push_back(w.point(y));
    const auto fy = Function::table(w.n, col);
    r.require(check_topical(fy, w.domain).pass, [&] { return Json{{"clause", "library agrees x -> x/y topical"}, {"y", w.point(y)}}; });
  }
  for (std::size_t x = 0; x < w.size; ++x) {
    const Tab& row = w.phi[x];
    r.require(anti_topical(w, row), [&] { return Json{{"clause", "y -> x/y anti-topical"}, {"x", w.point(x)}}; });
    const auto fx = Function::table(w.n, row);
    r.require(check_anti_topical(fx, w.domain).pass, [&] { return Json{{"clause", "library agrees y -> x/y anti-topical"}, {"x", w.point(x)}}; });
  }
  r.data["y_with_non_topical_column"] = failing;
}

void check_rsecond(Run& r) {
  const auto& w = r.w;
  Json failing = Json::array();
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto c = conj(w, w.tabs[k], w.phi);
    r.require(anti_topical(w, c), [&] { return with_fn(w, k, "c(phi) anti-topical"); });
    if (!anti_topical(w, c)) failing.push_back(w.fn(k));
    r.require(check_anti_topical(tabulate_conjugate_phi(w.fns[k], w.domain), w.domain).pass,
              [&] { return with_fn(w, k, "library c(phi) passes anti-topicality check"); });
  }
  r.data["failing_functions"] = failing;
  // The alternative with the upper product misbehaves at f = ⊤, y = inf X.
  const Tab top(w.size, kTop);
  ExtendedScalar alt = kEps;
  for (std::size_t x = 0; x < w.size; ++x) alt = oplus(alt, otimes_dot(invert(top[x]), w.phi[x][0]));
  r.require(alt == kTop && conj(w, top, w.phi)[0] == kEps,
            [&] { return Json{{"clause", "top^c(phi)(inf X) = eps but the upper-product variant gives top"}, {"variant", sc(alt)}}; });
}

void check_rsecond_bis(Run& r) {
  const auto& w = r.w;
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& t = w.tabs[k];
    const auto c = lower_conj(w, t);
    if (constant(t, kEps)) {
      r.require(constant(c, kTop) && anti_topical(w, c), [&] { return with_fn(w, k, "eps^theta(phi) = top, anti-topical"); });
      for (std::size_t y = 0; y < w.size; ++y)
        for (const auto& d : kBar)
          r.require(lower_conj_psi(w, t, y, d) == kTop, [&] { return with_fn(w, k, "eps^theta(psi) = top"); });
    } else {
      r.require(topical(w, c), [&] { return with_fn(w, k, "theta(phi) topical for f != eps"); });
      r.require(check_topical(tabulate_lower_conjugate_phi(w.fns[k], w.domain), w.domain).pass,
                [&] { return with_fn(w, k, "library theta(phi) passes topicality check"); });
    }
    for (std::size_t y = 0; y < w.size; ++y) {
      r.require(lower_conj_psi(w, t, y, kEps) == c[y], [&] { return with_fn(w, k, "theta(psi)(y, eps) = theta(phi)(y)"); });
      r.require(lower_conj_psi(w, t, y, kTop) == kTop, [&] { return with_fn(w, k, "theta(psi)(y, top) = top"); });
    }
  }
}

// ---- polars --------------------------------------------------------------


bool in(Subset s, std::size_t i) { return (s >> i) & 1U; }

Json subset_json(const World& w, Subset s) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < w.size; ++i)
    if (in(s, i)) pts.push_back(w.point(i));
  return Json{{"points", pts}};
}

// {y : π(g, y) ≤ e for all g ∈ G}.
Subset polar(const World& w, Subset g, const Mat& pi) {
  Subset out = 0;
  for (std::size_t y = 0; y < w.size; ++y) {
    bool ok = true;
    for (std::size_t i = 0; i < w.size; ++i)
      if (in(g, i) && !(pi[i][y] <= kE)) ok = false;
    if (ok) out |= Subset{1} << y;
  }
  return out;
}

// {x : P ⊆ Δ({x})}.
Subset dual_polar(const World& w, Subset p, const Mat& pi) {
  Subset out = 0;
  for (std::size_t x = 0; x < w.size; ++x)
    if ((p & ~polar(w, Subset{1} << x, pi)) == 0) out |= Subset{1} << x;
  return out;
}

Mat transpose(const Mat& m) {
  Mat out(m.size(), Tab(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[j][i] = m[i][j];
  return out;
}

bool upward(const World& w, Subset s) {
  for (std::size_t a = 0; a < w.size; ++a)
    for (std::size_t b = 0; b < w.size; ++b)
      if (in(s, a) && World::below(a, b) && !in(s, b)) return false;
  return true;
}

bool downward(const World& w, Subset s) {
  for (std::size_t a = 0; a < w.size; ++a)
    for (std::size_t b = 0; b < w.size; ++b)
      if (in(s, b) && World::below(a, b) && !in(s, a)) return false;
  return true;
}

Subset subsets_end(const World& w) { return Subset{1} << w.size; }

void check_polar_up_down(Run& r) {
  const auto& w = r.w;
  const auto phibar = transpose(w.phi);
  for (Subset g = 0; g < subsets_end(w); ++g) {
    auto at = [&](const char* clause) { return Json{{"clause", clause}, {"G", subset_json(w, g)}}; };
    const Subset p = polar(w, g, w.phi);
    const Subset bar = polar(w, g, phibar);
    r.require(upward(w, p), [&] { return at("polar set is upward"); });
    r.require(downward(w, bar), [&] { return at("reflected polar set is downward"); });
    Subset meet_all = subsets_end(w) - 1;
    for (std::size_t i = 0; i < w.size; ++i)
      if (in(g, i)) meet_all &= polar(w, Subset{1} << i, w.phi);
    r.require(p == meet_all, [&] { return at("polar of G = intersection of polars of its points"); });

    const auto set = to_finite_set(w.pts, g);
    Tab sigma(w.size);
    for (std::size_t y = 0; y < w.size; ++y) {
      ExtendedScalar s = kEps;
      for (std::size_t i = 0; i < w.size; ++i)
        if (in(g, i)) s = oplus(s, w.phi[i][y]);
      sigma[y] = s;
      r.require(support_function(set, w.pts[y]) == s, [&] { return at("library support function agrees"); });
      r.require(polar_membership(w.pts[y], set) == in(p, y), [&] { return at("library polar membership agrees"); });
      r.require(bar_polar_membership(w.pts[y], set) == in(bar, y), [&] { return at("library reflected polar agrees"); });
    }
    if (g != 0) {
      r.require(sigma[0] == kTop && !in(p, 0), [&] { return at("sigma_G(inf X) = top, inf X not in the polar"); });
      r.require(anti_topical(w, sigma), [&] { return at("sigma_G anti-topical"); });
    }
  }
}

void check_ll21(Run& r) {
  const auto& w = r.w;
  const auto phibar = transpose(w.phi);
  for (Subset p = 0; p < subsets_end(w); ++p) {
    r.require(dual_polar(w, p, w.phi) == polar(w, p, phibar),
              [&] { return Json{{"clause", "dual of the phi-polarity = reflected polarity"}, {"P", subset_json(w, p)}}; });
    r.require(dual_polar(w, p, w.pmu) == polar(w, p, w.pmu),
              [&] { return Json{{"clause", "pi_mu polarity is self-dual"}, {"P", subset_json(w, p)}}; });
  }
  const Coupling phi = [](const Vector& a, const Vector& b) { return residuate(a, b); };
  r.require(check_polarity_dual(w.pts, phi), [&] { return Json{{"clause", "library polarity dual check agrees"}}; });
}

// Statements of the closed-downward-set theorem for one G. On the finite
// model every set is closed and closed along rays, so 1° and 2° reduce to
// "downward".
struct Thm10 {
  bool s1, s2, s3, s4, s5;
};

Thm10 thm10(const World& w, Subset g) {
  const bool down = downward(w, g);
  Thm10 s{down, down, dual_polar(w, polar(w, g, w.phi), w.phi) == g, true, true};
  for (std::size_t x = 1; x < w.size; ++x) {
    if (in(g, x)) continue;
    bool sep21 = false;
    bool ulter = false;
    for (std::size_t y = 1; y < w.size; ++y) {
      ExtendedScalar sigma = kEps;
      for (std::size_t i = 0; i < w.size; ++i)
        if (in(g, i)) sigma = oplus(sigma, w.phi[i][y]);
      sep21 = sep21 || (sigma <= kE && kE < w.phi[x][y]);
      ulter = ulter || sigma < w.phi[x][y];
    }
    s.s4 = s.s4 && sep21;
    s.s5 = s.s5 && ulter;
  }
  return s;
}

void check_elem_thm10(Run& r) {
  const auto& w = r.w;
  Json table = Json::array();
  for (Subset g = 0; g < subsets_end(w); ++g) {
    const auto s = thm10(w, g);
    table.push_back({{"G", subset_json(w, g)}, {"statements", {s.s1, s.s2, s.s3, s.s4, s.s5}}});
    r.require(s.s1 == s.s2 && s.s2 == s.s3 && s.s3 == s.s4 && s.s4 == s.s5, [&] {
      return Json{{"clause", "closed downward iff bipolar-convex iff separation statements"},
                  {"G", subset_json(w, g)},
                  {"closed_downward", s.s1},
                  {"closed_along_rays_downward", s.s2},
                  {"bipolar_equals_G", s.s3},
                  {"separation_e_lt_x_over_y", s.s4},
                  {"separation_sigma_lt_x_over_y", s.s5}};
    });
  }
  r.data["statements_by_set"] = table;
}

// ---- support sets --------------------------------------------------------

// Defining forms over the whole domain.
bool supp(const World& w, const Tab& t, std::size_t y) {
  for (std::size_t x = 0; x < w.size; ++x)
    if (!(w.phi[x][y] <= t[x])) return false;
  return true;
}

bool supp_x(const World& w, const Tab& t, std::size_t x0, std::size_t y) {
  return supp(w, t, y) && w.phi[x0][y] == t[x0];
}

bool supp_xk(const World& w, const Tab& t, std::size_t x0, std::size_t y, const ExtendedScalar& d) {
  for (std::size_t x = 0; x < w.size; ++x)
    if (!(meet(w.phi[x][y], d) <= t[x])) return false;
  return meet(w.phi[x0][y], d) == t[x0];
}

bool subdiff(const World& w, const Tab& t, std::size_t x0, std::size_t y0) {
  const auto factor = otimes(invert(w.phi[x0][y0]), t[x0]);
  for (std::size_t x = 0; x < w.size; ++x)
    if (!(otimes(w.phi[x][y0], factor) <= t[x])) return false;
  return true;
}

template <class Body>
void for_topical_at_points(const World& w, Body body) {
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& t = w.tabs[k];
    if (!topical(w, t)) continue;
    for (std::size_t x0 = 0; x0 < w.size; ++x0)
      if (t[x0].is_finite()) body(k, t, x0);
  }
}

Json at_point(const World& w, std::size_t k, std::size_t x0, const char* clause) {
  auto j = with_fn(w, k, clause);
  j["x0"] = w.point(x0);
  return j;
}

void check_tprima(Run& r) {
  const auto& w = r.w;
  for_topical_at_points(w, [&](std::size_t k, const Tab& t, std::size_t x0) {
    for (std::size_t y = 1; y < w.size; ++y) {
      const bool s1 = supp_x(w, t, x0, y);
      const bool s2 = t[y] == kE && w.phi[x0][y] == t[x0];
      const bool s3 = t[y] == kE && t[x0] <= w.phi[x0][y];
      auto at = [&](const char* clause) {
        auto j = at_point(w, k, x0, clause);
        j["y"] = w.point(y);
        return j;
      };
      r.require(s1 == s2 && s2 == s3, [&] { return at("defining form iff f(y) = e, x0/y = f(x0) iff f(y) = e, x0/y >= f(x0)"); });
      r.require(supp_at_point_X(w.fns[k], w.pts[x0], w.pts[y], w.domain).member == s1, [&] { return at("library agrees"); });
    }
  });
}

void check_tadoua(Run& r) {
  const auto& w = r.w;
  for_topical_at_points(w, [&](std::size_t k, const Tab& t, std::size_t x0) {
    for (std::size_t y = 1; y < w.size; ++y)
      for (const auto& d : kBase) {
        const bool s1 = supp_xk(w, t, x0, y, d);
        const bool s2 = t[y] == kE && meet(w.phi[x0][y], d) == t[x0];
        const bool s3 = t[y] == kE && t[x0] <= meet(w.phi[x0][y], d);
        auto at = [&](const char* clause) {
          auto j = at_point(w, k, x0, clause);
          j["y"] = w.point(y);
          j["d"] = sc(d);
          return j;
        };
        r.require(s1 == s2 && s2 == s3, [&] { return at("defining form iff f(y) = e, s_yd(x0) = f(x0) iff f(y) = e, s_yd(x0) >= f(x0)"); });
        r.require(supp_at_point_XK(w.fns[k], w.pts[x0], w.pts[y], d, w.domain).member == s1, [&] { return at("library agrees"); });
      }
  });
}

void check_panter_pdupa(Run& r) {
  const auto& w = r.w;
  for_topical_at_points(w, [&](std::size_t k, const Tab& t, std::size_t x0) {
    const auto y0 = scale(invert(t[x0]), w.pts[x0]);
    const auto yi = boolean_index(y0);
    r.require(yi != 0 && supp_x(w, t, x0, yi), [&] { return at_point(w, k, x0, "f(x0)^-1 x0 in the X-support set at x0"); });
    r.require(yi != 0 && supp_xk(w, t, x0, yi, t[x0]), [&] { return at_point(w, k, x0, "(f(x0)^-1 x0, f(x0)) in the (X,K)-support set at x0"); });
    r.require(canonical_support_point(w.fns[k], w.pts[x0]) == y0, [&] { return at_point(w, k, x0, "library canonical point agrees"); });
  });
}

void check_supp_subdiff(Run& r) {
  const auto& w = r.w;
  // Reverse containment is open; the sizes of both sets are reported only.
  std::size_t in_supp = 0;
  std::size_t in_subdiff = 0;
  std::size_t subdiff_only = 0;
  for_topical_at_points(w, [&](std::size_t k, const Tab& t, std::size_t x0) {
    for (std::size_t y = 0; y < w.size; ++y) {
      const bool a = y != 0 && supp_x(w, t, x0, y);
      const bool b = subdiff(w, t, x0, y);
      in_supp += a;
      in_subdiff += b;
      subdiff_only += b && !a;
    }
    for (std::size_t y = 1; y < w.size; ++y) {
      if (!supp_x(w, t, x0, y)) continue;
      r.require(subdiff(w, t, x0, y), [&] {
        auto j = at_point(w, k, x0, "X-support set at x0 inside the phi-subdifferential");
        j["y"] = w.point(y);
        return j;
      });
    }
    for (std::size_t y = 0; y < w.size; ++y) {
      r.require(phi_subdiff_membership(w.fns[k], w.pts[x0], w.pts[y], w.domain).member == subdiff(w, t, x0, y),
                [&] { return at_point(w, k, x0, "library subdifferential agrees"); });
    }
  });

  r.data["supp_at_point_members"] = in_supp;
  r.data["subdifferential_members"] = in_subdiff;
  r.data["subdifferential_outside_supp"] = subdiff_only;

  // Support sets of topical functions: e ≤ f(y) test, upward, reconstruction
  // at points where f is K-valued, and uniqueness among K-valued functions.
  std::vector<std::pair<std::size_t, Subset>> k_valued;
  for (std::size_t k = 0; k < w.tabs.size(); ++k) {
    const auto& t = w.tabs[k];
    if (!topical(w, t)) continue;
    Subset s = 0;
    for (std::size_t y = 1; y < w.size; ++y) {
      const bool member = supp(w, t, y);
      if (member) s |= Subset{1} << y;
      r.require(member == (kE <= t[y]), [&] { return with_fn(w, k, "y in Supp iff e <= f(y)"); });
      r.require(supp_membership(w.fns[k], w.pts[y], w.domain).member == member, [&] { return with_fn(w, k, "library support membership agrees"); });
    }
    r.require(upward(w, s), [&] { return with_fn(w, k, "Supp upward"); });
    bool in_k = true;
    for (std::size_t x = 0; x < w.size; ++x) {
      if (t[x].is_top()) {
        in_k = false;
        continue;
      }
      ExtendedScalar best = kEps;
      for (std::size_t y = 1; y < w.size; ++y)
        if (in(s, y)) best = oplus(best, w.phi[x][y]);
      r.require(best == t[x], [&] {
        auto j = with_fn(w, k, "f(x) = max over Supp of x/y");
        j["x"] = w.point(x);
        return j;
      });
      r.require(supp_reconstruct(w.fns[k], w.pts[x], w.domain).value == t[x], [&] { return with_fn(w, k, "library reconstruction agrees"); });
    }
    if (in_k) k_valued.emplace_back(k, s);
  }
  for (const auto& [k1, s1] : k_valued)
    for (const auto& [k2, s2] : k_valued)
      r.require((k1 == k2) == (s1 == s2), [&] {
        return Json{{"clause", "K-valued topical functions are determined by their support sets"}, {"f1", w.fn(k1)}, {"f2", w.fn(k2)}};
      });
}

using Checker = void (*)(Run&);

struct Entry {
  TheoremId id;
  const char* name;
  Checker check;
};

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = {
      {TheoremId::Tunu, "Tunu", check_tunu},
      {TheoremId::Lineq, "Lineq", check_lineq},
      {TheoremId::Ctipmor, "Ctipmor", check_ctipmor},
      {TheoremId::Lresid, "Lresid", check_lresid},
      {TheoremId::LantiBis1a, "LantiBis1a", check_lanti_bis1a},
      {TheoremId::LantiBis1b, "LantiBis1b", check_lanti_bis1b},
      {TheoremId::Ttrei, "Ttrei", check_ttrei},
      {TheoremId::C0, "C0", check_c0},
      {TheoremId::Cbun, "Cbun", check_cbun},
      {TheoremId::RadaugD, "RadaugD", check_radaug_d},
      {TheoremId::Tconj, "Tconj", check_tconj},
      {TheoremId::TconjAntitop, "TconjAntitop", check_tconj_antitop},
      {TheoremId::Cbun3, "Cbun3", check_cbun3},
      {TheoremId::Tbiconj, "Tbiconj", check_tbiconj},
      {TheoremId::Tantibiconj, "Tantibiconj", check_tantibiconj},
      {TheoremId::LL51, "LL51", check_ll51},
      {TheoremId::Cor51, "Cor51", check_cor51},
      {TheoremId::Lpartial, "Lpartial", check_lpartial},
      {TheoremId::Rsecond, "Rsecond", check_rsecond},
      {TheoremId::RsecondBis, "RsecondBis", check_rsecond_bis},
      {TheoremId::PolarUpDown, "PolarUpDown", check_polar_up_down},
      {TheoremId::LL21, "LL21", check_ll21},
      {TheoremId::ElemThm10, "ElemThm10", check_elem_thm10},
      {TheoremId::Tprima, "Tprima", check_tprima},
      {TheoremId::Tadoua, "Tadoua", check_tadoua},
      {TheoremId::PanterPdupa, "PanterPdupa", check_panter_pdupa},
      {TheoremId::SuppSubdiff, "SuppSubdiff", check_supp_subdiff},
  };
  return entries;
}

const Entry& entry(TheoremId id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw std::logic_error("theorem without checker");
}

void require_n(std::size_t n) {
  if (n < 1 || n > 2) throw PreconditionError("the Boolean oracle enumerates n = 1 or n = 2 only");
}

}  // namespace

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const auto& e : catalog()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::string to_string(TheoremId id) { return entry(id).name; }

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (const auto& e : catalog())
    if (name == e.name) return e.id;
  return std::nullopt;
}

std::vector<Function> enumerate_functions(std::size_t n) {
  require_n(n);
  const std::size_t size = std::size_t{1} << n;
  std::size_t count = 1;
  for (std::size_t i = 0; i < size; ++i) count *= 3;
  std::vector<Function> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<ExtendedScalar> values;
    std::size_t rest = k;
    for (std::size_t m = 0; m < size; ++m, rest /= 3) values.push_back(kBar[rest % 3]);
    out.push_back(Function::table(n, std::move(values)));
  }
  return out;
}

VerificationReport verify(TheoremId id, std::size_t n) {
  require_n(n);
  const World w(n);
  Run run(w);
  entry(id).check(run);
  VerificationReport out{id, run.checked, run.counterexample.is_null(), run.counterexample, run.data};
  return out;
}

std::vector<VerificationReport> verify_all(std::size_t n) {
  std::vector<VerificationReport> out;
  for (auto id : all_theorems()) out.push_back(verify(id, n));
  return out;
}

Json to_json(const VerificationReport& r) {
  Json out{{"theorem", to_string(r.theorem)}, {"checked", r.checked}, {"result", r.pass ? "pass" : "counterexample"}};
  if (!r.pass) out["counterexample"] = r.counterexample;
  if (!r.data.empty()) out["data"] = r.data;
  return out;
}

Census census(std::size_t n) {
  require_n(n);
  const World w(n);
  Census c;
  c.n = n;
  c.functions = w.tabs.size();
  for (const auto& t : w.tabs) {
    const bool top = topical(w, t);
    const bool anti = anti_topical(w, t);
    c.topical += top;
    c.anti_topical += anti;
    c.both += top && anti;
    c.neither += !top && !anti;
    const auto upper = conj(w, t, w.phi);
    c.biconjugate_fixed += conj_reflected(w, upper, w.phi) == t;
    c.upper_lower_fixed += lower_conj(w, upper) == t;
    c.lower_upper_fixed += conj(w, lower_conj(w, t), w.phi) == t;
  }
  for (Subset g = 0; g < subsets_end(w); ++g) {
    c.downward_sets += downward(w, g);
    c.bipolar_closed_sets += dual_polar(w, polar(w, g, w.phi), w.phi) == g;
  }
  return c;
}

Json to_json(const Census& c) {
  return Json{{"n", c.n},
              {"functions", c.functions},
              {"topical", c.topical},
              {"anti_topical", c.anti_topical},
              {"both", c.both},
              {"neither", c.neither},
              {"biconjugate_fixed", c.biconjugate_fixed},
              {"upper_lower_fixed", c.upper_lower_fixed},
              {"lower_upper_fixed", c.lower_upper_fixed},
              {"downward_sets", c.downward_sets},
              {"bipolar_closed_sets", c.bipolar_closed_sets}};
}

}  // namespace mpext
