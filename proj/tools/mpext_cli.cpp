#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mpext/conjugation.hpp"
#include "mpext/errors.hpp"
#include "mpext/json_io.hpp"
#include "mpext/oracle.hpp"
#include "mpext/polar.hpp"
#include "mpext/probes.hpp"
#include "mpext/support.hpp"

namespace {

using namespace mpext;
using json::Json;

enum Exit { kOk = 0, kCounterexample = 1, kParse = 2, kDimension = 3, kPrecondition = 4 };

struct Config {
  std::string semifield = "qmax";
  std::size_t dim = 0;
  std::uint64_t seed = 1;
  std::string input;
  std::string probes;
  std::vector<std::string> theorems;
};

Semifield semifield_of(const Config& cfg) {
  return cfg.semifield == "boolean" ? Semifield::Boolean : Semifield::RationalMaxPlus;
}

std::string slurp(const std::string& path) {
  std::ostringstream out;
  if (path.empty() || path == "-") {
    out << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    out << in.rdbuf();
  }
  return out.str();
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("input needs \"") + key + "\"");
  return doc.at(key);
}

std::string text_field(const Json& doc, const char* key) {
  const auto& v = field(doc, key);
  if (!v.is_string()) throw ParseError(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

void check_dim(const Config& cfg, const Vector& v) {
  if (cfg.dim != 0 && v.dim() != cfg.dim) throw DimensionMismatch(cfg.dim, v.dim());
}

Vector point(const Config& cfg, const Json& doc, const char* key) {
  auto v = json::decode_vector(field(doc, key), semifield_of(cfg));
  check_dim(cfg, v);
  return v;
}

std::optional<ExtendedScalar> optional_d(const Config& cfg, const Json& doc) {
  if (!doc.contains("d")) return std::nullopt;
  return json::decode_scalar(doc.at("d"), semifield_of(cfg));
}

Function function(const Config& cfg, const Json& doc) {
  auto f = json::decode_function(field(doc, "function"), semifield_of(cfg));
  if (auto d = f.dim(); d && cfg.dim != 0 && *d != cfg.dim) throw DimensionMismatch(cfg.dim, *d);
  return f;
}

// Boolean mode quantifies over all of Bⁿ; rational mode over a seeded sample
// plus any user probes.
ProbeSet probes_for(const Config& cfg, const Function& f, std::size_t dim) {
  if (semifield_of(cfg) == Semifield::Boolean) {
    if (dim > 2) throw PreconditionError("Boolean mode is exhaustive and limited to dimension 2");
    return ProbeSet::boolean_domain(dim);
  }
  std::vector<Vector> extra;
  if (!cfg.probes.empty()) {
    const auto doc = json::parse(slurp(cfg.probes));
    if (!doc.is_array()) throw ParseError("probe file must hold an array of vectors");
    for (const auto& p : doc) {
      auto v = json::decode_vector(p, Semifield::RationalMaxPlus);
      if (v.dim() != dim) throw DimensionMismatch(dim, v.dim());
      extra.push_back(std::move(v));
    }
  }
  return ProbeSet::for_function(f, dim, cfg.seed, extra);
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

int cmd_eval(const Config& cfg) {
  const auto doc = json::parse(slurp(cfg.input));
  const auto f = function(cfg, doc);
  const auto x = point(cfg, doc, "x");
  if (auto d = f.dim(); d && *d != x.dim()) throw DimensionMismatch(*d, x.dim());
  emit(json::encode(Bound{f(x), Exactness::Exact, std::nullopt}, semifield_of(cfg)));
  return kOk;
}

int cmd_conjugate(const Config& cfg) {
  const auto doc = json::parse(slurp(cfg.input));
  const auto f = function(cfg, doc);
  const auto coupling = text_field(doc, "coupling");
  const bool on_x = coupling == "reflected" || coupling == "biconjugate";
  const auto at = point(cfg, doc, on_x ? "x" : "y");
  if (auto d = f.dim(); d && *d != at.dim()) throw DimensionMismatch(*d, at.dim());
  const auto probes = probes_for(cfg, f, at.dim());
  const auto d = optional_d(cfg, doc);
  auto need_d = [&] {
    if (!d) throw ParseError("coupling " + coupling + " needs \"d\"");
    return *d;
  };

  Bound out;
  if (coupling == "phi") {
    out = conjugate_phi(f, at, probes);
  } else if (coupling == "psi") {
    out = conjugate_psi(f, at, need_d(), probes);
  } else if (coupling == "lower_phi") {
    out = lower_conjugate_phi(f, at, probes);
  } else if (coupling == "lower_psi") {
    out = lower_conjugate_psi(f, at, need_d(), probes);
  } else if (coupling == "reflected") {
    out = conjugate_reflected(f, at, probes);
  } else if (coupling == "biconjugate") {
    out = biconjugate_phi(f, at, probes);
  } else {
    throw ParseError("unknown coupling " + coupling);
  }
  emit(json::encode(out, semifield_of(cfg)));
  return kOk;
}

int cmd_polar(const Config& cfg) {
  const auto doc = json::parse(slurp(cfg.input));
  const auto s = semifield_of(cfg);
  const auto query = text_field(doc, "query");
  const bool on_x = query == "bipolar" || query == "downward_hull";
  const auto at = point(cfg, doc, on_x ? "x" : "y");
  const auto g = json::decode_set(field(doc, "set"), s, at.dim());
  for (const auto& p : g.points())
    if (p.dim() != at.dim()) throw DimensionMismatch(at.dim(), p.dim());

  if (query == "support") {
    emit(Json{{"value", json::encode(support_function(g, at), s)}, {"exactness", "exact"}});
  } else if (query == "polar") {
    emit(Json{{"member", polar_membership(at, g)}});
  } else if (query == "bar_polar") {
    emit(Json{{"member", bar_polar_membership(at, g)}});
  } else if (query == "downward_hull") {
    emit(Json{{"member", in_downward_hull(at, g)}});
  } else if (query == "bipolar") {
    emit(json::encode(bipolar_membership(at, g, s), s));
  } else {
    throw ParseError("unknown polar query " + query);
  }
  return kOk;
}

int cmd_support(const Config& cfg) {
  const auto doc = json::parse(slurp(cfg.input));
  const auto s = semifield_of(cfg);
  const auto f = function(cfg, doc);
  const auto query = text_field(doc, "query");
  auto dim_from = [&](const Vector& v) {
    if (auto d = f.dim(); d && *d != v.dim()) throw DimensionMismatch(*d, v.dim());
    return v.dim();
  };

  if (query == "supp") {
    const auto y = point(cfg, doc, "y");
    emit(json::encode(supp_membership(f, y, probes_for(cfg, f, dim_from(y))), s));
  } else if (query == "reconstruct") {
    const auto x = point(cfg, doc, "x");
    emit(json::encode(supp_reconstruct(f, x, probes_for(cfg, f, dim_from(x))), s));
  } else if (query == "canonical") {
    const auto x0 = point(cfg, doc, "x0");
    dim_from(x0);
    const auto y = canonical_support_point(f, x0);
    Json out{{"y", json::encode(y, s)}, {"d", json::encode(f(x0), s)}};
    emit(out);
  } else if (query == "at_point") {
    const auto x0 = point(cfg, doc, "x0");
    const auto y = point(cfg, doc, "y");
    require_same_dim(x0, y);
    const auto d = optional_d(cfg, doc);
    const auto probes = probes_for(cfg, f, dim_from(x0));
    emit(json::encode(d ? supp_at_point_XK(f, x0, y, *d, probes) : supp_at_point_X(f, x0, y, probes), s));
  } else if (query == "subdiff") {
    const auto x0 = point(cfg, doc, "x0");
    const auto y = point(cfg, doc, "y");
    require_same_dim(x0, y);
    emit(json::encode(phi_subdiff_membership(f, x0, y, probes_for(cfg, f, dim_from(x0))), s));
  } else {
    throw ParseError("unknown support query " + query);
  }
  return kOk;
}

std::size_t oracle_dim(const Config& cfg) {
  if (semifield_of(cfg) != Semifield::Boolean) throw PreconditionError("the oracle runs in Boolean mode only");
  return cfg.dim == 0 ? 2 : cfg.dim;
}

int cmd_verify(const Config& cfg) {
  const auto n = oracle_dim(cfg);
  std::vector<TheoremId> ids;
  if (cfg.theorems.empty() || (cfg.theorems.size() == 1 && cfg.theorems[0] == "all")) {
    ids = all_theorems();
  } else {
    for (const auto& name : cfg.theorems) {
      auto id = theorem_from_string(name);
      if (!id) throw ParseError("unknown theorem " + name);
      ids.push_back(*id);
    }
  }
  int code = kOk;
  for (auto id : ids) {
    const auto report = verify(id, n);
    emit(to_json(report));
    if (!report.pass) code = kCounterexample;
  }
  return code;
}

int cmd_census(const Config& cfg) {
  emit(to_json(census(oracle_dim(cfg))));
  return kOk;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const DimensionMismatch& e) {
    std::cerr << e.what() << '\n';
    return kDimension;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency: " << e.what() << '\n';
    return kCounterexample;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus on the enlarged idempotent semifield"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;

  app.add_option("--semifield", cfg.semifield, "qmax or boolean")
      ->check(CLI::IsMember({"qmax", "boolean"}))
      ->capture_default_str();
  app.add_option("--dim", cfg.dim, "dimension n of X")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for rational probe sampling")->capture_default_str();
  app.add_option("--input", cfg.input, "JSON input file, - for stdin");
  app.add_option("--probes", cfg.probes, "JSON array of extra probe vectors");
  app.add_option("--theorem", cfg.theorems, "theorem id, repeatable, or all");

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const Config&);
  };
  const Sub subs[] = {
      {"eval", "evaluate a function at a point", cmd_eval},
      {"conjugate", "conjugates of a function at a point", cmd_conjugate},
      {"polar", "support function, polars and bipolar of a finite set", cmd_polar},
      {"support", "support sets and subdifferential membership", cmd_support},
      {"verify", "exhaustive Boolean verification, JSON lines", cmd_verify},
      {"census", "counts over all Boolean functions", cmd_census},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Config&)>> commands;
  for (const auto& sub : subs) commands.emplace_back(app.add_subcommand(sub.name, sub.help), sub.run);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }
  for (const auto& [cmd, run] : commands)
    if (cmd->parsed()) return guarded([&, run = run] { return run(cfg); });
  return kParse;
}
