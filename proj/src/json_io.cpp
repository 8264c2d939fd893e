#include "mpext/json_io.hpp"

#include "mpext/errors.hpp"

namespace mpext::json {
namespace {

[[noreturn]] void fail(const std::string& what, const Json& j) {
  throw ParseError(what + ": " + j.dump());
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing \"") + key + "\"", j);
  return j.at(key);
}

}  // namespace

Json encode(const ExtendedScalar& a, Semifield s) {
  if (a.is_eps()) return "eps";
  if (a.is_top()) return "top";
  if (s == Semifield::Boolean) return "e";
  return Json{{"q", a.value().to_string()}};
}

ExtendedScalar decode_scalar(const Json& j, Semifield s) {
  ExtendedScalar out;
  if (j.is_string()) {
    const auto& text = j.get_ref<const std::string&>();
    if (text == "eps") return ExtendedScalar::eps();
    if (text == "top") return ExtendedScalar::top();
    if (text == "e") return ExtendedScalar::unit();
    fail("unknown scalar literal", j);
  }
  if (!j.is_object() || j.size() != 1 || !j.contains("q")) fail("malformed scalar", j);
  const auto& q = j.at("q");
  try {
    if (q.is_string()) {
      out = ExtendedScalar::finite(Rational::parse(q.get<std::string>()));
    } else if (q.is_number_integer()) {
      out = ExtendedScalar::finite(Rational(q.get<std::int64_t>()));
    } else {
      fail("rational must be a string or an integer", j);
    }
  } catch (const std::invalid_argument&) {
    fail("malformed rational", j);
  } catch (const std::overflow_error&) {
    fail("rational out of range", j);
  }
  if (!admits(s, out)) fail("the Boolean instance has no finite value other than e", j);
  return out;
}

Json encode(const Vector& x, Semifield s) {
  Json out = Json::array();
  for (const auto& c : x.coords()) out.push_back(encode(c, s));
  return out;
}

Vector decode_vector(const Json& j, Semifield s) {
  if (!j.is_array() || j.empty()) fail("vector must be a non-empty array", j);
  std::vector<ExtendedScalar> coords;
  for (const auto& c : j) {
    auto a = decode_scalar(c, s);
    if (a.is_top()) fail("vector coordinates cannot be top", j);
    coords.push_back(a);
  }
  return Vector(std::move(coords));
}

Json encode(const Function& f, Semifield s) {
  return std::visit(
      [&](const auto& r) -> Json {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, Function::FinGen>) {
          Json gens = Json::array();
          for (const auto& g : r.generators) gens.push_back({{"y", encode(g.y, s)}, {"c", encode(g.c, s)}});
          return {{"fingen", gens}};
        } else if constexpr (std::is_same_v<R, Function::Table>) {
          Json points = Json::array();
          Json values = Json::array();
          for (std::size_t m = 0; m < r.values.size(); ++m) {
            points.push_back(encode(boolean_point(r.dim, m), s));
            values.push_back(encode(r.values[m], s));
          }
          return {{"table", {{"points", points}, {"values", values}}}};
        } else if constexpr (std::is_same_v<R, Function::InverseOf>) {
          return {{"inverse_of", encode(*r.inner, s)}};
        } else if constexpr (std::is_same_v<R, Function::Constant>) {
          return {{"const", encode(r.value, s)}};
        } else {
          throw PreconditionError("function '" + r.name + "' has no JSON encoding");
        }
      },
      f.repr());
}

Function decode_function(const Json& j, Semifield s) {
  if (!j.is_object() || j.size() != 1) fail("function must be an object with one key", j);
  if (j.contains("fingen")) {
    const auto& gens = j.at("fingen");
    if (!gens.is_array()) fail("fingen must be an array", j);
    std::vector<Generator> out;
    for (const auto& g : gens) {
      auto c = decode_scalar(member(g, "c"), s);
      if (c.is_eps()) fail("generator coefficient cannot be eps", g);
      auto y = decode_vector(member(g, "y"), s);
      if (y.is_bottom()) fail("generator point cannot be inf X", g);
      if (!out.empty() && out.front().y.dim() != y.dim()) throw DimensionMismatch(out.front().y.dim(), y.dim());
      out.push_back({std::move(y), c});
    }
    return Function::fingen(std::move(out));
  }
  if (j.contains("table")) {
    const auto& t = j.at("table");
    const auto& points = member(t, "points");
    const auto& values = member(t, "values");
    if (!points.is_array() || !values.is_array() || points.size() != values.size() || points.empty()) {
      fail("table needs equally long points and values", t);
    }
    const std::size_t dim = decode_vector(points.front(), Semifield::Boolean).dim();
    if (dim > 16) fail("table dimension too large", t);
    if (points.size() != (std::size_t{1} << dim)) fail("table must list every point of B^n once", t);
    std::vector<std::optional<ExtendedScalar>> slots(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto p = decode_vector(points[i], Semifield::Boolean);
      if (p.dim() != dim) throw DimensionMismatch(dim, p.dim());
      auto& slot = slots[boolean_index(p)];
      if (slot) fail("table lists a point twice", t);
      slot = decode_scalar(values[i], Semifield::Boolean);
    }
    std::vector<ExtendedScalar> vals;
    for (const auto& v : slots) vals.push_back(*v);
    return Function::table(dim, std::move(vals));
  }
  if (j.contains("inverse_of")) return Function::inverse_of(decode_function(j.at("inverse_of"), s));
  if (j.contains("const")) return Function::constant(decode_scalar(j.at("const"), s));
  fail("unknown function kind", j);
}

Json encode(const FiniteSet& g, Semifield s) {
  Json points = Json::array();
  for (const auto& p : g.points()) points.push_back(encode(p, s));
  return {{"points", points}};
}

FiniteSet decode_set(const Json& j, Semifield s, std::size_t dim) {
  const auto& points = member(j, "points");
  if (!points.is_array()) fail("points must be an array", j);
  FiniteSet out(dim);
  for (const auto& p : points) out.insert(decode_vector(p, s));
  return out;
}

Json encode(const Bound& b, Semifield s) {
  Json out{{"value", encode(b.value, s)}, {"exactness", to_string(b.exactness)}};
  if (b.witness) out["witness"] = encode(*b.witness, s);
  return out;
}

Json encode(const Counterexample& c, Semifield s) {
  Json out{{"clause", c.clause}, {"x", encode(c.x, s)}, {"y", encode(c.y, s)}};
  if (c.d) out["d"] = encode(*c.d, s);
  return out;
}

Json encode(const BipolarResult& r, Semifield s) {
  Json out{{"member", r.member}};
  if (r.witness) {
    out["witness"] = {{"y", encode(r.witness->y, s)},
                      {"sigma", encode(r.witness->sigma_value, s)},
                      {"x_over_y", encode(r.witness->x_over_y, s)}};
  }
  return out;
}

Json encode(const Membership& m, Semifield s) {
  Json out{{"member", m.member}, {"certified", m.certified}};
  if (m.violated_at) out["violated_at"] = encode(*m.violated_at, s);
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace mpext::json
