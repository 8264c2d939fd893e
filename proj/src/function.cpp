#include "mpext/function.hpp"

#include "mpext/errors.hpp"

namespace mpext {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Function Function::fingen(std::vector<Generator> generators) {
  if (generators.empty()) return constant(ExtendedScalar::eps());
  const std::size_t n = generators.front().y.dim();
  for (const auto& g : generators) {
    if (g.y.dim() != n) throw DimensionMismatch(n, g.y.dim());
    if (g.y.is_bottom()) throw PreconditionError("generator point must differ from inf X");
    if (g.c.is_eps()) throw PreconditionError("generator coefficient must differ from eps");
  }
  return Function(FinGen{std::move(generators)});
}

Function Function::table(std::size_t dim, std::vector<ExtendedScalar> values) {
  if (dim == 0 || dim > 16) throw PreconditionError("table dimension out of range");
  if (values.size() != (std::size_t{1} << dim)) {
    throw PreconditionError("table needs exactly 2^dim values");
  }
  for (const auto& v : values) {
    if (!admits(Semifield::Boolean, v)) {
      throw PreconditionError("table values must lie in {eps, e, top}");
    }
  }
  return Function(Table{dim, std::move(values)});
}

Function Function::inverse_of(const Function& f) {
  return Function(InverseOf{std::make_shared<const Function>(f)});
}

Function Function::constant(const ExtendedScalar& value) { return Function(Constant{value}); }

Function Function::callable(std::function<ExtendedScalar(const Vector&)> fn, std::string name,
                            KnownClass known) {
  return Function(Callable{std::move(fn), std::move(name), known});
}

ExtendedScalar Function::operator()(const Vector& x) const {
  return std::visit(
      overloaded{
          [&](const FinGen& g) {
            ExtendedScalar acc;
            for (const auto& term : g.generators) {
              acc = oplus(acc, otimes(term.c, residuate(x, term.y)));
            }
            return acc;
          },
          [&](const Table& t) {
            if (x.dim() != t.dim) throw DimensionMismatch(t.dim, x.dim());
            return t.values[boolean_index(x)];
          },
          [&](const InverseOf& inv) { return invert((*inv.inner)(x)); },
          [&](const Constant& c) { return c.value; },
          [&](const Callable& c) { return c.fn(x); },
      },
      *repr_);
}

KnownClass Function::known_class() const {
  return std::visit(overloaded{
                        [](const FinGen&) { return KnownClass::Topical; },
                        [](const Table&) { return KnownClass::Unknown; },
                        [](const InverseOf& inv) {
                          switch (inv.inner->known_class()) {
                            case KnownClass::Topical:
                              return KnownClass::AntiTopical;
                            case KnownClass::AntiTopical:
                              return KnownClass::Topical;
                            case KnownClass::Unknown:
                              break;
                          }
                          return KnownClass::Unknown;
                        },
                        [](const Constant& c) {
                          if (c.value.is_eps()) return KnownClass::Topical;
                          if (c.value.is_top()) return KnownClass::AntiTopical;
                          return KnownClass::Unknown;
                        },
                        [](const Callable& c) { return c.known; },
                    },
                    *repr_);
}

std::optional<std::size_t> Function::dim() const {
  return std::visit(overloaded{
                        [](const FinGen& g) -> std::optional<std::size_t> {
                          return g.generators.front().y.dim();
                        },
                        [](const Table& t) -> std::optional<std::size_t> { return t.dim; },
                        [](const InverseOf& inv) { return inv.inner->dim(); },
                        [](const auto&) -> std::optional<std::size_t> { return std::nullopt; },
                    },
                    *repr_);
}

const std::vector<Generator>* Function::generators() const {
  if (const auto* g = std::get_if<FinGen>(repr_.get())) return &g->generators;
  return nullptr;
}

std::string Function::describe() const {
  return std::visit(overloaded{
                        [](const FinGen& g) {
                          std::string out = "fingen[";
                          for (std::size_t i = 0; i < g.generators.size(); ++i) {
                            if (i) out += ", ";
                            out += g.generators[i].c.to_string() + " * x/" +
                                   g.generators[i].y.to_string();
                          }
                          return out + "]";
                        },
                        [](const Table& t) {
                          std::string out = "table[";
                          for (std::size_t i = 0; i < t.values.size(); ++i) {
                            if (i) out += ", ";
                            out += t.values[i].to_string();
                          }
                          return out + "]";
                        },
                        [](const InverseOf& inv) { return "inverse_of(" + inv.inner->describe() + ")"; },
                        [](const Constant& c) { return "const(" + c.value.to_string() + ")"; },
                        [](const Callable& c) { return c.name; },
                    },
                    *repr_);
}

std::size_t boolean_index(const Vector& x) {
  std::size_t mask = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i].is_eps()) continue;
    if (x[i] != ExtendedScalar::unit()) {
      throw PreconditionError("point " + x.to_string() + " is not in the Boolean domain");
    }
    mask |= std::size_t{1} << i;
  }
  return mask;
}

Vector boolean_point(std::size_t dim, std::size_t mask) {
  std::vector<ExtendedScalar> coords(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (mask & (std::size_t{1} << i)) coords[i] = ExtendedScalar::unit();
  }
  return Vector(std::move(coords));
}

Function tabulate(std::size_t dim, const std::function<ExtendedScalar(const Vector&)>& fn) {
  std::vector<ExtendedScalar> values(std::size_t{1} << dim);
  for (std::size_t mask = 0; mask < values.size(); ++mask) values[mask] = fn(boolean_point(dim, mask));
  return Function::table(dim, std::move(values));
}

ExtendedScalar s_yd(const Vector& y, const ExtendedScalar& d, const Vector& x) {
  return meet(residuate(x, y), d);
}

ExtendedScalar sbar_yd(const Vector& y, const ExtendedScalar& d, const Vector& x) {
  return oplus(invert(residuate(x, y)), d);
}

}  // namespace mpext
