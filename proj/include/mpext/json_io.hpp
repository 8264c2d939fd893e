#pragma once

#include <json.hpp>

#include "mpext/characterize.hpp"
#include "mpext/conjugation.hpp"
#include "mpext/function.hpp"
#include "mpext/polar.hpp"
#include "mpext/scalar.hpp"
#include "mpext/support.hpp"
#include "mpext/vector.hpp"

namespace mpext::json {

using Json = nlohmann::ordered_json;

// Scalars: "eps", "top", "e", {"q": "p/r"}. The Boolean instance writes its
// unit as "e" and rejects any other finite value when reading.

Json encode(const ExtendedScalar& a, Semifield s);
ExtendedScalar decode_scalar(const Json& j, Semifield s);

Json encode(const Vector& x, Semifield s);
Vector decode_vector(const Json& j, Semifield s);

/// {"fingen": [...]} | {"table": {"points": [...], "values": [...]}} |
/// {"inverse_of": fn} | {"const": scalar}. Callables have no encoding.
Json encode(const Function& f, Semifield s);
Function decode_function(const Json& j, Semifield s);

/// {"points": [...]}.
Json encode(const FiniteSet& g, Semifield s);
FiniteSet decode_set(const Json& j, Semifield s, std::size_t dim);

Json encode(const Bound& b, Semifield s);
Json encode(const Counterexample& c, Semifield s);
Json encode(const BipolarResult& r, Semifield s);
Json encode(const Membership& m, Semifield s);

/// Parses text, turning syntax errors into ParseError.
Json parse(const std::string& text);

}  // namespace mpext::json
