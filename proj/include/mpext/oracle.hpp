#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpext/function.hpp"
#include "mpext/json_io.hpp"

namespace mpext {

/// Statements checked exhaustively over the Boolean instance.
enum class TheoremId {
  Tunu,
  Lineq,
  Ctipmor,
  Lresid,
  LantiBis1a,
  LantiBis1b,
  Ttrei,
  C0,
  Cbun,
  RadaugD,
  Tconj,
  TconjAntitop,
  Cbun3,
  Tbiconj,
  Tantibiconj,
  LL51,
  Cor51,
  Lpartial,
  Rsecond,
  RsecondBis,
  PolarUpDown,
  LL21,
  ElemThm10,
  Tprima,
  Tadoua,
  PanterPdupa,
  SuppSubdiff,
};

const std::vector<TheoremId>& all_theorems();
std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);

/// Every map Bⁿ → {ε, e, ⊤}, n ∈ {1, 2}. Function k takes at the point with
/// table index m the value of base-3 digit m of k (0 = ε, 1 = e, 2 = ⊤).
std::vector<Function> enumerate_functions(std::size_t n);

struct VerificationReport {
  TheoremId theorem;
  std::size_t checked = 0;
  bool pass = true;
  /// First failing instance, in enumeration order.
  json::Json counterexample;
  /// Observations reported without asserting a law.
  json::Json data;
};

VerificationReport verify(TheoremId id, std::size_t n);
std::vector<VerificationReport> verify_all(std::size_t n);

/// {"theorem": id, "checked": N, "result": "pass" | "counterexample", ...}.
json::Json to_json(const VerificationReport& r);

struct Census {
  std::size_t n = 0;
  std::size_t functions = 0;
  std::size_t topical = 0;
  std::size_t anti_topical = 0;
  std::size_t both = 0;
  std::size_t neither = 0;
  /// f^{c(φ)c(φ)'} = f.
  std::size_t biconjugate_fixed = 0;
  /// f^{c(φ)θ(φ)} = f.
  std::size_t upper_lower_fixed = 0;
  /// f^{θ(φ)c(φ)} = f.
  std::size_t lower_upper_fixed = 0;
  std::size_t downward_sets = 0;
  /// Subsets G with Δ'Δ(G) = G for the φ-polarity.
  std::size_t bipolar_closed_sets = 0;
};

Census census(std::size_t n);
json::Json to_json(const Census& c);

}  // namespace mpext
