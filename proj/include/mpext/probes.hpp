#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "mpext/function.hpp"
#include "mpext/vector.hpp"

namespace mpext {

/// Points (and scalar samples) over which "for all x" clauses are checked.
///
/// inf X is always the first point. When `exhaustive` is set the points are
/// the whole domain Bⁿ and every verdict is a proof; otherwise verdicts only
/// say that no counterexample was found among the probes.
class ProbeSet {
 public:
  explicit ProbeSet(std::size_t dim);

  /// All 2ⁿ points of Bⁿ in table order, λ ∈ {ε, e}, d ∈ {ε, e, ⊤}.
  static ProbeSet boolean_domain(std::size_t dim);

  /// Rational sample: inf X, every generator y_j of f, λ y_j for the λ
  /// sample, the user points, then `random_count` seeded random points.
  static ProbeSet for_function(const Function& f, std::size_t dim, std::uint64_t seed,
                               const std::vector<Vector>& user_points = {},
                               std::size_t random_count = 24);

  /// Adds a point unless already present. Returns true if it was new.
  bool add(const Vector& x);

  std::size_t dim() const { return dim_; }
  const std::vector<Vector>& points() const { return points_; }
  /// λ sample in K used for homogeneity checks. Contains ε and e.
  const std::vector<ExtendedScalar>& lambdas() const { return lambdas_; }
  /// d sample in K̄ for the ψ-type forms. Contains ε, e and ⊤.
  const std::vector<ExtendedScalar>& ds() const { return ds_; }
  bool exhaustive() const { return exhaustive_; }
  bool contains(const Vector& x) const { return seen_.count(x) != 0; }

  std::string strength() const;

 private:
  std::size_t dim_;
  std::vector<Vector> points_;
  std::set<Vector> seen_;
  std::vector<ExtendedScalar> lambdas_;
  std::vector<ExtendedScalar> ds_;
  bool exhaustive_ = false;
};

/// λ sample shared by rational probe sets.
std::vector<ExtendedScalar> rational_lambda_sample();

}  // namespace mpext
