#include "mpext/probes.hpp"

#include "mpext/errors.hpp"
#include "mpext/random.hpp"

namespace mpext {

std::vector<ExtendedScalar> rational_lambda_sample() {
  auto q = [](std::int64_t p, std::int64_t r = 1) { return ExtendedScalar::finite(Rational(p, r)); };
  return {ExtendedScalar::eps(), ExtendedScalar::unit(), q(1), q(-1), q(1, 2), q(-3, 2), q(3), q(-5)};
}

ProbeSet::ProbeSet(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw PreconditionError("dimension must be positive");
  add(bottom(dim));
  lambdas_ = rational_lambda_sample();
  ds_ = lambdas_;
  ds_.push_back(ExtendedScalar::top());
}

ProbeSet ProbeSet::boolean_domain(std::size_t dim) {
  if (dim > 16) throw PreconditionError("Boolean domain too large to enumerate");
  ProbeSet set(dim);
  for (std::size_t mask = 1; mask < (std::size_t{1} << dim); ++mask) set.add(boolean_point(dim, mask));
  set.lambdas_ = {ExtendedScalar::eps(), ExtendedScalar::unit()};
  set.ds_ = {ExtendedScalar::eps(), ExtendedScalar::unit(), ExtendedScalar::top()};
  set.exhaustive_ = true;
  return set;
}

ProbeSet ProbeSet::for_function(const Function& f, std::size_t dim, std::uint64_t seed,
                                const std::vector<Vector>& user_points, std::size_t random_count) {
  ProbeSet set(dim);
  if (const auto* gens = f.generators()) {
    for (const auto& g : *gens) {
      require_same_dim(g.y, set.points_.front());
      set.add(g.y);
    }
    for (const auto& g : *gens) {
      for (const auto& lam : set.lambdas_) set.add(scale(lam, g.y));
    }
  }
  for (const auto& x : user_points) {
    require_same_dim(x, set.points_.front());
    set.add(x);
  }
  SeededRng rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) set.add(rng.vector(dim));
  return set;
}

bool ProbeSet::add(const Vector& x) {
  if (x.dim() != dim_) throw DimensionMismatch(dim_, x.dim());
  if (!seen_.insert(x).second) return false;
  points_.push_back(x);
  return true;
}

std::string ProbeSet::strength() const {
  if (exhaustive_) return "exhaustive over the Boolean domain";
  return "sampled: " + std::to_string(points_.size()) + " probe points, " +
         std::to_string(lambdas_.size()) + " scalars";
}

}  // namespace mpext
