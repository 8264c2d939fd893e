#include "mpext/random.hpp"

namespace mpext {

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

bool SeededRng::chance(unsigned numerator, unsigned denominator) {
  return engine_() % denominator < numerator;
}

Rational SeededRng::rational() {
  const auto num = uniform(-20, 20);
  const auto den = uniform(1, 6);
  return Rational(num, den);
}

ExtendedScalar SeededRng::base_scalar(unsigned eps_num, unsigned eps_den) {
  if (chance(eps_num, eps_den)) return ExtendedScalar::eps();
  return ExtendedScalar::finite(rational());
}

ExtendedScalar SeededRng::extended_scalar() {
  switch (engine_() % 8) {
    case 0:
      return ExtendedScalar::eps();
    case 1:
      return ExtendedScalar::top();
    default:
      return ExtendedScalar::finite(rational());
  }
}

Vector SeededRng::vector(std::size_t dim, unsigned eps_num, unsigned eps_den) {
  std::vector<ExtendedScalar> coords(dim);
  for (auto& c : coords) c = base_scalar(eps_num, eps_den);
  return Vector(std::move(coords));
}

Vector SeededRng::nonbottom_vector(std::size_t dim, unsigned eps_num, unsigned eps_den) {
  std::vector<ExtendedScalar> coords(dim);
  for (auto& c : coords) c = base_scalar(eps_num, eps_den);
  coords[engine_() % dim] = ExtendedScalar::finite(rational());
  return Vector(std::move(coords));
}

Function SeededRng::fingen(std::size_t dim, std::size_t max_generators) {
  const auto count = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_generators)));
  std::vector<Generator> gens;
  gens.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    gens.push_back({nonbottom_vector(dim), ExtendedScalar::finite(rational())});
  }
  return Function::fingen(std::move(gens));
}

}  // namespace mpext
