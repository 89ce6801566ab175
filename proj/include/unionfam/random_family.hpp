#ifndef UNIONFAM_RANDOM_FAMILY_HPP
#define UNIONFAM_RANDOM_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <random>

#include "unionfam/search.hpp"
#include "unionfam/setfam.hpp"

namespace unionfam {

// Cross-platform deterministic draw in [0, bound); mt19937_64 output is
// pinned by the standard, std::uniform_int_distribution is not.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound);

// Uniformly random family of the given size from a seeded generator. With a
// repair spec, forbidden-pattern and must_avoid violations are removed
// greedily afterwards (the result is then deterministic but no longer
// uniform).
Family random_family(int n, int k, std::size_t size, std::uint64_t seed,
                     const std::optional<ConstraintSpec>& repair = {});

}  // namespace unionfam

#endif
