#ifndef UNIONFAM_SEARCH_HPP
#define UNIONFAM_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "unionfam/setfam.hpp"

namespace unionfam {

// Constraint language for extremal searches. At least one constraint must be
// present.
struct ConstraintSpec {
  std::optional<std::vector<int>> forbidden_pattern;   // K_{s_1,...,s_m}-free
  std::optional<std::pair<int, int>> ell_min;          // (r, c): ell_r >= c
  std::vector<std::vector<int>> must_contain;
  std::vector<std::vector<int>> must_avoid;

  void validate() const;
  bool permutation_invariant() const { return must_contain.empty() && must_avoid.empty(); }
};

struct SearchResult {
  int max_size = -1;  // -1 when no family (not even the empty one) satisfies
  Family witness;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  bool wall_budget_hit = false;
};

// Enumerates every subfamily by bit pattern; requires C(n, k) <= 24. The
// witness is the lexicographically smallest maximum family. All constraint
// checks inside the oracle are self-contained brute force.
SearchResult oracle_max_family(int n, int k, const ConstraintSpec& spec);

// DFS with inclusion/exclusion over candidate sets in ascending mask order,
// symmetry-forced first set for permutation-invariant specs, and admissible
// size pruning. Agrees with the oracle wherever the oracle runs; budget
// exhaustion is reported in the result, never as a wrong answer.
SearchResult branch_and_bound_max(int n, int k, const ConstraintSpec& spec,
                                  std::uint64_t node_budget = 50'000'000);

// All maximal-under-inclusion satisfying families, deduplicated by canonical
// form (the returned families are the canonical class representatives),
// sorted by size descending then certificate.
std::vector<Family> enumerate_maximal(int n, int k, const ConstraintSpec& spec,
                                      std::size_t limit);

}  // namespace unionfam

#endif
