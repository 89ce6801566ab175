#ifndef UNIONFAM_STRUCTURE_HPP
#define UNIONFAM_STRUCTURE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "unionfam/kneser.hpp"
#include "unionfam/setfam.hpp"

namespace unionfam {

bool is_intersecting(const Family& f);

// Element of [1, n] contained in the most members, ties to the smallest
// element, paired with that count.
std::pair<int, std::size_t> max_element_degree(const Family& f);

inline constexpr std::uint64_t kDefaultEllBudget = 500'000'000;

struct EllResult {
  int value = 0;
  std::vector<std::size_t> removal;  // indices into the family, ascending
};

// Exact removal invariant: minimum number of sets whose removal leaves no r
// pairwise disjoint sets. r = 2 runs as a minimum vertex cover of the
// disjointness graph (complement maximum clique); r >= 3 runs a
// branch-and-bound over clique hitting sets with a greedy disjoint-clique
// packing lower bound.
EllResult ell(const Family& f, int r, std::uint64_t node_budget = kDefaultEllBudget);

Family remove_by_indices(const Family& f, const std::vector<std::size_t>& idx);

// Trace of the peeling procedure: repeatedly pick the smallest set with a
// disjoint partner and drop its Kneser neighborhood until the rest
// intersects.
struct PeelingTrace {
  std::vector<std::pair<KSet, KSet>> pairs;  // (B_i, C_i) per round
  Family removed;
  Family core;
  std::size_t m = 0;  // number of rounds
};

PeelingTrace peel(const Family& f, int t);

// Skew cross-intersecting set-pair system over an arbitrary ground set of at
// most 64 points.
struct SetPairSystem {
  int ground_n = 0;
  std::vector<std::pair<Mask, Mask>> pairs;  // (A_i, B_i)
};

// True iff A_i cap B_i is empty for all i and A_i meets B_j for all i < j.
// A valid system longer than C(k+l, k) contradicts a proved bound and aborts
// with TheoremViolation.
bool verify_set_pair_system(const SetPairSystem& s, int k, int l);

// Exact maximum length of a valid system over ground set [1, ground].
int max_set_pair_system(int k, int l, int ground,
                        std::uint64_t node_budget = kDefaultEllBudget);

}  // namespace unionfam

#endif
