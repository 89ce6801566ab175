#ifndef UNIONFAM_KNESER_HPP
#define UNIONFAM_KNESER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "unionfam/bits.hpp"
#include "unionfam/setfam.hpp"

namespace unionfam {

// Induced Kneser subgraph on a family: vertices are family indices, edges
// join disjoint sets.
struct DisjointnessGraph {
  Family family;
  std::vector<Bits> adj;

  std::size_t order() const { return family.size(); }
  std::size_t degree(std::size_t v) const { return adj[v].count(); }
  std::uint64_t edge_count() const;
};

DisjointnessGraph build_graph(const Family& f);

// Members of f disjoint from a (the Kneser neighborhood of a intersected
// with f).
Family neighborhood(const Family& f, const KSet& a);

std::uint64_t disjoint_pair_count(const Family& f);

// Witness of a complete multipartite subgraph: parts are pairwise disjoint
// index lists, part i has the queried size, and every cross-part pair is an
// edge.
struct ForbiddenWitness {
  std::vector<std::vector<std::size_t>> parts;
};

enum class DetectStatus { absent, found, budget_exceeded };

struct DetectResult {
  DetectStatus status = DetectStatus::absent;
  std::optional<ForbiddenWitness> witness;
  std::uint64_t nodes = 0;

  bool found() const { return status == DetectStatus::found; }
};

inline constexpr std::uint64_t kDefaultDetectBudget = 200'000'000;

// Exact K_{s_1,...,s_m}-subgraph detection. Existence is decided with parts
// in descending size order and degree-filtered candidate pools; when a
// witness exists it is rebuilt as the lexicographically smallest index tuple
// in the queried part order.
DetectResult contains_complete_multipartite(const DisjointnessGraph& g,
                                            const std::vector<int>& sizes,
                                            std::uint64_t node_budget = kDefaultDetectBudget);

struct UnionIntersectingResult {
  bool holds = false;
  std::optional<ForbiddenWitness> violation;
};

// (s,t)-union intersecting <=> the disjointness graph is K_{s,t}-free.
UnionIntersectingResult is_union_intersecting(const Family& f, int s, int t,
                                              std::uint64_t node_budget = kDefaultDetectBudget);

// True iff the disjointness graph contains an r-clique (r pairwise disjoint
// sets); r = 1 reads as "family nonempty".
bool has_r_pairwise_disjoint(const Family& f, int r,
                             std::uint64_t node_budget = kDefaultDetectBudget);

}  // namespace unionfam

#endif
