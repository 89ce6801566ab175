#ifndef UNIONFAM_CONSTRUCTIONS_HPP
#define UNIONFAM_CONSTRUCTIONS_HPP

#include <optional>
#include <vector>

#include "unionfam/setfam.hpp"

namespace unionfam {

// Generators for the named families. Anchor arguments are optional
// everywhere; defaults are the lexicographically smallest admissible
// choices, so repeated runs are reproducible.

// All k-sets containing `center`.
Family star(int n, int k, int center);

// {A : 1 in A, A meets B} plus {B}; requires 1 not in B.
Family hm_family(int n, int k, const KSet& b);
KSet hm_default_anchor(int n, int k);

// {A : |A cap {1,2,3}| >= 2}.
Family hm_prime(int n, int k);

struct JAnchors {
  std::vector<int> J;  // contains 1 (and 2..r for the r-variant)
  std::vector<int> E;  // k-1 elements disjoint from J
};

// {A : E in A, A meets J} u {A : J in A} u {A : 1 in A, A meets E}.
Family j_family(int n, int k, int i, const std::optional<JAnchors>& anchors = {});

// Two shifted interval k-sets plus the star tail avoiding their union.
Family f_i_family(int n, int k, int i);

// Star-with-holes family: {A : 1 in A, A meets [2, sk+1]} u {A_1..A_s}
// u {F_1..F_{t-1}} with A_i = [(i-1)k+2, ik+1].
Family f_st_family(int n, int k, int s, int t,
                   const std::optional<std::vector<std::vector<int>>>& f_anchors = {});

// Elements lying in at least beta+1 = (m-s)+1 of the m anchor sets.
Mask t_set_mask(const std::vector<Mask>& anchors, int s);
std::vector<int> t_set(const std::vector<Mask>& anchors, int s);

// Members of the star at 1 disjoint from at most s-1 anchors.
Family star_restricted(int n, int k, const std::vector<Mask>& anchors, int s);

// Members of the star at r avoiding [1, r-1] and disjoint from at most s-1
// anchors; r = 1 coincides with star_restricted.
Family star_restricted_multipartite(int n, int k, const std::vector<Mask>& anchors,
                                    int s, int r);

// Largest beta' >= beta preserving floor((s+beta')k / (beta'+1)); if the
// floor already equals k the answer is beta itself.
long long beta_hat(int k, int s, long long beta);

// Star-restricted family with i near-identical anchors A_j = E u {x_j} plus
// one block of t-1 extra sets per anchor.
Family j_1t_family(int n, int k, int i, int t, const std::optional<JAnchors>& anchors = {});

enum class JFamilyMode { literal, completed };

// Multipartite variant. literal = the bare displayed union; completed adds
// the full stars at 1..r-1 and the anchor sets themselves.
Family j_1t_r_family(int n, int k, int i, int t, int r, JFamilyMode mode,
                     const std::optional<JAnchors>& anchors = {});

// Search for anchors meeting all four extremal conditions; empty when no
// anchor tuple exists (a legitimate outcome for some (k, s, beta)).
std::optional<Family> hmnew3_extremal(int n, int k, int s, int t, long long beta,
                                      std::uint64_t node_budget = 100'000'000);

// For explicitly supplied anchors: star_restricted u anchors u {F_1..F_{t-1}}.
Family ranked_L_family(int n, int k, int s, int t, const std::vector<Mask>& anchors);

}  // namespace unionfam

#endif
