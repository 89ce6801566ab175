#ifndef UNIONFAM_SETFAM_HPP
#define UNIONFAM_SETFAM_HPP

#include <optional>
#include <string>
#include <vector>

#include "unionfam/combinatorics.hpp"
#include "unionfam/errors.hpp"

namespace unionfam {

// One k-element subset of [1, n], bit-packed. Elements are 1-indexed at
// every external interface.
struct KSet {
  int n = 0;
  Mask mask = 0;

  int k() const { return mask_size(mask); }
  std::vector<int> elements() const { return mask_elements(mask); }
  bool operator==(const KSet&) const = default;
};

KSet make_kset(int n, const std::vector<int>& elements);

// Duplicate-free family of k-sets sharing (n, k), stored in canonical
// ascending-mask order. Immutable by convention: operations return new
// families.
struct Family {
  int n = 0;
  int k = 0;
  std::vector<Mask> masks;  // strictly increasing

  std::size_t size() const { return masks.size(); }
  bool empty() const { return masks.empty(); }
  bool contains(Mask m) const;
  KSet set_at(std::size_t i) const { return KSet{n, masks[i]}; }
  bool operator==(const Family&) const = default;
};

// Validating constructors. make_family takes 1-indexed element lists;
// family_from_masks takes prebuilt masks (still validated and sorted).
Family make_family(int n, int k, const std::vector<std::vector<int>>& sets);
Family family_from_masks(int n, int k, std::vector<Mask> masks);

// Permutations of [1, n] are given as vectors sigma with sigma[e-1] = image
// of element e.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Mask apply_permutation_mask(Mask m, const Permutation& sigma);
Family apply_permutation(const Family& f, const Permutation& sigma);

// Isomorphism under the symmetric group on [1, n]; returns a witnessing
// permutation when families are isomorphic.
std::optional<Permutation> is_isomorphic(const Family& f, const Family& g,
                                         std::uint64_t node_budget = 50'000'000);

// Permutation-invariant certificate: two families over the same (n, k) have
// equal certificates iff some permutation of [n] maps one onto the other.
struct CanonicalForm {
  std::string certificate;
  bool operator==(const CanonicalForm&) const = default;
  bool operator<(const CanonicalForm& o) const { return certificate < o.certificate; }
};

// Lexicographically minimal sorted image mask sequence over all relabelings
// of the ground set; works for mixed-size set systems.
std::vector<Mask> canonical_masks(const std::vector<Mask>& masks);

CanonicalForm canonical_form(const Family& f);

}  // namespace unionfam

#endif
