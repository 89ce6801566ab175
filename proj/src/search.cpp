#include "unionfam/search.hpp"

#include <algorithm>
#include <numeric>

#include "unionfam/bits.hpp"
#include "unionfam/errors.hpp"
#include "unionfam/kneser.hpp"
#include "unionfam/structure.hpp"

namespace unionfam {

void ConstraintSpec::validate() const {
  if (!forbidden_pattern && !ell_min && must_contain.empty() && must_avoid.empty())
    throw BadParameters("constraint spec must contain at least one constraint");
  if (forbidden_pattern) {
    if (forbidden_pattern->empty()) throw BadParameters("empty forbidden pattern");
    for (int s : *forbidden_pattern)
      if (s < 1) throw BadParameters("pattern part sizes must be >= 1");
  }
  if (ell_min) {
    if (ell_min->first < 2) throw BadParameters("ell_min needs r >= 2");
    if (ell_min->second < 1) throw BadParameters("ell_min needs c >= 1");
  }
}

namespace {

// --------------------------------------------------------------------------
// Oracle-side primitives. These are deliberately plain: the oracle is the
// trust anchor the branch-and-bound is checked against, so it uses its own
// small word-mask routines rather than the library detectors.

using VMask = std::uint32_t;

bool oracle_pattern_rec(const std::vector<VMask>& adj, const std::vector<int>& sizes,
                        std::size_t pi, int picked, int min_v, VMask pool, VMask within) {
  if (picked == sizes[pi]) {
    if (pi + 1 == sizes.size()) return true;
    return oracle_pattern_rec(adj, sizes, pi + 1, 0, 0, within, within);
  }
  for (int v = min_v; v < 32; ++v) {
    if (!(pool & (VMask{1} << v))) continue;
    VMask next_within = within & adj[v];
    if (oracle_pattern_rec(adj, sizes, pi, picked + 1, v + 1, pool & ~(VMask{1} << v),
                           next_within))
      return true;
  }
  return false;
}

bool oracle_has_pattern(const std::vector<VMask>& adj, VMask verts,
                        const std::vector<int>& sizes) {
  return oracle_pattern_rec(adj, sizes, 0, 0, 0, verts, verts);
}

bool oracle_has_clique(const std::vector<VMask>& adj, VMask verts, int r) {
  if (r == 1) return verts != 0;
  return oracle_has_pattern(adj, verts, std::vector<int>(r, 1));
}

// ell_r(verts) >= c <=> every removal of fewer than c vertices leaves an
// r-clique.
bool oracle_ell_at_least(const std::vector<VMask>& adj, VMask verts, int r, int c) {
  std::vector<int> vs;
  for (int v = 0; v < 32; ++v)
    if (verts & (VMask{1} << v)) vs.push_back(v);
  int m = static_cast<int>(vs.size());
  for (int j = 0; j < c; ++j) {  // removal sizes 0 .. c-1
    if (j > m) break;
    std::vector<int> idx(j);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      VMask rem = verts;
      for (int x : idx) rem &= ~(VMask{1} << vs[x]);
      if (!oracle_has_clique(adj, rem, r)) return false;
      int p = j - 1;
      while (p >= 0 && idx[p] == m - j + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < j; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  return true;
}

struct BaseSets {
  int n = 0, k = 0;
  std::vector<Mask> sets;  // ascending mask order

  std::size_t index_of(Mask m) const {
    auto it = std::lower_bound(sets.begin(), sets.end(), m);
    if (it == sets.end() || *it != m) throw BadParameters("anchor is not a k-set of [n]");
    return static_cast<std::size_t>(it - sets.begin());
  }
};

Family family_from_pattern(const BaseSets& base, VMask p) {
  std::vector<Mask> masks;
  for (int v = 0; v < 32; ++v)
    if (p & (VMask{1} << v)) masks.push_back(base.sets[v]);
  return Family{base.n, base.k, std::move(masks)};
}

// Lexicographic order on ascending index lists of equal-size families.
bool pattern_lex_less(VMask a, VMask b) {
  VMask d = a ^ b;
  if (!d) return false;
  VMask low = d & (~d + 1);
  return (a & low) != 0;
}

}  // namespace

SearchResult oracle_max_family(int n, int k, const ConstraintSpec& spec) {
  spec.validate();
  if (binom_u64(n, k) > 24)
    throw TooLarge("oracle requires C(n,k) <= 24 so all subfamilies fit in 2^24 patterns");

  BaseSets base{n, k, all_k_subsets(n, k)};
  int m = static_cast<int>(base.sets.size());

  std::vector<VMask> adj(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && (base.sets[i] & base.sets[j]) == 0) adj[i] |= VMask{1} << j;

  VMask required = 0, avoided = 0;
  for (const auto& s : spec.must_contain)
    required |= VMask{1} << base.index_of(make_kset(n, s).mask);
  for (const auto& s : spec.must_avoid)
    avoided |= VMask{1} << base.index_of(make_kset(n, s).mask);

  SearchResult res;
  res.optimal = true;
  bool have = false;
  VMask best = 0;
  int best_size = -1;

  VMask end = m == 32 ? 0 : (VMask{1} << m);  // m <= 24 in practice
  for (VMask p = 0;; ++p) {
    if (end && p >= end) break;
    ++res.nodes_explored;
    if ((p & required) != required || (p & avoided)) continue;
    int sz = std::popcount(p);
    if (sz < best_size) continue;
    if (sz == best_size && have && !pattern_lex_less(p, best)) continue;
    if (spec.forbidden_pattern && oracle_has_pattern(adj, p, *spec.forbidden_pattern))
      continue;
    if (spec.ell_min &&
        !oracle_ell_at_least(adj, p, spec.ell_min->first, spec.ell_min->second))
      continue;
    best = p;
    best_size = sz;
    have = true;
  }
  if (have) {
    res.max_size = best_size;
    res.witness = family_from_pattern(base, best);
  } else {
    res.witness = Family{n, k, {}};
  }
  return res;
}

// ---------------------------------------------------------------------------
// Branch and bound.

namespace {

struct BnB {
  const BaseSets& base;
  const ConstraintSpec& spec;
  Bits forced;    // must_contain indices (or the symmetry-forced first set)
  Bits excluded;  // must_avoid indices
  std::uint64_t nodes = 0, budget;
  bool budget_hit = false;

  int best_size = -1;
  std::vector<std::size_t> best;
  bool have = false;

  int target = -1;  // pass-2: first family of exactly this size wins
  std::vector<std::size_t> target_found;
  bool target_hit = false;

  BnB(const BaseSets& b, const ConstraintSpec& s, std::uint64_t bud)
      : base(b), spec(s), forced(b.sets.size()), excluded(b.sets.size()), budget(bud) {}

  bool tick() {
    if (++nodes > budget) {
      budget_hit = true;
      return false;
    }
    return true;
  }

  Family to_family(const std::vector<std::size_t>& chosen) const {
    std::vector<Mask> masks;
    for (std::size_t v : chosen) masks.push_back(base.sets[v]);
    std::sort(masks.begin(), masks.end());
    return Family{base.n, base.k, std::move(masks)};
  }

  bool pattern_ok(const std::vector<std::size_t>& chosen) {
    if (!spec.forbidden_pattern) return true;
    DisjointnessGraph g = build_graph(to_family(chosen));
    return !contains_complete_multipartite(g, *spec.forbidden_pattern).found();
  }

  bool ell_ok(const std::vector<std::size_t>& chosen) {
    if (!spec.ell_min) return true;
    return ell(to_family(chosen), spec.ell_min->first).value >= spec.ell_min->second;
  }

  void accept_leaf(const std::vector<std::size_t>& chosen) {
    if (!ell_ok(chosen)) return;
    int sz = static_cast<int>(chosen.size());
    if (target >= 0) {
      if (sz == target) {
        target_found = chosen;
        target_hit = true;
      }
      return;
    }
    if (sz > best_size) {
      best_size = sz;
      best = chosen;
      have = true;
    }
  }

  // Include-before-exclude DFS over positions in ascending mask order; among
  // equal-size leaves this visit order is lexicographic, so pass 2 stops at
  // the first leaf of the target size.
  void dfs(std::size_t pos, std::vector<std::size_t>& chosen) {
    if (budget_hit || target_hit) return;
    if (!tick()) return;
    std::size_t m = base.sets.size();
    std::size_t remaining = 0;
    for (std::size_t v = pos; v < m; ++v)
      if (!excluded.test(v)) ++remaining;
    int ceiling = static_cast<int>(chosen.size() + remaining);
    if (target < 0) {
      if (ceiling <= best_size) return;
    } else {
      if (ceiling < target || static_cast<int>(chosen.size()) > target) return;
      if (static_cast<int>(chosen.size()) == target) {
        // Lex-first completion from here excludes everything else, but the
        // forced sets beyond pos must all be present already.
        for (std::size_t v = pos; v < m; ++v)
          if (forced.test(v)) return;
        accept_leaf(chosen);
        return;
      }
    }
    if (pos == m) {
      accept_leaf(chosen);
      return;
    }
    if (!excluded.test(pos)) {
      chosen.push_back(pos);
      if (pattern_ok(chosen)) dfs(pos + 1, chosen);
      chosen.pop_back();
      if (budget_hit || target_hit) return;
    }
    if (!forced.test(pos)) dfs(pos + 1, chosen);
  }

  void run() {
    std::vector<std::size_t> chosen;
    dfs(0, chosen);
  }
};

}  // namespace

SearchResult branch_and_bound_max(int n, int k, const ConstraintSpec& spec,
                                  std::uint64_t node_budget) {
  spec.validate();
  BaseSets base{n, k, all_k_subsets(n, k)};

  BnB bnb(base, spec, node_budget);
  for (const auto& s : spec.must_contain)
    bnb.forced.set(base.index_of(make_kset(n, s).mask));
  for (const auto& s : spec.must_avoid)
    bnb.excluded.set(base.index_of(make_kset(n, s).mask));
  // A set that is both required and avoided makes the spec unsatisfiable;
  // the DFS then finds nothing and reports max_size = -1, matching the
  // oracle.

  // For permutation-invariant specs some maximum family can be relabeled to
  // contain {1..k}, so nonempty candidates are searched with the first set
  // forced; the empty family is the one case outside that branch.
  bool force_first = spec.permutation_invariant();
  if (force_first) bnb.forced.set(0);
  bnb.run();
  if (force_first) {
    std::vector<std::size_t> empty;
    if (bnb.ell_ok(empty) && bnb.best_size < 0) {
      bnb.best_size = 0;
      bnb.best = {};
      bnb.have = true;
    }
  }

  SearchResult res;
  res.nodes_explored = bnb.nodes;
  res.wall_budget_hit = bnb.budget_hit;
  res.optimal = !bnb.budget_hit;
  if (!bnb.have) {
    res.witness = Family{n, k, {}};
    return res;
  }
  res.max_size = bnb.best_size;
  res.witness = bnb.to_family(bnb.best);

  // Witness pass: rerun in lexicographic order and stop at the first family
  // of maximum size.
  if (!bnb.budget_hit && res.max_size > 0) {
    BnB lex(base, spec, node_budget);
    lex.forced = bnb.forced;
    lex.excluded = bnb.excluded;
    lex.target = res.max_size;
    lex.run();
    res.nodes_explored += lex.nodes;
    if (lex.budget_hit) {
      res.wall_budget_hit = true;
    } else if (lex.target_hit) {
      res.witness = lex.to_family(lex.target_found);
    }
  }

  // Independent re-verification of the witness through the library
  // detectors rather than the search's own bookkeeping.
  if (res.max_size >= 0 && !res.wall_budget_hit) {
    if (spec.forbidden_pattern) {
      DisjointnessGraph g = build_graph(res.witness);
      if (contains_complete_multipartite(g, *spec.forbidden_pattern).found())
        throw TheoremViolation("search witness violates its forbidden pattern");
    }
    if (spec.ell_min &&
        ell(res.witness, spec.ell_min->first).value < spec.ell_min->second)
      throw TheoremViolation("search witness violates its ell constraint");
  }
  return res;
}

std::vector<Family> enumerate_maximal(int n, int k, const ConstraintSpec& spec,
                                      std::size_t limit) {
  spec.validate();
  if (binom_u64(n, k) > 24)
    throw TooLarge("maximal enumeration requires C(n,k) <= 24");

  BaseSets base{n, k, all_k_subsets(n, k)};
  int m = static_cast<int>(base.sets.size());
  std::vector<VMask> adj(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && (base.sets[i] & base.sets[j]) == 0) adj[i] |= VMask{1} << j;

  VMask required = 0, avoided = 0;
  for (const auto& s : spec.must_contain)
    required |= VMask{1} << base.index_of(make_kset(n, s).mask);
  for (const auto& s : spec.must_avoid)
    avoided |= VMask{1} << base.index_of(make_kset(n, s).mask);

  auto satisfies = [&](VMask p) {
    if ((p & required) != required || (p & avoided)) return false;
    if (spec.forbidden_pattern && oracle_has_pattern(adj, p, *spec.forbidden_pattern))
      return false;
    if (spec.ell_min &&
        !oracle_ell_at_least(adj, p, spec.ell_min->first, spec.ell_min->second))
      return false;
    return true;
  };

  std::vector<std::vector<Mask>> classes;  // canonical representatives
  VMask end = m == 32 ? 0 : (VMask{1} << m);
  for (VMask p = 0;; ++p) {
    if (end && p >= end) break;
    if (!satisfies(p)) continue;
    bool maximal = true;
    for (int v = 0; v < m && maximal; ++v)
      if (!(p & (VMask{1} << v)) && satisfies(p | (VMask{1} << v))) maximal = false;
    if (!maximal) continue;
    Family f = family_from_pattern(base, p);
    std::vector<Mask> canon = canonical_masks(f.masks);
    if (std::find(classes.begin(), classes.end(), canon) == classes.end()) {
      classes.push_back(std::move(canon));
      if (classes.size() > limit)
        throw LimitExceeded("maximal class count exceeds limit=" + std::to_string(limit));
    }
  }

  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<Family> out;
  for (auto& c : classes) out.push_back(Family{n, k, std::move(c)});
  return out;
}

}  // namespace unionfam
