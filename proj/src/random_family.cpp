#include "unionfam/random_family.hpp"

#include <algorithm>
#include <set>

#include "unionfam/errors.hpp"
#include "unionfam/kneser.hpp"

namespace unionfam {

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw BadParameters("bounded_draw with bound 0");
  std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

namespace {

// Greedy repair: while a forbidden witness exists, drop the witness vertex
// with the highest disjointness degree (ties to the smallest index).
Family repair_family(Family f, const ConstraintSpec& spec) {
  if (!spec.must_contain.empty() || spec.ell_min)
    throw BadParameters("repair supports forbidden-pattern and must_avoid constraints only");
  if (!spec.must_avoid.empty()) {
    std::set<Mask> avoid;
    for (const auto& s : spec.must_avoid) avoid.insert(make_kset(f.n, s).mask);
    std::vector<Mask> kept;
    for (Mask m : f.masks)
      if (!avoid.count(m)) kept.push_back(m);
    f.masks = std::move(kept);
  }
  if (!spec.forbidden_pattern) return f;
  while (true) {
    DisjointnessGraph g = build_graph(f);
    DetectResult d = contains_complete_multipartite(g, *spec.forbidden_pattern);
    if (d.status == DetectStatus::budget_exceeded)
      throw BudgetExceeded("repair detection budget exhausted");
    if (!d.found()) return f;
    std::size_t victim = Bits::npos;
    std::size_t victim_deg = 0;
    for (const auto& part : d.witness->parts)
      for (std::size_t v : part) {
        std::size_t deg = g.degree(v);
        if (victim == Bits::npos || deg > victim_deg ||
            (deg == victim_deg && v < victim)) {
          victim = v;
          victim_deg = deg;
        }
      }
    std::vector<Mask> kept;
    for (std::size_t i = 0; i < f.masks.size(); ++i)
      if (i != victim) kept.push_back(f.masks[i]);
    f.masks = std::move(kept);
  }
}

}  // namespace

Family random_family(int n, int k, std::size_t size, std::uint64_t seed,
                     const std::optional<ConstraintSpec>& repair) {
  std::vector<Mask> base = all_k_subsets(n, k);
  if (size > base.size())
    throw BadParameters("requested size exceeds C(n,k) = " + std::to_string(base.size()));

  std::mt19937_64 rng(seed);
  // Floyd's algorithm: `size` distinct indices in [0, |base|).
  std::set<std::uint64_t> picked;
  std::uint64_t m = base.size();
  for (std::uint64_t j = m - size; j < m; ++j) {
    std::uint64_t t = bounded_draw(rng, j + 1);
    if (!picked.insert(t).second) picked.insert(j);
  }
  std::vector<Mask> masks;
  for (std::uint64_t i : picked) masks.push_back(base[i]);
  std::sort(masks.begin(), masks.end());
  Family f{n, k, std::move(masks)};
  if (repair) return repair_family(std::move(f), *repair);
  return f;
}

}  // namespace unionfam
