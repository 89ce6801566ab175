#include "unionfam/kneser.hpp"

#include <algorithm>
#include <numeric>

#include "unionfam/errors.hpp"

namespace unionfam {

std::uint64_t DisjointnessGraph::edge_count() const {
  std::uint64_t deg_sum = 0;
  for (const Bits& row : adj) deg_sum += row.count();
  return deg_sum / 2;
}

DisjointnessGraph build_graph(const Family& f) {
  DisjointnessGraph g;
  g.family = f;
  std::size_t m = f.size();
  g.adj.assign(m, Bits(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if ((f.masks[i] & f.masks[j]) == 0) {
        g.adj[i].set(j);
        g.adj[j].set(i);
      }
  return g;
}

Family neighborhood(const Family& f, const KSet& a) {
  if (a.n != f.n || a.k() != f.k)
    throw ParameterMismatch("probe set does not match the family's (n,k)");
  std::vector<Mask> out;
  for (Mask m : f.masks)
    if ((m & a.mask) == 0) out.push_back(m);
  return Family{f.n, f.k, std::move(out)};
}

std::uint64_t disjoint_pair_count(const Family& f) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < f.masks.size(); ++i)
    for (std::size_t j = i + 1; j < f.masks.size(); ++j)
      if ((f.masks[i] & f.masks[j]) == 0) ++c;
  return c;
}

// ---------------------------------------------------------------------------
// Complete multipartite detection.

namespace {

struct DetectCtx {
  const DisjointnessGraph& g;
  std::vector<int> sizes;           // part sizes in search order
  std::vector<std::size_t> min_deg; // degree a vertex in part i must have
  std::uint64_t nodes = 0;
  std::uint64_t budget;

  DetectCtx(const DisjointnessGraph& g_, std::vector<int> sizes_, std::uint64_t budget_)
      : g(g_), sizes(std::move(sizes_)), budget(budget_) {
    int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    min_deg.resize(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i)
      min_deg[i] = static_cast<std::size_t>(total - sizes[i]);
  }

  void tick() {
    if (++nodes > budget) throw BudgetExceeded("detection node budget exhausted");
  }

  // Remaining demand strictly after part `pi`.
  int demand_after(std::size_t pi) const {
    int d = 0;
    for (std::size_t j = pi + 1; j < sizes.size(); ++j) d += sizes[j];
    return d;
  }
};

// Candidate ordering for the existence phase: descending degree, index as
// tie-break.
std::vector<std::size_t> degree_order(const DisjointnessGraph& g) {
  std::vector<std::size_t> ord(g.order());
  std::iota(ord.begin(), ord.end(), 0);
  std::stable_sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
    return g.degree(a) > g.degree(b);
  });
  return ord;
}

// pool: vertices adjacent to everything in completed parts; within_new: pool
// further intersected with neighborhoods of the current part's chosen
// vertices (becomes the next part's pool).
bool exists_search(DetectCtx& c, std::size_t pi, int picked, std::size_t min_next,
                   const Bits& pool, const Bits& within_new, Bits& used,
                   std::vector<std::vector<std::size_t>>& parts,
                   const std::vector<std::size_t>& ord) {
  if (picked == c.sizes[pi]) {
    if (pi + 1 == c.sizes.size()) return true;
    return exists_search(c, pi + 1, 0, 0, within_new, within_new, used, parts, ord);
  }
  int future = c.demand_after(pi);
  for (std::size_t oi = min_next; oi < ord.size(); ++oi) {
    std::size_t v = ord[oi];
    if (!pool.test(v) || used.test(v)) continue;
    if (c.g.degree(v) < c.min_deg[pi]) continue;
    c.tick();
    Bits next_within = within_new & c.g.adj[v];
    // Optimistic room check for the parts still to come.
    if (future > 0 && static_cast<int>(next_within.count()) < future) continue;
    used.set(v);
    parts[pi].push_back(v);
    if (exists_search(c, pi, picked + 1, oi + 1, pool, next_within, used, parts, ord))
      return true;
    parts[pi].pop_back();
    used.reset(v);
  }
  return false;
}

// Lexicographically-minimal witness in the queried part order: vertices are
// tried in ascending index order, so the first complete assignment found is
// the lex-min flattened tuple.
bool lex_search(DetectCtx& c, std::size_t pi, int picked, std::size_t min_next,
                const Bits& pool, const Bits& within_new, Bits& used,
                std::vector<std::vector<std::size_t>>& parts) {
  if (picked == c.sizes[pi]) {
    if (pi + 1 == c.sizes.size()) return true;
    return lex_search(c, pi + 1, 0, 0, within_new, within_new, used, parts);
  }
  int future = c.demand_after(pi);
  for (std::size_t v = pool.next(min_next); v != Bits::npos; v = pool.next(v + 1)) {
    if (used.test(v)) continue;
    if (c.g.degree(v) < c.min_deg[pi]) continue;
    c.tick();
    Bits next_within = within_new & c.g.adj[v];
    if (future > 0 && static_cast<int>(next_within.count()) < future) continue;
    used.set(v);
    parts[pi].push_back(v);
    if (lex_search(c, pi, picked + 1, v + 1, pool, next_within, used, parts)) return true;
    parts[pi].pop_back();
    used.reset(v);
  }
  return false;
}

}  // namespace

DetectResult contains_complete_multipartite(const DisjointnessGraph& g,
                                            const std::vector<int>& sizes,
                                            std::uint64_t node_budget) {
  if (sizes.empty()) throw BadParameters("pattern must have at least one part");
  for (int s : sizes)
    if (s < 1) throw BadParameters("pattern part sizes must be >= 1");

  DetectResult res;
  int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  if (static_cast<std::size_t>(total) > g.order()) return res;

  // Existence pass, largest parts first.
  std::vector<int> desc = sizes;
  std::sort(desc.begin(), desc.end(), std::greater<int>());
  DetectCtx ec(g, desc, node_budget);
  Bits all(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) all.set(v);
  Bits used(g.order());
  std::vector<std::vector<std::size_t>> scratch(desc.size());
  std::vector<std::size_t> ord = degree_order(g);
  bool exists;
  try {
    exists = exists_search(ec, 0, 0, 0, all, all, used, scratch, ord);
  } catch (const BudgetExceeded&) {
    res.status = DetectStatus::budget_exceeded;
    res.nodes = ec.nodes;
    return res;
  }
  res.nodes = ec.nodes;
  if (!exists) return res;

  // Witness pass in the queried order.
  DetectCtx lc(g, sizes, node_budget);
  Bits used2(g.order());
  std::vector<std::vector<std::size_t>> parts(sizes.size());
  bool ok;
  try {
    ok = lex_search(lc, 0, 0, 0, all, all, used2, parts);
  } catch (const BudgetExceeded&) {
    res.status = DetectStatus::budget_exceeded;
    res.nodes += lc.nodes;
    return res;
  }
  res.nodes += lc.nodes;
  if (!ok)
    throw TheoremViolation("witness reconstruction failed after positive existence check");
  res.status = DetectStatus::found;
  res.witness = ForbiddenWitness{std::move(parts)};
  return res;
}

UnionIntersectingResult is_union_intersecting(const Family& f, int s, int t,
                                              std::uint64_t node_budget) {
  if (s < 1 || s > t)
    throw BadParameters("need 1 <= s <= t, got s=" + std::to_string(s) + ", t=" + std::to_string(t));
  DisjointnessGraph g = build_graph(f);
  DetectResult d = contains_complete_multipartite(g, {s, t}, node_budget);
  if (d.status == DetectStatus::budget_exceeded)
    throw BudgetExceeded("K_{s,t} detection ran out of budget; verdict withheld");
  UnionIntersectingResult r;
  r.holds = !d.found();
  r.violation = d.witness;
  return r;
}

bool has_r_pairwise_disjoint(const Family& f, int r, std::uint64_t node_budget) {
  if (r < 1) throw BadParameters("need r >= 1");
  if (r == 1) return !f.empty();
  DisjointnessGraph g = build_graph(f);
  DetectResult d = contains_complete_multipartite(g, std::vector<int>(r, 1), node_budget);
  if (d.status == DetectStatus::budget_exceeded)
    throw BudgetExceeded("r-clique detection ran out of budget; verdict withheld");
  return d.found();
}

}  // namespace unionfam
