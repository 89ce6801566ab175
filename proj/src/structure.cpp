#include "unionfam/structure.hpp"

#include <algorithm>
#include <numeric>

#include "unionfam/errors.hpp"

namespace unionfam {

bool is_intersecting(const Family& f) { return disjoint_pair_count(f) == 0; }

std::pair<int, std::size_t> max_element_degree(const Family& f) {
  if (f.empty()) throw EmptyFamily("max_element_degree of an empty family");
  std::vector<std::size_t> deg(f.n, 0);
  for (Mask m : f.masks) {
    Mask w = m;
    while (w) {
      deg[std::countr_zero(w)]++;
      w &= w - 1;
    }
  }
  std::size_t arg = 0;
  for (std::size_t e = 1; e < deg.size(); ++e)
    if (deg[e] > deg[arg]) arg = e;
  return {static_cast<int>(arg) + 1, deg[arg]};
}

Family remove_by_indices(const Family& f, const std::vector<std::size_t>& idx) {
  std::vector<bool> drop(f.size(), false);
  for (std::size_t i : idx) drop[i] = true;
  std::vector<Mask> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!drop[i]) out.push_back(f.masks[i]);
  return Family{f.n, f.k, std::move(out)};
}

// ---------------------------------------------------------------------------
// Maximum clique (Tomita-style greedy-coloring branch and bound) used both
// for the ell_2 vertex-cover fast path and as a subroutine elsewhere.

namespace {

struct CliqueSolver {
  const std::vector<Bits>& adj;
  std::size_t n;
  std::vector<std::size_t> best, cur;
  std::uint64_t nodes = 0, budget;

  CliqueSolver(const std::vector<Bits>& adj_, std::uint64_t budget_)
      : adj(adj_), n(adj_.size()), budget(budget_) {}

  void expand(const Bits& cand) {
    if (++nodes > budget) throw BudgetExceeded("clique search node budget exhausted");
    if (!cand.any()) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    // Greedy coloring gives both an upper bound and the branching order.
    std::vector<std::pair<int, std::size_t>> order;
    Bits uncolored = cand;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bits avail = uncolored;
      while (avail.any()) {
        std::size_t v = avail.next();
        order.emplace_back(color, v);
        avail.and_not(adj[v]);
        avail.reset(v);
        uncolored.reset(v);
      }
    }
    Bits rem = cand;
    for (std::size_t i = order.size(); i-- > 0;) {
      auto [c, v] = order[i];
      if (cur.size() + static_cast<std::size_t>(c) <= best.size()) return;
      cur.push_back(v);
      expand(rem & adj[v]);
      cur.pop_back();
      rem.reset(v);
    }
  }

  std::vector<std::size_t> solve() {
    Bits all(n);
    for (std::size_t v = 0; v < n; ++v) all.set(v);
    expand(all);
    std::sort(best.begin(), best.end());
    return best;
  }
};

// Lexicographically first r-clique among `allowed`, or empty.
struct RCliqueFinder {
  const std::vector<Bits>& adj;
  int r;
  std::uint64_t* nodes;
  std::uint64_t budget;
  std::vector<std::size_t> cur;

  bool dfs(std::size_t from, const Bits& cand) {
    if (static_cast<int>(cur.size()) == r) return true;
    if (++*nodes > budget) throw BudgetExceeded("clique search node budget exhausted");
    int need = r - static_cast<int>(cur.size());
    if (static_cast<int>(cand.count()) < need) return false;
    for (std::size_t v = cand.next(from); v != Bits::npos; v = cand.next(v + 1)) {
      cur.push_back(v);
      Bits next = cand & adj[v];
      if (static_cast<int>(next.count()) >= need - 1 && dfs(v + 1, next)) return true;
      cur.pop_back();
    }
    return false;
  }
};

std::vector<std::size_t> find_r_clique(const std::vector<Bits>& adj, const Bits& allowed,
                                       int r, std::uint64_t* nodes, std::uint64_t budget) {
  RCliqueFinder f{adj, r, nodes, budget, {}};
  if (f.dfs(0, allowed)) return f.cur;
  return {};
}

// Hitting-set branch and bound for ell_r, r >= 3.
struct HittingSolver {
  const std::vector<Bits>& adj;
  int r;
  std::size_t n;
  std::uint64_t nodes = 0, budget;
  std::vector<std::size_t> best;  // incumbent removal set
  bool have_best = false;

  HittingSolver(const std::vector<Bits>& adj_, int r_, std::uint64_t budget_)
      : adj(adj_), r(r_), n(adj_.size()), budget(budget_) {}

  Bits alive_from(const std::vector<std::size_t>& removed) const {
    Bits a(n);
    for (std::size_t v = 0; v < n; ++v) a.set(v);
    for (std::size_t v : removed) a.reset(v);
    return a;
  }

  // Greedy vertex-disjoint r-clique packing: admissible lower bound on the
  // removals still required.
  int packing_bound(Bits alive) {
    int lb = 0;
    while (true) {
      auto cl = find_r_clique(adj, alive, r, &nodes, budget);
      if (cl.empty()) break;
      ++lb;
      for (std::size_t v : cl) alive.reset(v);
    }
    return lb;
  }

  void dfs(std::vector<std::size_t>& removed) {
    if (++nodes > budget) throw BudgetExceeded("ell branch-and-bound node budget exhausted");
    Bits alive = alive_from(removed);
    if (have_best && removed.size() + static_cast<std::size_t>(packing_bound(alive)) >= best.size())
      return;
    auto cl = find_r_clique(adj, alive, r, &nodes, budget);
    if (cl.empty()) {
      if (!have_best || removed.size() < best.size()) {
        best = removed;
        have_best = true;
      }
      return;
    }
    for (std::size_t v : cl) {
      removed.push_back(v);
      dfs(removed);
      removed.pop_back();
    }
  }

  std::vector<std::size_t> solve() {
    std::vector<std::size_t> removed;
    dfs(removed);
    std::sort(best.begin(), best.end());
    return best;
  }
};

}  // namespace

EllResult ell(const Family& f, int r, std::uint64_t node_budget) {
  if (r < 2) throw BadParameters("ell needs r >= 2, got r=" + std::to_string(r));
  DisjointnessGraph g = build_graph(f);
  std::size_t n = g.order();

  EllResult res;
  if (r == 2) {
    // Minimum vertex cover = complement of a maximum independent set; the
    // independent set is a maximum clique of the complement graph. Isolated
    // vertices never enter a minimal cover, so the solve runs on the
    // non-isolated part only.
    std::vector<std::size_t> active;
    for (std::size_t v = 0; v < n; ++v)
      if (g.adj[v].any()) active.push_back(v);
    if (active.empty()) return res;  // already intersecting
    std::size_t a = active.size();
    std::vector<Bits> comp(a, Bits(a));
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < a; ++j)
        if (i != j && !g.adj[active[i]].test(active[j])) comp[i].set(j);
    CliqueSolver cs(comp, node_budget);
    std::vector<std::size_t> mis = cs.solve();
    std::vector<bool> keep(a, false);
    for (std::size_t v : mis) keep[v] = true;
    for (std::size_t i = 0; i < a; ++i)
      if (!keep[i]) res.removal.push_back(active[i]);
    res.value = static_cast<int>(res.removal.size());
    return res;
  }

  HittingSolver hs(g.adj, r, node_budget);
  res.removal = hs.solve();
  res.value = static_cast<int>(res.removal.size());
  return res;
}

// ---------------------------------------------------------------------------
// Peeling.

PeelingTrace peel(const Family& f, int t) {
  if (t < 1) throw BadParameters("peel needs t >= 1");
  auto ui = is_union_intersecting(f, 1, t);
  if (!ui.holds)
    throw NotUnionIntersecting("peel requires a (1,t)-union intersecting family");

  DisjointnessGraph g = build_graph(f);
  std::size_t n = g.order();
  Bits alive(n);
  for (std::size_t v = 0; v < n; ++v) alive.set(v);

  PeelingTrace trace;
  std::vector<Mask> removed_masks;
  while (true) {
    // Smallest-mask set with a disjoint partner still alive.
    std::size_t b = Bits::npos;
    for (std::size_t v = alive.next(); v != Bits::npos; v = alive.next(v + 1)) {
      if ((g.adj[v] & alive).any()) {
        b = v;
        break;
      }
    }
    if (b == Bits::npos) break;
    Bits nb = g.adj[b] & alive;
    std::size_t c = nb.next();
    trace.pairs.emplace_back(f.set_at(b), f.set_at(c));
    std::size_t dropped = nb.count();
    if (dropped > static_cast<std::size_t>(t - 1))
      throw TheoremViolation("peeling round removed more than t-1 sets from a (1,t)-union intersecting family");
    nb.for_each([&](std::size_t v) { removed_masks.push_back(f.masks[v]); });
    alive.and_not(nb);
  }
  trace.m = trace.pairs.size();

  std::uint64_t round_cap = binom_u64(2 * f.k - 1, f.k - 1);
  if (trace.m > round_cap)
    throw TheoremViolation("peeling took more rounds than the skew set-pair bound allows");

  // The doubled pair sequence (B_1,C_1),...,(B_m,C_m),(C_m,B_m),...,(C_1,B_1)
  // must form a valid skew set-pair system; this is a pure bug detector.
  if (trace.m > 0) {
    SetPairSystem sys;
    sys.ground_n = f.n;
    for (const auto& [b, c] : trace.pairs) sys.pairs.emplace_back(b.mask, c.mask);
    for (std::size_t j = trace.m; j < 2 * trace.m; ++j) {
      const auto& [b, c] = trace.pairs[2 * trace.m - j - 1];
      sys.pairs.emplace_back(c.mask, b.mask);
    }
    if (!verify_set_pair_system(sys, f.k, f.k))
      throw TheoremViolation("doubled peeling pairs do not form a skew set-pair system");
  }

  std::sort(removed_masks.begin(), removed_masks.end());
  trace.removed = Family{f.n, f.k, std::move(removed_masks)};
  std::vector<Mask> core_masks;
  alive.for_each([&](std::size_t v) { core_masks.push_back(f.masks[v]); });
  trace.core = Family{f.n, f.k, std::move(core_masks)};
  if (!is_intersecting(trace.core))
    throw TheoremViolation("peeling terminated with a non-intersecting core");
  return trace;
}

// ---------------------------------------------------------------------------
// Skew set-pair systems.

bool verify_set_pair_system(const SetPairSystem& s, int k, int l) {
  for (const auto& [a, b] : s.pairs) {
    if (mask_size(a) != k || mask_size(b) != l)
      throw SizeMismatch("set-pair system with |A_i| != k or |B_i| != l");
  }
  std::size_t h = s.pairs.size();
  for (std::size_t i = 0; i < h; ++i)
    if (s.pairs[i].first & s.pairs[i].second) return false;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j)
      if ((s.pairs[i].first & s.pairs[j].second) == 0) return false;
  if (h > binom_u64(k + l, k))
    throw TheoremViolation("valid skew set-pair system longer than C(k+l,k)");
  return true;
}

namespace {

struct SetPairSearch {
  const std::vector<Mask>& as;
  const std::vector<Mask>& bs;
  std::uint64_t nodes = 0, budget;
  int best = 0;

  void dfs(std::vector<Mask>& chosen_a, std::vector<Mask>& chosen_b) {
    best = std::max(best, static_cast<int>(chosen_a.size()));
    if (++nodes > budget) throw BudgetExceeded("set-pair search node budget exhausted");

    // Candidates for the next B: unused and meeting every chosen A.
    std::vector<Mask> b_cands;
    for (Mask b : bs) {
      if (std::find(chosen_b.begin(), chosen_b.end(), b) != chosen_b.end()) continue;
      bool ok = true;
      for (Mask a : chosen_a)
        if ((a & b) == 0) {
          ok = false;
          break;
        }
      if (ok) b_cands.push_back(b);
    }
    if (chosen_a.size() + b_cands.size() <= static_cast<std::size_t>(best)) return;

    for (Mask b : b_cands) {
      for (Mask a : as) {
        if (a & b) continue;
        if (std::find(chosen_a.begin(), chosen_a.end(), a) != chosen_a.end()) continue;
        chosen_a.push_back(a);
        chosen_b.push_back(b);
        dfs(chosen_a, chosen_b);
        chosen_a.pop_back();
        chosen_b.pop_back();
      }
    }
  }
};

}  // namespace

int max_set_pair_system(int k, int l, int ground, std::uint64_t node_budget) {
  if (ground < 1 || ground > 12)
    throw BadParameters("set-pair ground set limited to [1,12] points, got " + std::to_string(ground));
  if (k < 1 || l < 1) throw BadParameters("set-pair sizes must be >= 1");
  if (k + l > ground) return 0;

  std::vector<Mask> as = all_k_subsets(ground, k);
  std::vector<Mask> bs = all_k_subsets(ground, l);

  // Relabeling the ground set lets the first pair be fixed canonically.
  std::vector<Mask> a0{(Mask{1} << k) - 1};
  std::vector<Mask> b0{((Mask{1} << (k + l)) - 1) ^ a0[0]};

  SetPairSearch s{as, bs, 0, node_budget, 1};
  s.dfs(a0, b0);
  return s.best;
}

}  // namespace unionfam
