#include "unionfam/setfam.hpp"

#include <algorithm>
#include <cstring>
#include <map>

namespace unionfam {

KSet make_kset(int n, const std::vector<int>& elements) {
  if (n < 1 || n > 64) throw BadParameters("ground set size must be in [1,64], got n=" + std::to_string(n));
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > n)
      throw ElementOutOfRange("element " + std::to_string(e) + " outside [1," + std::to_string(n) + "]");
    m |= elem_bit(e);
  }
  if (mask_size(m) != static_cast<int>(elements.size()))
    throw WrongSetSize("repeated element in set literal");
  return KSet{n, m};
}

Family family_from_masks(int n, int k, std::vector<Mask> masks) {
  if (n < 1 || n > 64) throw BadParameters("ground set size must be in [1,64], got n=" + std::to_string(n));
  if (k < 1 || k > n) throw BadParameters("need 1 <= k <= n, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
  Mask ground = full_mask(n);
  for (Mask m : masks) {
    if (m & ~ground) throw ElementOutOfRange("set exceeds ground set [1," + std::to_string(n) + "]");
    if (mask_size(m) != k)
      throw WrongSetSize("set of size " + std::to_string(mask_size(m)) + " in a " + std::to_string(k) + "-uniform family");
  }
  std::sort(masks.begin(), masks.end());
  if (std::adjacent_find(masks.begin(), masks.end()) != masks.end())
    throw DuplicateSet("family literal lists the same set twice");
  return Family{n, k, std::move(masks)};
}

Family make_family(int n, int k, const std::vector<std::vector<int>>& sets) {
  std::vector<Mask> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) {
    if (static_cast<int>(s.size()) != k)
      throw WrongSetSize("set literal of size " + std::to_string(s.size()) + " in a " + std::to_string(k) + "-uniform family");
    masks.push_back(make_kset(n, s).mask);
  }
  return family_from_masks(n, k, std::move(masks));
}

bool Family::contains(Mask m) const {
  return std::binary_search(masks.begin(), masks.end(), m);
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  return p;
}

static void check_permutation(const Permutation& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n)
    throw NotAPermutation("permutation length " + std::to_string(sigma.size()) + " != n=" + std::to_string(n));
  Mask seen = 0;
  for (int v : sigma) {
    if (v < 1 || v > n) throw NotAPermutation("image " + std::to_string(v) + " outside [1,n]");
    Mask b = elem_bit(v);
    if (seen & b) throw NotAPermutation("image " + std::to_string(v) + " repeated");
    seen |= b;
  }
}

Mask apply_permutation_mask(Mask m, const Permutation& sigma) {
  Mask out = 0;
  while (m) {
    int e = std::countr_zero(m) + 1;
    m &= m - 1;
    out |= elem_bit(sigma[e - 1]);
  }
  return out;
}

Family apply_permutation(const Family& f, const Permutation& sigma) {
  check_permutation(sigma, f.n);
  std::vector<Mask> out;
  out.reserve(f.masks.size());
  for (Mask m : f.masks) out.push_back(apply_permutation_mask(m, sigma));
  std::sort(out.begin(), out.end());
  return Family{f.n, f.k, std::move(out)};
}

// ---------------------------------------------------------------------------
// Isomorphism: backtracking over images of support elements, pruned by
// element-degree multisets, the pairwise intersection-size profile, and a
// per-set compatibility count maintained on the fly.

namespace {

std::vector<int> element_degrees(const Family& f) {
  std::vector<int> deg(f.n, 0);
  for (Mask m : f.masks) {
    Mask w = m;
    while (w) {
      deg[std::countr_zero(w)]++;
      w &= w - 1;
    }
  }
  return deg;
}

std::vector<int> pair_profile(const Family& f) {
  std::vector<int> prof;
  for (std::size_t i = 0; i < f.masks.size(); ++i)
    for (std::size_t j = i + 1; j < f.masks.size(); ++j)
      prof.push_back(mask_size(f.masks[i] & f.masks[j]));
  std::sort(prof.begin(), prof.end());
  return prof;
}

struct IsoSearch {
  const Family& f;
  const Family& g;
  std::vector<int> deg_f, deg_g;
  std::vector<int> order;    // f-support elements in assignment order (0-based)
  std::vector<int> image;    // image[e] = 0-based image of element e, or -1
  Mask assigned_g = 0;
  std::vector<Mask> mapped;  // partial image mask per f-set
  std::uint64_t nodes = 0;
  std::uint64_t budget;

  IsoSearch(const Family& f_, const Family& g_, std::uint64_t budget_)
      : f(f_), g(g_), budget(budget_) {}

  bool feasible() const {
    for (std::size_t si = 0; si < f.masks.size(); ++si) {
      bool ok = false;
      for (Mask t : g.masks) {
        if ((t & assigned_g) == mapped[si]) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  bool run(std::size_t depth) {
    if (++nodes > budget) throw BudgetExceeded("isomorphism search exceeded node budget");
    if (depth == order.size()) return feasible();
    int a = order[depth];
    for (int b = 0; b < g.n; ++b) {
      if (assigned_g & (Mask{1} << b)) continue;
      if (deg_g[b] != deg_f[a]) continue;
      image[a] = b;
      assigned_g |= Mask{1} << b;
      for (std::size_t si = 0; si < f.masks.size(); ++si)
        if (f.masks[si] & (Mask{1} << a)) mapped[si] |= Mask{1} << b;
      if (feasible() && run(depth + 1)) return true;
      for (std::size_t si = 0; si < f.masks.size(); ++si)
        if (f.masks[si] & (Mask{1} << a)) mapped[si] &= ~(Mask{1} << b);
      assigned_g &= ~(Mask{1} << b);
      image[a] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<Permutation> is_isomorphic(const Family& f, const Family& g,
                                         std::uint64_t node_budget) {
  if (f.n != g.n || f.k != g.k)
    throw ParameterMismatch("families live on different (n,k)");
  if (f.size() != g.size()) return std::nullopt;
  if (f.masks == g.masks) return identity_permutation(f.n);

  std::vector<int> deg_f = element_degrees(f), deg_g = element_degrees(g);
  {
    auto a = deg_f, b = deg_g;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  if (pair_profile(f) != pair_profile(g)) return std::nullopt;

  IsoSearch s(f, g, node_budget);
  s.deg_f = deg_f;
  s.deg_g = deg_g;
  s.image.assign(f.n, -1);
  s.mapped.assign(f.masks.size(), 0);
  for (int e = 0; e < f.n; ++e)
    if (deg_f[e] > 0) s.order.push_back(e);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int a, int b) { return deg_f[a] > deg_f[b]; });

  if (!s.run(0)) return std::nullopt;

  Permutation sigma(f.n, 0);
  Mask used = s.assigned_g;
  for (int e = 0; e < f.n; ++e)
    if (s.image[e] >= 0) sigma[e] = s.image[e] + 1;
  int next_free = 0;
  for (int e = 0; e < f.n; ++e) {
    if (sigma[e] != 0) continue;
    while (used & (Mask{1} << next_free)) ++next_free;
    sigma[e] = next_free + 1;
    used |= Mask{1} << next_free;
  }
  // The witness must reproduce g exactly; anything else is a search bug.
  if (apply_permutation(f, sigma).masks != g.masks)
    throw TheoremViolation("isomorphism witness failed re-verification");
  return sigma;
}

// ---------------------------------------------------------------------------
// Canonical form. Certificate = lexicographically minimal sorted mask
// sequence over all relabelings. The minimum is attained with the support
// mapped onto an initial segment of positions (moving any used position down
// into an unused gap strictly decreases the sequence), so the search assigns
// support elements to positions u, u-1, ..., 1. Elements with identical
// incidence signatures are interchangeable; one representative per class is
// branched at each level. Partial labelings are pruned by comparing the
// sorted high-bit prefixes against the incumbent.

namespace {

struct CanonSearch {
  int num_sets;
  std::vector<std::vector<int>> class_sets;  // set indices containing each class
  std::vector<int> remaining;                // elements left per class
  std::vector<Mask> h;                       // partial image mask per set
  std::vector<Mask> best;
  bool have_best = false;

  void run(int pos) {
    if (pos == 0) {
      std::vector<Mask> fin = h;
      std::sort(fin.begin(), fin.end());
      if (!have_best || fin < best) {
        best = std::move(fin);
        have_best = true;
      }
      return;
    }
    Mask bit = Mask{1} << (pos - 1);
    struct Cand {
      std::size_t cls;
      std::vector<Mask> sorted_h;
    };
    std::vector<Cand> cands;
    for (std::size_t c = 0; c < class_sets.size(); ++c) {
      if (remaining[c] == 0) continue;
      for (int s : class_sets[c]) h[s] |= bit;
      Cand cand{c, h};
      std::sort(cand.sorted_h.begin(), cand.sorted_h.end());
      cands.push_back(std::move(cand));
      for (int s : class_sets[c]) h[s] &= ~bit;
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.sorted_h != b.sorted_h) return a.sorted_h < b.sorted_h;
      return a.cls < b.cls;
    });
    for (const Cand& cand : cands) {
      // sorted_h is a pointwise lower bound on any completion's sorted mask
      // sequence (unassigned positions only add lower-order bits), so the
      // branch is dead once that bound is not lexicographically below the
      // incumbent.
      if (have_best && !(cand.sorted_h < best)) continue;
      for (int s : class_sets[cand.cls]) h[s] |= bit;
      remaining[cand.cls]--;
      run(pos - 1);
      remaining[cand.cls]++;
      for (int s : class_sets[cand.cls]) h[s] &= ~bit;
    }
  }
};

}  // namespace

std::vector<Mask> canonical_masks(const std::vector<Mask>& masks) {
  if (masks.empty()) return {};
  Mask support = 0;
  for (Mask m : masks) support |= m;
  int u = mask_size(support);
  if (u == 0) return masks;  // all-empty sets

  // Incidence signature per support element, grouped into classes.
  std::map<std::vector<std::uint64_t>, std::vector<int>> classes;
  for (int e : mask_elements(support)) {
    std::vector<std::uint64_t> sig((masks.size() + 63) / 64, 0);
    for (std::size_t si = 0; si < masks.size(); ++si)
      if (masks[si] & elem_bit(e)) sig[si >> 6] |= 1ull << (si & 63);
    classes[sig].push_back(e);
  }

  CanonSearch s;
  s.num_sets = static_cast<int>(masks.size());
  for (auto& [sig, elems] : classes) {
    std::vector<int> sets;
    for (std::size_t si = 0; si < masks.size(); ++si)
      if (sig[si >> 6] & (1ull << (si & 63))) sets.push_back(static_cast<int>(si));
    s.class_sets.push_back(std::move(sets));
    s.remaining.push_back(static_cast<int>(elems.size()));
  }
  s.h.assign(masks.size(), 0);
  s.run(u);
  return s.best;
}

CanonicalForm canonical_form(const Family& f) {
  std::vector<Mask> canon = canonical_masks(f.masks);
  std::string cert;
  auto put_u32 = [&cert](std::uint32_t v) {
    for (int b = 3; b >= 0; --b) cert.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
  };
  put_u32(static_cast<std::uint32_t>(f.n));
  put_u32(static_cast<std::uint32_t>(f.k));
  put_u32(static_cast<std::uint32_t>(canon.size()));
  for (Mask m : canon)
    for (int b = 7; b >= 0; --b) cert.push_back(static_cast<char>((m >> (8 * b)) & 0xff));
  return CanonicalForm{std::move(cert)};
}

}  // namespace unionfam
