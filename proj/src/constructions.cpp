#include "unionfam/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "unionfam/errors.hpp"
#include "unionfam/kneser.hpp"

namespace unionfam {

namespace {

Mask interval_mask(int lo, int hi) {  // {lo, ..., hi}
  Mask m = 0;
  for (int e = lo; e <= hi; ++e) m |= elem_bit(e);
  return m;
}

void check_nk(int n, int k) {
  if (n < 1 || n > 64 || k < 1 || k > n)
    throw BadParameters("need 1 <= k <= n <= 64, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
}

void check_anchor_sets(int n, int k, const std::vector<Mask>& anchors) {
  Mask ground = full_mask(n);
  for (Mask a : anchors) {
    if (a & ~ground) throw ElementOutOfRange("anchor set exceeds [1,n]");
    if (mask_size(a) != k) throw WrongSetSize("anchor set is not a k-set");
  }
  std::vector<Mask> sorted = anchors;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DuplicateSet("anchor sets must be pairwise distinct");
}

Family family_from_set(int n, int k, const std::set<Mask>& s) {
  return Family{n, k, std::vector<Mask>(s.begin(), s.end())};
}

}  // namespace

Family star(int n, int k, int center) {
  check_nk(n, k);
  if (center < 1 || center > n)
    throw ElementOutOfRange("star center " + std::to_string(center) + " outside [1,n]");
  std::vector<Mask> masks;
  for (Mask m : all_k_subsets(n, k))
    if (m & elem_bit(center)) masks.push_back(m);
  return Family{n, k, std::move(masks)};
}

KSet hm_default_anchor(int n, int k) {
  std::vector<int> b(k);
  for (int i = 0; i < k; ++i) b[i] = i + 2;
  return make_kset(n, b);
}

Family hm_family(int n, int k, const KSet& b) {
  check_nk(n, k);
  if (b.n != n || b.k() != k) throw ParameterMismatch("anchor B does not match (n,k)");
  if (b.mask & elem_bit(1)) throw AnchorViolation("HM anchor B must avoid element 1");
  std::set<Mask> out;
  for (Mask m : all_k_subsets(n, k))
    if ((m & elem_bit(1)) && (m & b.mask)) out.insert(m);
  out.insert(b.mask);
  return family_from_set(n, k, out);
}

Family hm_prime(int n, int k) {
  check_nk(n, k);
  if (n < 3) throw BadParameters("HM' needs n >= 3");
  Mask core = interval_mask(1, 3);
  std::vector<Mask> masks;
  for (Mask m : all_k_subsets(n, k))
    if (mask_size(m & core) >= 2) masks.push_back(m);
  return Family{n, k, std::move(masks)};
}

Family j_family(int n, int k, int i, const std::optional<JAnchors>& anchors) {
  check_nk(n, k);
  if (i < 0) throw BadParameters("j_family needs i >= 0");
  std::vector<int> jv, ev;
  if (anchors) {
    jv = anchors->J;
    ev = anchors->E;
  } else {
    for (int e = 1; e <= i + 1; ++e) jv.push_back(e);
    for (int e = i + 2; e <= i + k; ++e) ev.push_back(e);
  }
  if (static_cast<int>(jv.size()) != i + 1) throw AnchorViolation("|J| must be i+1");
  if (static_cast<int>(ev.size()) != k - 1) throw AnchorViolation("|E| must be k-1");
  for (int e : jv)
    if (e < 1 || e > n) throw AnchorViolation("J does not fit in [1,n]");
  for (int e : ev)
    if (e < 1 || e > n) throw AnchorViolation("E does not fit in [1,n]");
  Mask jm = mask_of(jv), em = mask_of(ev);
  if (mask_size(jm) != i + 1 || mask_size(em) != k - 1)
    throw AnchorViolation("anchor elements repeat");
  if (!(jm & elem_bit(1))) throw AnchorViolation("J must contain element 1");
  if (jm & em) throw AnchorViolation("J and E must be disjoint");

  std::vector<Mask> masks;
  for (Mask m : all_k_subsets(n, k)) {
    bool in = ((m & em) == em && (m & jm)) || ((m & jm) == jm) ||
              ((m & elem_bit(1)) && (m & em));
    if (in) masks.push_back(m);
  }
  return Family{n, k, std::move(masks)};
}

Family f_i_family(int n, int k, int i) {
  check_nk(n, k);
  if (i < 1 || i > k)
    throw BadParameters("f_i_family needs 1 <= i <= k, got i=" + std::to_string(i));
  if (k + i > n) throw BadParameters("interval [i+1, k+i] does not fit in [1,n]");
  std::set<Mask> out;
  out.insert(interval_mask(2, k + 1));
  out.insert(interval_mask(i + 1, k + i));
  Mask avoid = interval_mask(2, k + i);
  for (Mask m : all_k_subsets(n, k))
    if ((m & elem_bit(1)) && !(m & avoid)) out.insert(m);
  return family_from_set(n, k, out);
}

Family f_st_family(int n, int k, int s, int t,
                   const std::optional<std::vector<std::vector<int>>>& f_anchors) {
  check_nk(n, k);
  if (s < 1 || t < 1) throw BadParameters("f_st_family needs s >= 1 and t >= 1");
  if (s * k + 1 > n) throw Infeasible("blocks A_1..A_s need sk+1 <= n");
  Mask window = interval_mask(2, s * k + 1);

  std::set<Mask> out;
  for (int i = 1; i <= s; ++i) out.insert(interval_mask((i - 1) * k + 2, i * k + 1));
  for (Mask m : all_k_subsets(n, k))
    if ((m & elem_bit(1)) && (m & window)) out.insert(m);

  std::vector<Mask> fjs;
  if (f_anchors) {
    for (const auto& fj : *f_anchors) fjs.push_back(make_kset(n, fj).mask);
    check_anchor_sets(n, k, fjs);
    for (Mask m : fjs) {
      if (!(m & elem_bit(1))) throw AnchorViolation("each F_j must contain 1");
      if (m & window) throw AnchorViolation("each F_j must avoid [2, sk+1]");
    }
    if (static_cast<int>(fjs.size()) != t - 1)
      throw AnchorViolation("exactly t-1 anchors F_j expected");
  } else {
    for (Mask m : all_k_subsets(n, k)) {
      if (static_cast<int>(fjs.size()) == t - 1) break;
      if ((m & elem_bit(1)) && !(m & window)) fjs.push_back(m);
    }
    if (static_cast<int>(fjs.size()) < t - 1)
      throw Infeasible("not enough room for t-1 distinct F_j outside [2, sk+1]");
  }
  for (Mask m : fjs) out.insert(m);
  return family_from_set(n, k, out);
}

Mask t_set_mask(const std::vector<Mask>& anchors, int s) {
  int m = static_cast<int>(anchors.size());
  if (s < 1 || m < s) throw BadParameters("t_set needs at least s anchor sets");
  {
    std::vector<Mask> sorted = anchors;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DuplicateSet("anchor sets must be pairwise distinct");
  }
  int beta = m - s;
  Mask support = 0;
  for (Mask a : anchors) support |= a;
  Mask out = 0;
  for (int e : mask_elements(support)) {
    int cov = 0;
    for (Mask a : anchors)
      if (a & elem_bit(e)) ++cov;
    if (cov >= beta + 1) out |= elem_bit(e);
  }
  return out;
}

std::vector<int> t_set(const std::vector<Mask>& anchors, int s) {
  return mask_elements(t_set_mask(anchors, s));
}

namespace {

// Shared core of the two star_restricted variants.
Family star_restricted_impl(int n, int k, const std::vector<Mask>& anchors, int s, int r) {
  check_nk(n, k);
  if (s < 1) throw BadParameters("need s >= 1");
  if (r < 1 || r > n) throw BadParameters("need 1 <= r <= n");
  check_anchor_sets(n, k, anchors);
  Mask forbidden = interval_mask(1, r);  // anchors must avoid [1, r]
  for (Mask a : anchors)
    if (a & forbidden) throw AnchorViolation("anchor sets must avoid [1, r]");
  Mask head = r > 1 ? interval_mask(1, r - 1) : 0;
  std::vector<Mask> masks;
  for (Mask m : all_k_subsets(n, k)) {
    if (!(m & elem_bit(r)) || (m & head)) continue;
    int disjoint = 0;
    for (Mask a : anchors)
      if (!(m & a)) ++disjoint;
    if (disjoint <= s - 1) masks.push_back(m);
  }
  return Family{n, k, std::move(masks)};
}

}  // namespace

Family star_restricted(int n, int k, const std::vector<Mask>& anchors, int s) {
  return star_restricted_impl(n, k, anchors, s, 1);
}

Family star_restricted_multipartite(int n, int k, const std::vector<Mask>& anchors,
                                    int s, int r) {
  return star_restricted_impl(n, k, anchors, s, r);
}

long long beta_hat(int k, int s, long long beta) {
  if (k < 1 || s < 1 || beta < 0) throw BadParameters("beta_hat needs k,s >= 1 and beta >= 0");
  auto floor_of = [&](long long b) {
    return ((s + b) * k) / (b + 1);
  };
  long long base = floor_of(beta);
  if (base == k) return beta;
  long long b = beta;
  while (floor_of(b + 1) == base) ++b;
  return b;
}

namespace {

struct JDefaults {
  Mask jm = 0, em = 0;
  std::vector<int> xs;
  std::vector<Mask> anchor_sets;  // A_j = E u {x_j}
};

// Shared anchor setup for the two block-family variants (plain uses r = 1).
JDefaults resolve_j_anchors(int n, int k, int i, int r,
                            const std::optional<JAnchors>& anchors) {
  JDefaults d;
  std::vector<int> jv, ev;
  if (anchors) {
    jv = anchors->J;
    ev = anchors->E;
  } else {
    for (int e = 1; e <= r + i; ++e) jv.push_back(e);
    for (int e = r + i + 1; e <= r + i + k - 1; ++e) ev.push_back(e);
  }
  if (static_cast<int>(jv.size()) != r + i) throw AnchorViolation("|J| must be r+i");
  if (static_cast<int>(ev.size()) != k - 1) throw AnchorViolation("|E| must be k-1");
  for (int e : jv)
    if (e < 1 || e > n) throw AnchorViolation("J does not fit in [1,n]");
  for (int e : ev)
    if (e < 1 || e > n) throw AnchorViolation("E does not fit in [1,n]");
  d.jm = mask_of(jv);
  d.em = mask_of(ev);
  if (mask_size(d.jm) != r + i || mask_size(d.em) != k - 1)
    throw AnchorViolation("anchor elements repeat");
  Mask head = interval_mask(1, r);
  if ((d.jm & head) != head) throw AnchorViolation("J must contain [1, r]");
  if (d.jm & d.em) throw AnchorViolation("J and E must be disjoint");
  if (d.em & head) throw AnchorViolation("E must avoid [1, r]");
  d.xs = mask_elements(d.jm & ~head);
  for (int x : d.xs) d.anchor_sets.push_back(d.em | elem_bit(x));
  return d;
}

}  // namespace

Family j_1t_family(int n, int k, int i, int t, const std::optional<JAnchors>& anchors) {
  return j_1t_r_family(n, k, i, t, 1, JFamilyMode::completed, anchors);
}

Family j_1t_r_family(int n, int k, int i, int t, int r, JFamilyMode mode,
                     const std::optional<JAnchors>& anchors) {
  check_nk(n, k);
  if (i < 0 || i > k - 1) throw BadParameters("need 0 <= i <= k-1");
  if (t < 1) throw BadParameters("need t >= 1");
  if (r < 1 || r > n) throw BadParameters("need 1 <= r <= n");
  if (r + i + k - 1 > n) throw Infeasible("anchors J, E do not fit in [1,n]");

  JDefaults d = resolve_j_anchors(n, k, i, r, anchors);
  Mask head = interval_mask(1, r);

  std::set<Mask> out;
  for (Mask m : star_restricted_multipartite(n, k, d.anchor_sets, 1, r).masks) out.insert(m);

  // Block j: t-1 sets containing exactly J minus {1..r-1, x_j}, avoiding E.
  Mask free_pool = full_mask(n) & ~(d.jm | d.em);
  for (int j = 0; j < i; ++j) {
    Mask fixed = (d.jm & ~head & ~elem_bit(d.xs[j])) | elem_bit(r);
    int need = k - mask_size(fixed);
    std::vector<Mask> block;
    for (Mask tail : k_subsets_of(free_pool, need)) {
      if (static_cast<int>(block.size()) == t - 1) break;
      block.push_back(fixed | tail);
    }
    if (static_cast<int>(block.size()) < t - 1)
      throw Infeasible("not enough room to fill block " + std::to_string(j + 1) +
                       " with t-1 sets");
    for (Mask m : block) out.insert(m);
  }

  if (mode == JFamilyMode::completed) {
    for (Mask a : d.anchor_sets) out.insert(a);
    for (int q = 1; q < r; ++q)
      for (Mask m : star(n, k, q).masks) out.insert(m);
  }
  return family_from_set(n, k, out);
}

// ---------------------------------------------------------------------------
// Extremal anchor search. Condition (2) pins |T| to the floor value; an
// incidence count shows all anchor elements outside T number at most
// (s + bhat)k mod (bhat + 1) <= bhat, so anchors live in the window
// T u X with T = [2, floor+1] and |X| <= slack, up to a relabeling fixing 1.

std::optional<Family> hmnew3_extremal(int n, int k, int s, int t, long long beta,
                                      std::uint64_t node_budget) {
  check_nk(n, k);
  if (k < 3) throw BadParameters("extremal search needs k >= 3");
  if (s < 1 || t < s) throw BadParameters("extremal search needs t >= s >= 1");
  if (beta < 0) throw BadParameters("extremal search needs beta >= 0");

  long long bhat = beta_hat(k, s, beta);
  int m = static_cast<int>(s + bhat);
  long long floor_v = ((s + beta) * static_cast<long long>(k)) / (beta + 1);
  long long slack = (s + bhat) * static_cast<long long>(k) - floor_v * (bhat + 1);

  int window_hi = static_cast<int>(std::min<long long>(n, 1 + floor_v + slack));
  if (floor_v + 1 > n) return std::nullopt;  // |T| = floor cannot fit in [2, n]
  Mask window = interval_mask(2, window_hi);
  Mask t_target = interval_mask(2, static_cast<int>(floor_v) + 1);

  std::vector<Mask> pool = k_subsets_of(window, k);
  if (static_cast<int>(pool.size()) < m) return std::nullopt;

  std::uint64_t nodes = 0;
  std::set<std::vector<Mask>> seen;  // canonical classes already tried

  // F_j candidates: members of the star at 1 disjoint from >= s anchors.
  auto f_candidates = [&](const std::vector<Mask>& anchors) {
    std::vector<Mask> out;
    for (Mask f : all_k_subsets(n, k)) {
      if (!(f & elem_bit(1))) continue;
      int disjoint = 0;
      for (Mask a : anchors)
        if (!(f & a)) ++disjoint;
      if (disjoint >= s) out.push_back(f);
    }
    return out;
  };

  // Choose t-1 F's lexicographically such that anchors u F's stays
  // (s,t)-union intersecting.
  auto pick_fs = [&](const std::vector<Mask>& anchors) -> std::optional<std::vector<Mask>> {
    std::vector<Mask> cands = f_candidates(anchors);
    if (static_cast<int>(cands.size()) < t - 1) return std::nullopt;
    std::vector<int> idx(t - 1);
    for (int j = 0; j < t - 1; ++j) idx[j] = j;
    int c = static_cast<int>(cands.size());
    while (true) {
      if (++nodes > node_budget) throw BudgetExceeded("extremal anchor search budget exhausted");
      std::vector<Mask> small = anchors;
      for (int j : idx) small.push_back(cands[j]);
      Family probe = family_from_masks(n, k, small);
      if (is_union_intersecting(probe, s, t).holds) {
        std::vector<Mask> fs;
        for (int j : idx) fs.push_back(cands[j]);
        return fs;
      }
      int j = t - 2;
      while (j >= 0 && idx[j] == c - (t - 1) + j) --j;
      if (j < 0) return std::nullopt;
      ++idx[j];
      for (int l = j + 1; l < t - 1; ++l) idx[l] = idx[l - 1] + 1;
    }
  };

  // Enumerate m-subsets of the pool in lexicographic order.
  std::vector<int> idx(m);
  for (int j = 0; j < m; ++j) idx[j] = j;
  int p = static_cast<int>(pool.size());
  while (true) {
    if (++nodes > node_budget) throw BudgetExceeded("extremal anchor search budget exhausted");
    std::vector<Mask> anchors;
    for (int j : idx) anchors.push_back(pool[j]);

    Mask tset = t_set_mask(anchors, s);
    if (tset == t_target) {
      std::vector<Mask> shifted;
      for (Mask a : anchors) shifted.push_back(a >> 1);
      std::vector<Mask> key = canonical_masks(shifted);
      if (seen.insert(key).second) {
        if (auto fs = pick_fs(anchors)) {
          std::set<Mask> out;
          for (Mask a : star_restricted(n, k, anchors, s).masks) out.insert(a);
          for (Mask a : anchors) out.insert(a);
          for (Mask f : *fs) out.insert(f);
          Family fam = family_from_set(n, k, out);
          // The anchor conditions imply this only once n is large enough, so
          // the full family is checked before it is returned.
          if (is_union_intersecting(fam, s, t).holds) return fam;
        }
      }
    }

    int j = m - 1;
    while (j >= 0 && idx[j] == p - m + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int l = j + 1; l < m; ++l) idx[l] = idx[l - 1] + 1;
  }
  return std::nullopt;
}

Family ranked_L_family(int n, int k, int s, int t, const std::vector<Mask>& anchors) {
  check_nk(n, k);
  if (s < 1 || t < 1) throw BadParameters("need s >= 1 and t >= 1");
  if (static_cast<int>(anchors.size()) < s)
    throw BadParameters("need at least s anchor sets");
  check_anchor_sets(n, k, anchors);
  for (Mask a : anchors)
    if (a & elem_bit(1)) throw AnchorViolation("anchor sets must avoid element 1");

  Family base = star_restricted(n, k, anchors, s);
  std::set<Mask> in_base(base.masks.begin(), base.masks.end());
  std::vector<Mask> fs;
  for (Mask f : all_k_subsets(n, k)) {
    if (static_cast<int>(fs.size()) == t - 1) break;
    if ((f & elem_bit(1)) && !in_base.count(f)) fs.push_back(f);
  }
  if (static_cast<int>(fs.size()) < t - 1)
    throw Infeasible("not enough star members outside the restricted star for t-1 F_j");

  std::set<Mask> out(base.masks.begin(), base.masks.end());
  for (Mask a : anchors) out.insert(a);
  for (Mask f : fs) out.insert(f);
  return family_from_set(n, k, out);
}

}  // namespace unionfam
