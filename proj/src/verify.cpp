#include "unionfam/verify.hpp"

#include <array>
#include <mutex>
#include <sstream>

#include "unionfam/constructions.hpp"
#include "unionfam/family_io.hpp"
#include "unionfam/kneser.hpp"
#include "unionfam/parallel.hpp"
#include "unionfam/random_family.hpp"
#include "unionfam/structure.hpp"

namespace unionfam {

namespace {

std::string fmt_params(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::string out;
  for (const auto& [name, v] : kv) {
    if (!out.empty()) out += " ";
    out += std::string(name) + "=" + std::to_string(v);
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t item_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  return splitmix64(base ^ splitmix64(a * 0x100000001b3ull + b));
}

// Counterexamples are rendered as family JSONL records so a failing report
// carries machine-readable witnesses.
std::string anchors_to_jsonl(int n, int k, std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end());
  return family_to_jsonl(Family{n, k, std::move(masks)});
}

}  // namespace

// ---------------------------------------------------------------------------

Report verify_constructions(const ConstructionsConfig& cfg) {
  Report rep;
  for (int n : cfg.ns) {
    for (int k : cfg.ks) {
      if (2 * k > n) continue;
      std::string nk = fmt_params({{"n", n}, {"k", k}});
      std::uint64_t hm_formula =
          binom_u64(n - 1, k - 1) - binom_u64(n - k - 1, k - 1) + 1;
      Family hm = hm_family(n, k, hm_default_anchor(n, k));
      rep.add(make_eq_record("constructions/hm-size", "def:HM", nk,
                             std::to_string(hm_formula), std::to_string(hm.size())));

      Family hmp = hm_prime(n, k);
      if (k == 3) {
        rep.add(make_eq_record("constructions/hm-vs-hmprime", "def:HM'", nk,
                               std::to_string(hm.size()), std::to_string(hmp.size())));
      } else if (k >= 4 && n > 2 * k) {
        rep.add(make_bool_record("constructions/hm-vs-hmprime", "def:HM'", nk,
                                 hm.size() > hmp.size(),
                                 "|HM|=" + std::to_string(hm.size()) +
                                     " |HM'|=" + std::to_string(hmp.size())));
      } else if (k >= 4) {
        CheckRecord skip;
        skip.check = "constructions/hm-vs-hmprime";
        skip.anchor = "def:HM'";
        skip.params = nk;
        skip.expected = "strict inequality";
        skip.actual = "";
        skip.verdict = "skip:strictness stated for n > 2k only";
        rep.add(std::move(skip));
      }

      rep.add(make_bool_record("constructions/j0-is-star", "def:1.4", nk,
                               j_family(n, k, 0) == star(n, k, 1)));

      for (int i = 0; i <= k - 1; ++i) {
        if (i + k > n) continue;
        std::string nki = nk + " i=" + std::to_string(i);
        std::uint64_t j_formula = binom_u64(n - 1, k - 1) - binom_u64(n - k, k - 1) +
                                  binom_u64(n - k - i, k - i - 1) + i;
        Family ji = j_family(n, k, i);
        rep.add(make_eq_record("constructions/j-size", "def:1.4", nki,
                               std::to_string(j_formula), std::to_string(ji.size())));
        for (int t : cfg.ts) {
          // Each of the i blocks needs t-1 distinct admissible sets.
          if (i > 0 && binom_u64(n - k - i, k - i) < static_cast<std::uint64_t>(t - 1)) {
            CheckRecord skip;
            skip.check = "constructions/j1t-size";
            skip.anchor = "def:1.12";
            skip.params = nki + " t=" + std::to_string(t);
            skip.expected = std::to_string(ji.size() + i * (t - 1));
            skip.actual = "";
            skip.verdict = "skip:blocks do not fit in [1,n]";
            rep.add(std::move(skip));
            continue;
          }
          Family jt = j_1t_family(n, k, i, t);
          rep.add(make_eq_record("constructions/j1t-size", "def:1.12",
                                 nki + " t=" + std::to_string(t),
                                 std::to_string(ji.size() + i * (t - 1)),
                                 std::to_string(jt.size())));
        }
      }

      // J_1 is the Hilton-Milner family: with default anchors the two
      // generators emit the same set system; at k = 3 a relabeled copy
      // exercises the full isomorphism search.
      bool iso = is_isomorphic(j_family(n, k, 1), hm).has_value();
      rep.add(make_bool_record("constructions/j1-iso-hm", "def:1.4", nk, iso));
      if (k == 3) {
        Permutation rev(n);
        for (int e = 1; e <= n; ++e) rev[e - 1] = n + 1 - e;
        Family shuffled = apply_permutation(hm, rev);
        auto w = is_isomorphic(j_family(n, k, 1), shuffled);
        bool ok = w && apply_permutation(j_family(n, k, 1), *w) == shuffled;
        rep.add(make_bool_record("constructions/j1-iso-hm-relabeled", "def:1.4", nk, ok));
      }

      // t = 1 block families coincide with the plain construction.
      rep.add(make_bool_record("constructions/j1t-t1-degenerate", "def:1.12", nk,
                               j_1t_family(n, k, 1, 1) == j_family(n, k, 1)));
    }
  }
  rep.sort_records();
  return rep;
}

// ---------------------------------------------------------------------------
// Restricted-star bound sweep.

Report verify_lemma22(const Lemma22Config& cfg) {
  const int n = cfg.n, k = cfg.k, s = cfg.s, beta = cfg.beta;
  if (s < 1 || beta < 0 || k < 2 || n <= k)
    throw BadParameters("lemma22 sweep needs s >= 1, beta >= 0, 2 <= k < n");
  const int m = s + beta;
  const long long floor_v = static_cast<long long>(s + beta) * k / (beta + 1);

  std::vector<Mask> pool = k_subsets_of(full_mask(n) & ~elem_bit(1), k);
  std::vector<Mask> star1;
  for (Mask a : all_k_subsets(n, k))
    if (a & elem_bit(1)) star1.push_back(a);

  const std::uint64_t rhs_b =
      binom_u64(n - 1, k - 1) - binom_u64(n - floor_v - 1, k - 1);
  const std::uint64_t rhs_c = binom_u64(n - 1, k - 1) - binom_u64(n - k, k - 1) +
                              binom_u64(n - k - beta - 1, k - beta - 2);

  struct Shard {
    std::uint64_t tuples = 0, classes = 0, eq_b = 0, eq_c = 0;
    std::vector<std::string> violations;
  };
  const int p = static_cast<int>(pool.size());
  std::vector<Shard> shards(static_cast<std::size_t>(p));

  // Combinations are partitioned by their first pool index; a tuple is
  // processed only if it is its own canonical representative under
  // relabelings fixing element 1, which both deduplicates isomorphic anchor
  // tuples and keeps the sweep schedule-independent.
  parallel_for(static_cast<std::size_t>(p), cfg.threads, [&](std::size_t first) {
    Shard& sh = shards[first];
    std::vector<int> idx(m);
    idx[0] = static_cast<int>(first);
    if (m > p) return;
    for (int j = 1; j < m; ++j) idx[j] = static_cast<int>(first) + j;
    if (idx.back() >= p) return;
    while (true) {
      ++sh.tuples;
      std::vector<Mask> anchors(m);
      Mask support = 0;
      for (int j = 0; j < m; ++j) {
        anchors[j] = pool[idx[j]];
        support |= anchors[j];
      }

      // A canonical representative has its support relabeled onto an initial
      // segment; that cheap test rejects almost every duplicate before the
      // full canonical-form check.
      std::vector<Mask> shifted(m);
      for (int j = 0; j < m; ++j) shifted[j] = anchors[j] >> 1;
      if ((support >> 1) == full_mask(mask_size(support)) &&
          canonical_masks(shifted) == shifted) {
        ++sh.classes;
        int tsz = mask_size(t_set_mask(anchors, s));
        std::uint64_t st_size = 0;
        for (Mask a : star1) {
          int disjoint = 0;
          for (Mask x : anchors)
            if (!(a & x)) ++disjoint;
          if (disjoint <= s - 1) ++st_size;
        }
        std::uint64_t rhs_a =
            binom_u64(n - 1, k - 1) - binom_u64(n - tsz - 1, k - 1);

        if (!(rhs_a <= st_size))
          sh.violations.push_back("lem:2.2a " + anchors_to_jsonl(n, k, anchors));
        bool eq_b = st_size == rhs_b;
        if (st_size > rhs_b || (eq_b != (tsz == floor_v)))
          sh.violations.push_back("lem:2.2b " + anchors_to_jsonl(n, k, anchors));
        if (eq_b) ++sh.eq_b;
        if (s == 1) {
          bool eq_c = st_size == rhs_c;
          bool ok_c = st_size <= rhs_c && (beta < 1 || (eq_c == (tsz == k - 1)));
          if (!ok_c) sh.violations.push_back("lem:2.2c " + anchors_to_jsonl(n, k, anchors));
          if (eq_c) ++sh.eq_c;
        }
      }

      int j = m - 1;
      while (j >= 1 && idx[j] == p - m + j) --j;
      if (j < 1) break;
      ++idx[j];
      for (int l = j + 1; l < m; ++l) idx[l] = idx[l - 1] + 1;
    }
  });

  Shard total;
  for (const Shard& sh : shards) {
    total.tuples += sh.tuples;
    total.classes += sh.classes;
    total.eq_b += sh.eq_b;
    total.eq_c += sh.eq_c;
    for (const auto& v : sh.violations) total.violations.push_back(v);
  }
  std::sort(total.violations.begin(), total.violations.end());

  Report rep;
  std::string params = fmt_params({{"n", n}, {"k", k}, {"s", s}, {"beta", beta}});
  rep.add(make_bool_record("lemma22/sweep", "lem:2.2", params, total.violations.empty(),
                           total.violations.empty()
                               ? ""
                               : std::to_string(total.violations.size()) + " violations"));
  {
    CheckRecord stats;
    stats.check = "lemma22/stats";
    stats.anchor = "lem:2.2";
    stats.params = params;
    stats.expected = "classes>0";
    stats.actual = "tuples=" + std::to_string(total.tuples) +
                   " classes=" + std::to_string(total.classes) +
                   " eq_b=" + std::to_string(total.eq_b) +
                   (s == 1 ? " eq_c=" + std::to_string(total.eq_c) : "");
    stats.verdict = total.classes > 0 ? "pass" : "fail";
    rep.add(std::move(stats));
  }
  for (std::size_t i = 0; i < total.violations.size() && i < 50; ++i) {
    CheckRecord r;
    r.check = "lemma22/violation";
    r.anchor = "lem:2.2";
    r.params = params + " #" + std::to_string(i);
    r.expected = "none";
    r.actual = total.violations[i];
    r.verdict = "fail";
    rep.add(std::move(r));
  }
  rep.sort_records();
  return rep;
}

// ---------------------------------------------------------------------------

Report verify_peel(const PeelConfig& cfg) {
  Report rep;
  const std::uint64_t round_cap = binom_u64(2 * cfg.k - 1, cfg.k - 1);

  for (int t : cfg.ts) {
    struct Item {
      bool ok = true;
      std::string detail;
    };
    std::vector<Item> items(static_cast<std::size_t>(cfg.count));
    parallel_for(items.size(), cfg.threads, [&](std::size_t i) {
      std::uint64_t seed = item_seed(cfg.seed, static_cast<std::uint64_t>(t), i);
      std::mt19937_64 rng(seed);
      std::size_t size =
          cfg.min_size + bounded_draw(rng, cfg.max_size - cfg.min_size + 1);
      ConstraintSpec repair;
      repair.forbidden_pattern = std::vector<int>{1, t};
      Family f = random_family(cfg.n, cfg.k, size, seed, repair);

      Item& it = items[i];
      try {
        PeelingTrace tr = peel(f, t);
        if (!is_intersecting(tr.core)) {
          it.ok = false;
          it.detail = "core not intersecting";
        } else if (tr.m > round_cap) {
          it.ok = false;
          it.detail = "m exceeds C(2k-1,k-1)";
        } else if (tr.removed.size() > tr.m * static_cast<std::size_t>(t - 1)) {
          it.ok = false;
          it.detail = "removed exceeds m(t-1)";
        } else if (tr.core.size() + tr.removed.size() != f.size()) {
          it.ok = false;
          it.detail = "core + removed != family";
        } else {
          int l = ell(f, 2).value;
          if (static_cast<std::size_t>(l) > tr.removed.size()) {
            it.ok = false;
            it.detail = "ell exceeds removed count";
          }
        }
      } catch (const Error& e) {
        it.ok = false;
        it.detail = e.what();
      }
    });

    std::size_t bad = 0;
    std::string first_detail;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (!items[i].ok) {
        if (bad == 0) first_detail = "item " + std::to_string(i) + ": " + items[i].detail;
        ++bad;
      }
    rep.add(make_bool_record(
        "peel/random-suite", "thm:1.14",
        fmt_params({{"n", cfg.n}, {"k", cfg.k}, {"t", t}, {"count", cfg.count},
                    {"seed", static_cast<long long>(cfg.seed)}}),
        bad == 0, first_detail));
  }
  rep.sort_records();
  return rep;
}

// ---------------------------------------------------------------------------

Report verify_pairs_bound(const PairsBoundConfig& cfg) {
  const std::uint64_t c2k = binom_u64(2 * cfg.k, cfg.k);
  struct Item {
    bool ok = true;
    std::string detail;
  };
  std::vector<Item> items(static_cast<std::size_t>(cfg.count));
  parallel_for(items.size(), cfg.threads, [&](std::size_t i) {
    std::uint64_t seed = item_seed(cfg.seed, 0x70616972, i);
    std::mt19937_64 rng(seed);
    std::size_t size = cfg.min_size + bounded_draw(rng, cfg.max_size - cfg.min_size + 1);
    Family f = random_family(cfg.n, cfg.k, size, seed);
    std::uint64_t pairs = disjoint_pair_count(f);
    std::uint64_t l = static_cast<std::uint64_t>(ell(f, 2).value);
    if (2 * c2k * pairs < l * l) {
      items[i].ok = false;
      items[i].detail = "pairs=" + std::to_string(pairs) + " ell=" + std::to_string(l);
    }
  });
  std::size_t bad = 0;
  std::string first;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (!items[i].ok) {
      if (bad == 0) first = "item " + std::to_string(i) + ": " + items[i].detail;
      ++bad;
    }
  Report rep;
  rep.add(make_bool_record(
      "pairs-bound/random-suite", "lem:2.5",
      fmt_params({{"n", cfg.n}, {"k", cfg.k}, {"count", cfg.count},
                  {"seed", static_cast<long long>(cfg.seed)}}),
      bad == 0, first));
  rep.sort_records();
  return rep;
}

// ---------------------------------------------------------------------------

Report verify_setpairs(const SetPairsConfig& cfg) {
  Report rep;
  for (const auto& [k, l, ground] : cfg.instances) {
    int value = max_set_pair_system(k, l, ground);
    std::uint64_t cap = binom_u64(k + l, k);
    std::string params = fmt_params({{"k", k}, {"l", l}, {"ground", ground}});
    rep.add(make_bool_record("setpairs/bound", "thm:2.6", params,
                             static_cast<std::uint64_t>(value) <= cap,
                             "max=" + std::to_string(value) + " cap=" + std::to_string(cap)));
    CheckRecord val;
    val.check = "setpairs/value";
    val.anchor = "thm:2.6";
    val.params = params;
    val.expected = "recorded";
    val.actual = std::to_string(value);
    val.verdict = "pass";
    rep.add(std::move(val));
  }
  rep.sort_records();
  return rep;
}

// ---------------------------------------------------------------------------

std::string VerifyAllConfig::describe() const {
  std::ostringstream os;
  os << "verify all";
  os << " seed=" << seed;
  os << " constructions[n=" << constructions.ns.front() << ".." << constructions.ns.back()
     << " k=" << constructions.ks.front() << ".." << constructions.ks.back() << "]";
  os << " lemma22[n=" << lemma22.n << " k=" << lemma22.k << " s=" << lemma22.s
     << " beta=" << lemma22.beta << "]";
  os << " peel[n=" << peel.n << " k=" << peel.k << " count=" << peel.count << "]";
  os << " pairs[n=" << pairs.n << " k=" << pairs.k << " count=" << pairs.count << "]";
  return os.str();
}

Report run_verify_all(const VerifyAllConfig& cfg) {
  VerifyAllConfig c = cfg;
  c.peel.seed = cfg.seed;
  c.pairs.seed = cfg.seed;
  c.peel.threads = cfg.threads;
  c.pairs.threads = cfg.threads;
  c.lemma22.threads = cfg.threads;

  Report rep;
  rep.config = c.describe();
  rep.append(verify_constructions(c.constructions));
  rep.append(verify_lemma22(c.lemma22));
  rep.append(verify_peel(c.peel));
  rep.append(verify_pairs_bound(c.pairs));
  rep.append(verify_setpairs(c.setpairs));
  rep.append(consistency_matrix(c.consistency));
  rep.sort_records();
  return rep;
}

}  // namespace unionfam
