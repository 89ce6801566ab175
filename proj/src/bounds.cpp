#include "unionfam/bounds.hpp"

#include <map>

#include "unionfam/constructions.hpp"
#include "unionfam/errors.hpp"

namespace unionfam {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long long j = 1; j <= k; ++j) {
    r *= (n - k + j);
    r /= j;
  }
  return r;
}

namespace {

const std::map<std::string, BoundId>& id_table() {
  static const std::map<std::string, BoundId> table = {
      {"ekr", BoundId::ekr},         {"hm", BoundId::hm},
      {"thm-a", BoundId::thm_a},     {"thm-b", BoundId::thm_b},
      {"thm-c-size", BoundId::thm_c_size},
      {"thm-d", BoundId::thm_d},     {"thm-e", BoundId::thm_e},
      {"thm-f", BoundId::thm_f},     {"thm1.9", BoundId::thm_1_9},
      {"cor1.10", BoundId::cor_1_10},
      {"thm1.14", BoundId::thm_1_14},
      {"thm1.17", BoundId::thm_1_17},
      {"thm1.19", BoundId::thm_1_19},
      {"lem2.1", BoundId::lem_2_1},  {"lem2.2b", BoundId::lem_2_2b},
      {"lem2.2c", BoundId::lem_2_2c},
      {"lem2.5", BoundId::lem_2_5},  {"thm2.6", BoundId::thm_2_6},
      {"n-i", BoundId::n_i},         {"j-i-size", BoundId::j_i_size},
      {"hm-size", BoundId::hm_size},
  };
  return table;
}

long long req(const std::optional<long long>& v, const char* name) {
  if (!v) throw BadParameters(std::string("missing parameter ") + name);
  return *v;
}

void expect(bool cond, const std::string& range) {
  if (!cond) throw BadParameters("parameter range violated: " + range);
}

}  // namespace

std::optional<BoundId> parse_bound_id(const std::string& name) {
  auto it = id_table().find(name);
  if (it == id_table().end()) return std::nullopt;
  return it->second;
}

std::string bound_id_name(BoundId id) {
  for (const auto& [name, v] : id_table())
    if (v == id) return name;
  return "?";
}

std::string bound_anchor(BoundId id) {
  switch (id) {
    case BoundId::ekr: return "thm:EKR";
    case BoundId::hm: return "thm:HiltonMilner";
    case BoundId::thm_a: return "thm:A";
    case BoundId::thm_b: return "thm:B";
    case BoundId::thm_c_size: return "thm:C";
    case BoundId::thm_d: return "thm:D";
    case BoundId::thm_e: return "thm:E";
    case BoundId::thm_f: return "thm:F";
    case BoundId::thm_1_9: return "thm:1.9";
    case BoundId::cor_1_10: return "cor:1.10";
    case BoundId::thm_1_14: return "thm:1.14";
    case BoundId::thm_1_17: return "thm:1.17";
    case BoundId::thm_1_19: return "thm:1.19";
    case BoundId::lem_2_1: return "lem:2.1";
    case BoundId::lem_2_2b: return "lem:2.2b";
    case BoundId::lem_2_2c: return "lem:2.2c";
    case BoundId::lem_2_5: return "lem:2.5";
    case BoundId::thm_2_6: return "thm:2.6";
    case BoundId::n_i: return "def:N_i";
    case BoundId::j_i_size: return "def:1.4";
    case BoundId::hm_size: return "def:HM";
  }
  return "?";
}

BoundValue evaluate_bound(const BoundQuery& q) {
  BoundValue out;
  switch (q.id) {
    case BoundId::ekr: {
      long long n = req(q.n, "n"), k = req(q.k, "k");
      expect(k >= 1 && n >= 2 * k, "EKR needs 1 <= k and n >= 2k");
      out.value = binomial(n - 1, k - 1);
      return out;
    }
    case BoundId::hm:
    case BoundId::hm_size: {
      long long n = req(q.n, "n"), k = req(q.k, "k");
      expect(k >= 2 && n > 2 * k, "Hilton-Milner bound needs k >= 2 and n > 2k");
      out.value = binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1;
      return out;
    }
    case BoundId::thm_a: {
      long long n = req(q.n, "n"), k = req(q.k, "k"), s = req(q.s, "s");
      expect(s >= 1, "needs s >= 1");
      expect(std::min<long long>(3, s) <= k && 2 * k <= n, "needs min(3,s) <= k <= n/2");
      BigInt head = binomial(n - 1, k - 1) - binomial(n - k, k - 1);
      BigInt branch1 = head + (n - k);
      BigInt branch2 = head + binomial(n - k - s, k - s - 1) + s;
      bool b1 = 2 < k && k <= s + 2;
      bool b2 = k <= 2 || k >= s + 2;
      if (b1 && b2 && branch1 != branch2)
        throw TheoremViolation("two-case bound branches disagree at k = s+2");
      out.value = b1 ? branch1 : branch2;
      out.alt = b1 ? branch2 : branch1;
      out.note = b1 ? (b2 ? "branches coincide at k=s+2" : "case 2<k<=s+2")
                    : "case k<=2 or k>=s+2";
      return out;
    }
    case BoundId::thm_b: {
      long long n = req(q.n, "n"), k = req(q.k, "k");
      expect(k >= 3 && 2 * k < n, "needs 3 <= k < n/2");
      out.value = binomial(n - 1, k - 1) - binomial(n - k, k - 1) +
                  binomial(n - k - 2, k - 3) + 2;
      return out;
    }
    case BoundId::thm_c_size: {
      long long n = req(q.n, "n"), k = req(q.k, "k");
      long long i = q.i.value_or(3);
      expect(i >= 1 && i <= k, "needs 1 <= i <= k");
      out.value = BigInt(i == 1 ? 1 : 2) + binomial(n - k - i, k - 1);
      return out;
    }
    case BoundId::thm_d: {
      long long n = req(q.n, "n"), k = req(q.k, "k"), s = req(q.s, "s"), t = req(q.t, "t");
      expect(2 <= s && s <= t, "needs 2 <= s <= t");
      out.value = binomial(n - 1, k - 1) - binomial(n - s * k - 1, k - 1) + s + t - 1;
      return out;
    }
    case BoundId::thm_e: {
      long long n = req(q.n, "n"), k = req(q.k, "k");
      long long chi = req(q.chi, "chi"), eta = req(q.eta, "eta");
      expect(k >= 2 && chi >= 1 && eta >= 1, "needs k >= 2, chi >= 1, eta >= 1");
      out.value = binomial(n, k) - binomial(n - chi + 1, k) + eta - 1;
      return out;
    }
    case BoundId::thm_f: {
      long long n = req(q.n, "n"), k = req(q.k, "k");
      expect(q.part_sizes.size() >= 2, "needs part sizes s_1..s_{r+1}");
      long long r = static_cast<long long>(q.part_sizes.size()) - 1;
      for (std::size_t j = 1; j < q.part_sizes.size(); ++j)
        expect(q.part_sizes[j - 1] >= q.part_sizes[j], "needs s_1 >= ... >= s_{r+1}");
      long long sr = q.part_sizes[r - 1], sr1 = q.part_sizes[r];
      expect(k >= 2 && sr1 >= 2, "needs k >= 2 and s_{r+1} >= 2");
      out.value = binomial(n, k) - binomial(n - r, k) -
                  binomial(n - sr1 * k - r, k - 1) + sr + sr1 - 1;
      return out;
    }
    case BoundId::thm_1_9: {
      long long n = req(q.n, "n"), k = req(q.k, "k"), s = req(q.s, "s"), t = req(q.t, "t");
      long long beta = req(q.beta, "beta");
      expect(k >= 3 && 1 <= s && s <= t && beta >= 0, "needs k >= 3, 1 <= s <= t, beta >= 0");
      long long fl = (s + beta) * k / (beta + 1);
      long long bhat = beta_hat(static_cast<int>(k), static_cast<int>(s), beta);
      out.value = binomial(n - 1, k - 1) - binomial(n - fl - 1, k - 1) + s + t + bhat - 1;
      return out;
    }
    case BoundId::cor_1_10: {
      long long n = req(q.n, "n"), k = req(q.k, "k"), t = req(q.t, "t");
      expect(k >= 3 && t >= 1, "needs k >= 3 and t >= 1");
      out.value = binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + t;
      return out;
    }
    case BoundId::thm_1_14: {
      long long n = req(q.n, "n"), k = req(q.k, "k"), t = req(q.t, "t");
      long long gamma = q.gamma ? *q.gamma : req(q.beta, "gamma or beta") + 1;
      expect(k >= 5 && t >= 1 && 1 <= gamma && gamma <= k - 2,
             "needs k >= 5, t >= 1, 1 <= gamma <= k-2");
      out.value = binomial(n - 1, k - 1) - binomial(n - k, k - 1) +
                  binomial(n - k - gamma, k - gamma - 1) + gamma * t;
      return out;
    }
    case BoundId::thm_1_17: {
      long long n = req(q.n, "n"), k = req(q.k, "k"), beta = req(q.beta, "beta");
      expect(q.part_sizes.size() >= 2, "needs part sizes s_1..s_{r+1}");
      long long r = static_cast<long long>(q.part_sizes.size()) - 1;
      for (std::size_t j = 1; j < q.part_sizes.size(); ++j)
        expect(q.part_sizes[j - 1] >= q.part_sizes[j], "needs s_1 >= ... >= s_{r+1}");
      long long sr = q.part_sizes[r - 1], sr1 = q.part_sizes[r];
      expect(k >= 3 && sr1 >= 1 && beta >= 0, "needs k >= 3, s_{r+1} >= 1, beta >= 0");
      long long fl = (sr1 + beta) * k / (beta + 1);
      long long bhat = beta_hat(static_cast<int>(k), static_cast<int>(sr1), beta);
      out.value = binomial(n, k) - binomial(n - r, k) - binomial(n - fl - r, k - 1) +
                  sr + sr1 + bhat - 1;
      return out;
    }
    case BoundId::thm_1_19: {
      long long n = req(q.n, "n"), k = req(q.k, "k");
      long long gamma = q.gamma ? *q.gamma : req(q.beta, "gamma or beta") + 1;
      expect(!q.part_sizes.empty(), "needs part sizes s_1..s_r");
      long long r = static_cast<long long>(q.part_sizes.size());
      for (std::size_t j = 1; j < q.part_sizes.size(); ++j)
        expect(q.part_sizes[j - 1] >= q.part_sizes[j], "needs s_1 >= ... >= s_r");
      expect(k >= 5 && 1 <= gamma && gamma <= k - 2, "needs k >= 5, 1 <= gamma <= k-2");
      // The final free-sets term reads t := s_r.
      long long t = q.part_sizes.back();
      out.value = binomial(n, k) - binomial(n - r, k) - binomial(n - k - r + 1, k - 1) +
                  binomial(n - k - r - gamma + 1, k - gamma - 1) + gamma * t;
      return out;
    }
    case BoundId::lem_2_1: {
      long long n = req(q.n, "n"), k = req(q.k, "k"), s = req(q.s, "s"), t = req(q.t, "t");
      expect(1 <= s && s <= t, "needs 1 <= s <= t");
      long long fl = (s + 1) * k / 2;
      out.value = binomial(n - 1, k - 1) - binomial(n - fl - 1, k - 1) + (s + 1) * t;
      return out;
    }
    case BoundId::lem_2_2b: {
      long long n = req(q.n, "n"), k = req(q.k, "k"), s = req(q.s, "s");
      long long beta = req(q.beta, "beta");
      expect(s >= 1 && beta >= 0, "needs s >= 1 and beta >= 0");
      long long fl = (s + beta) * k / (beta + 1);
      out.value = binomial(n - 1, k - 1) - binomial(n - fl - 1, k - 1);
      return out;
    }
    case BoundId::lem_2_2c: {
      long long n = req(q.n, "n"), k = req(q.k, "k"), beta = req(q.beta, "beta");
      expect(beta >= 0, "needs beta >= 0");
      out.value = binomial(n - 1, k - 1) - binomial(n - k, k - 1) +
                  binomial(n - k - beta - 1, k - beta - 2);
      return out;
    }
    case BoundId::lem_2_5: {
      long long k = req(q.k, "k"), ell = req(q.ell, "ell");
      expect(k >= 1 && ell >= 0, "needs k >= 1 and ell >= 0");
      BigInt denom = 2 * binomial(2 * k, k);
      BigInt num = BigInt(ell) * ell;
      out.value = (num + denom - 1) / denom;  // ceiling
      return out;
    }
    case BoundId::thm_2_6: {
      long long k = req(q.k, "k"), l = req(q.l, "l");
      expect(k >= 1 && l >= 1, "needs k >= 1 and l >= 1");
      out.value = binomial(k + l, k);
      return out;
    }
    case BoundId::n_i: {
      long long n = req(q.n, "n"), k = req(q.k, "k"), i = req(q.i, "i");
      expect(0 <= i && i <= k, "needs 0 <= i <= k");
      out.value = binomial(n - 1, k - 1) - binomial(n - k, k - 1);
      if (i < k) out.value += binomial(n - k - i, k - i - 1);
      return out;
    }
    case BoundId::j_i_size: {
      long long n = req(q.n, "n"), k = req(q.k, "k"), i = req(q.i, "i");
      expect(i >= 0, "needs i >= 0");
      out.value = binomial(n - 1, k - 1) - binomial(n - k, k - 1) +
                  binomial(n - k - i, k - i - 1) + i;
      return out;
    }
  }
  throw BadParameters("unknown bound id");
}

// ---------------------------------------------------------------------------

Report consistency_matrix(const ConsistencyGrid& grid, bool corrupt_hook) {
  Report rep;
  auto num = [](const BigInt& v) { return v.str(); };

  for (int n : grid.ns) {
    for (int k : grid.ks) {
      if (k < 3 || k > n) continue;
      std::string nk = "n=" + std::to_string(n) + " k=" + std::to_string(k);

      for (int i = 0; i <= k - 1; ++i) {
        if (i + k > n) continue;
        BigInt formula = evaluate_bound({.id = BoundId::j_i_size,
                                         .n = n,
                                         .k = k,
                                         .i = i})
                             .value;
        if (corrupt_hook && i == 0) formula += 1;  // harness self-test
        BigInt enumerated = j_family(n, k, i).size();
        rep.add(make_eq_record("consistency/j-size", "def:1.4",
                               nk + " i=" + std::to_string(i), num(formula),
                               num(enumerated)));

        for (int t : grid.ts) {
          // Blocks need t-1 distinct admissible sets each.
          if (i > 0 && binomial(n - k - i, k - i) < t - 1) continue;
          Family jt = j_1t_family(n, k, i, t);
          BigInt expect_sz = BigInt(j_family(n, k, i).size()) + BigInt(i) * (t - 1);
          rep.add(make_eq_record("consistency/j1t-size", "def:1.12",
                                 nk + " i=" + std::to_string(i) + " t=" + std::to_string(t),
                                 num(expect_sz), num(BigInt(jt.size()))));
        }
      }

      for (int t : grid.ts) {
        BigInt lhs = evaluate_bound({.id = BoundId::thm_1_9, .n = n, .k = k, .s = 1,
                                     .t = t, .beta = 0})
                         .value;
        BigInt rhs = evaluate_bound({.id = BoundId::cor_1_10, .n = n, .k = k, .t = t}).value;
        rep.add(make_eq_record("consistency/degeneration", "thm:1.9",
                               nk + " s=1 beta=0 t=" + std::to_string(t), num(rhs),
                               num(lhs)));
      }

      if (k >= 5) {
        for (int gamma = 1; gamma <= k - 2; ++gamma) {
          BigInt lhs = evaluate_bound({.id = BoundId::thm_1_14, .n = n, .k = k, .t = 1,
                                       .gamma = gamma})
                           .value;
          BigInt rhs = evaluate_bound({.id = BoundId::n_i, .n = n, .k = k, .i = gamma}).value +
                       gamma;
          rep.add(make_eq_record("consistency/gamma-degeneration", "thm:1.14",
                                 nk + " gamma=" + std::to_string(gamma) + " t=1", num(rhs),
                                 num(lhs)));
        }
      }

      // The floor-argument bound dominates the raw cover-size bound for
      // every admissible cover size.
      for (auto [s, beta] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}, {2, 1}}) {
        long long fl = (s + beta) * static_cast<long long>(k) / (beta + 1);
        BigInt rhs_b = evaluate_bound({.id = BoundId::lem_2_2b, .n = n, .k = k, .s = s,
                                       .beta = beta})
                           .value;
        bool ok = true;
        for (long long tsz = 1; tsz <= fl; ++tsz) {
          BigInt rhs_a = binomial(n - 1, k - 1) - binomial(n - tsz - 1, k - 1);
          if (rhs_a > rhs_b) {
            ok = false;
            break;
          }
        }
        rep.add(make_bool_record("consistency/lem22-dominance", "lem:2.2",
                                 nk + " s=" + std::to_string(s) + " beta=" + std::to_string(beta),
                                 ok));
      }

      // Telescoping identity for the N_i ladder.
      for (int i = 1; i <= k - 1; ++i) {
        BigInt lhs = evaluate_bound({.id = BoundId::n_i, .n = n, .k = k, .i = i - 1}).value -
                     evaluate_bound({.id = BoundId::n_i, .n = n, .k = k, .i = i}).value;
        BigInt rhs = binomial(n - k - i, k - i);
        rep.add(make_eq_record("consistency/n-telescope", "def:N_i",
                               nk + " i=" + std::to_string(i), num(rhs), num(lhs)));
      }
    }
  }
  rep.sort_records();
  return rep;
}

}  // namespace unionfam
