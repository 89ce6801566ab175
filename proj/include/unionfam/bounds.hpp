#ifndef UNIONFAM_BOUNDS_HPP
#define UNIONFAM_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unionfam/report.hpp"

namespace unionfam {

using BigInt = boost::multiprecision::cpp_int;

// Exact binomial coefficient; out-of-range arguments (k < 0 or k > n) give 0,
// the convention every size formula relies on.
BigInt binomial(long long n, long long k);

enum class BoundId {
  ekr,
  hm,
  thm_a,
  thm_b,
  thm_c_size,
  thm_d,
  thm_e,
  thm_f,
  thm_1_9,
  cor_1_10,
  thm_1_14,
  thm_1_17,
  thm_1_19,
  lem_2_1,
  lem_2_2b,
  lem_2_2c,
  lem_2_5,
  thm_2_6,
  n_i,
  j_i_size,
  hm_size,
};

std::optional<BoundId> parse_bound_id(const std::string& name);
std::string bound_id_name(BoundId id);
std::string bound_anchor(BoundId id);

struct BoundQuery {
  BoundId id{};
  std::optional<long long> n, k, s, t, beta, gamma, r, i, chi, eta, ell, l;
  std::vector<long long> part_sizes;  // s_1 >= ... for the multipartite ids
};

struct BoundValue {
  BigInt value;
  std::optional<BigInt> alt;  // second branch where a statement has two cases
  std::string note;
};

// Evaluates the closed-form bound for the query, validating parameter ranges
// per the underlying statement (violations raise BadParameters naming the
// offending range).
BoundValue evaluate_bound(const BoundQuery& q);

struct ConsistencyGrid {
  std::vector<int> ns;
  std::vector<int> ks;
  std::vector<int> ts;
};

// Cross-formula identity table: formula-vs-enumeration for the generated
// families plus the degeneration identities between bounds. corrupt_hook
// deliberately perturbs one identity so tests can confirm failures are
// reported rather than swallowed.
Report consistency_matrix(const ConsistencyGrid& grid, bool corrupt_hook = false);

}  // namespace unionfam

#endif
