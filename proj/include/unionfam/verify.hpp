#ifndef UNIONFAM_VERIFY_HPP
#define UNIONFAM_VERIFY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "unionfam/bounds.hpp"
#include "unionfam/report.hpp"

namespace unionfam {

// Suite runners shared by the CLI and the acceptance harness. Each returns a
// Report with records in a fixed order; identical configuration (including
// seeds) yields byte-identical serialized reports.

struct ConstructionsConfig {
  std::vector<int> ns{10, 11, 12, 13, 14};
  std::vector<int> ks{3, 4, 5};
  std::vector<int> ts{1, 2, 3};
  unsigned threads = 0;
};

// Formula-vs-enumeration identities for the named constructions, plus the
// isomorphism spot checks.
Report verify_constructions(const ConstructionsConfig& cfg);

struct Lemma22Config {
  int n = 12;
  int k = 3;
  int s = 1;
  int beta = 1;
  unsigned threads = 0;
};

// Exhaustive sweep over all anchor tuples (deduplicated by canonical form
// under relabelings fixing element 1): two-sided bound checks with both
// directions of the equality characterizations.
Report verify_lemma22(const Lemma22Config& cfg);

struct PeelConfig {
  int n = 10;
  int k = 3;
  std::vector<int> ts{2, 3};
  int count = 1000;         // families per t
  std::uint64_t seed = 1;
  std::size_t min_size = 5, max_size = 60;
  unsigned threads = 0;
};

// Seeded random union-intersecting families run through the peeling
// procedure; checks trace invariants and the removal-count chain.
Report verify_peel(const PeelConfig& cfg);

struct PairsBoundConfig {
  int n = 10;
  int k = 3;
  int count = 1000;
  std::uint64_t seed = 1;
  std::size_t min_size = 5, max_size = 60;
  unsigned threads = 0;
};

// Integer-exact disjoint-pair lower bound 2*C(2k,k)*pairs >= ell^2 on seeded
// random families.
Report verify_pairs_bound(const PairsBoundConfig& cfg);

struct SetPairsConfig {
  // (k, l, ground) instances for the exact maximum search.
  std::vector<std::array<int, 3>> instances{{1, 1, 4}, {1, 2, 5}, {2, 2, 8}};
};

Report verify_setpairs(const SetPairsConfig& cfg);

struct VerifyAllConfig {
  ConstructionsConfig constructions;
  Lemma22Config lemma22;
  PeelConfig peel;
  PairsBoundConfig pairs;
  SetPairsConfig setpairs;
  ConsistencyGrid consistency{{10, 11, 12}, {3, 4, 5}, {1, 2}};
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string describe() const;
};

Report run_verify_all(const VerifyAllConfig& cfg);

}  // namespace unionfam

#endif
