#include <doctest.h>

#include "oracle_helpers.hpp"
#include "spec_suite.hpp"
#include "unionfam/constructions.hpp"
#include "unionfam/kneser.hpp"
#include "unionfam/search.hpp"
#include "unionfam/structure.hpp"

using namespace unionfam;

namespace {

ConstraintSpec intersecting_spec() {
  ConstraintSpec s;
  s.forbidden_pattern = std::vector<int>{1, 1};
  return s;
}

}  // namespace

TEST_CASE("oracle_max_family on intersecting families") {
  SearchResult r5 = oracle_max_family(5, 2, intersecting_spec());
  CHECK(r5.max_size == 4);
  CHECK(r5.optimal);
  CHECK(r5.witness == star(5, 2, 1));  // lex-min maximum is the star at 1

  SearchResult r4 = oracle_max_family(4, 2, intersecting_spec());
  CHECK(r4.max_size == 3);

  CHECK_THROWS_AS(oracle_max_family(8, 2, intersecting_spec()), TooLarge);
  CHECK_THROWS_AS(oracle_max_family(5, 2, ConstraintSpec{}), BadParameters);
}

TEST_CASE("oracle regression: K_{1,2}-free maximum at (6,2)") {
  ConstraintSpec s;
  s.forbidden_pattern = std::vector<int>{1, 2};
  SearchResult r = oracle_max_family(6, 2, s);
  // All 2-subsets of [4] give a perfect-matching disjointness graph; the
  // exhaustive 2^15 run shows nothing larger exists.
  Family sub4{6, 2, all_k_subsets(4, 2)};
  CHECK(is_union_intersecting(sub4, 1, 2).holds);
  CHECK(r.max_size == 6);
  CHECK(r.witness == sub4);
}

TEST_CASE("branch and bound equals the oracle across the fixed suite") {
  for (const auto& inst : ufo::oracle_equivalence_suite()) {
    SearchResult o = oracle_max_family(inst.n, inst.k, inst.spec);
    SearchResult b = branch_and_bound_max(inst.n, inst.k, inst.spec);
    CHECK(b.optimal);
    CHECK(o.max_size == b.max_size);
    CHECK(o.witness == b.witness);
  }
}

TEST_CASE("branch and bound at (7,2) reaches the EKR value") {
  SearchResult b = branch_and_bound_max(7, 2, intersecting_spec());
  CHECK(b.max_size == 6);
  CHECK(b.optimal);
  SearchResult o = oracle_max_family(7, 2, intersecting_spec());
  CHECK(o.max_size == 6);
  CHECK(o.witness == b.witness);
}

TEST_CASE("budget exhaustion is reported, not mis-answered") {
  ConstraintSpec s = intersecting_spec();
  SearchResult r = branch_and_bound_max(12, 3, s, /*node_budget=*/50);
  CHECK(r.wall_budget_hit);
  CHECK(!r.optimal);
}

TEST_CASE("max_size is invariant under relabeled anchors") {
  ConstraintSpec a = intersecting_spec();
  a.must_contain = {{1, 2}};
  ConstraintSpec b = intersecting_spec();
  b.must_contain = {{3, 4}};
  CHECK(oracle_max_family(5, 2, a).max_size == oracle_max_family(5, 2, b).max_size);
}

TEST_CASE("enumerate_maximal at (5,2): star and triangle classes") {
  auto classes = enumerate_maximal(5, 2, intersecting_spec(), 10);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].size() == 4);
  CHECK(classes[1].size() == 3);
  CHECK(classes[0].masks == canonical_masks(star(5, 2, 1).masks));
  CHECK(classes[1].masks == canonical_masks(make_family(5, 2, {{1, 2}, {1, 3}, {2, 3}}).masks));

  CHECK_THROWS_AS(enumerate_maximal(5, 2, intersecting_spec(), 1), LimitExceeded);
}

TEST_CASE("enumerate_maximal at (4,2): two classes of size 3") {
  auto classes = enumerate_maximal(4, 2, intersecting_spec(), 10);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].size() == 3);
  CHECK(classes[1].size() == 3);
}

TEST_CASE("search witnesses satisfy their specs via independent detectors") {
  for (const auto& inst : ufo::oracle_equivalence_suite()) {
    SearchResult o = oracle_max_family(inst.n, inst.k, inst.spec);
    if (o.max_size <= 0) continue;
    if (inst.spec.forbidden_pattern) {
      CHECK(!contains_complete_multipartite(build_graph(o.witness),
                                            *inst.spec.forbidden_pattern)
                 .found());
    }
    if (inst.spec.ell_min)
      CHECK(ell(o.witness, inst.spec.ell_min->first).value >= inst.spec.ell_min->second);
    for (const auto& s : inst.spec.must_contain)
      CHECK(o.witness.contains(make_kset(inst.n, s).mask));
    for (const auto& s : inst.spec.must_avoid)
      CHECK(!o.witness.contains(make_kset(inst.n, s).mask));
  }
}
