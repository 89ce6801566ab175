#include <doctest.h>

#include <random>

#include "oracle_helpers.hpp"
#include "unionfam/constructions.hpp"
#include "unionfam/random_family.hpp"
#include "unionfam/structure.hpp"

using namespace unionfam;

TEST_CASE("is_intersecting and max_element_degree") {
  CHECK(is_intersecting(make_family(4, 2, {{1, 2}, {1, 3}, {2, 3}})));
  CHECK(!is_intersecting(make_family(4, 2, {{1, 2}, {3, 4}})));
  CHECK(is_intersecting(star(7, 3, 1)));

  auto [e1, c1] = max_element_degree(make_family(4, 2, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(e1 == 1);
  CHECK(c1 == 2);
  auto [e2, c2] = max_element_degree(star(6, 2, 1));
  CHECK(e2 == 1);
  CHECK(c2 == 5);
  auto [e3, c3] = max_element_degree(make_family(4, 2, {{1, 2}, {3, 4}}));
  CHECK(e3 == 1);
  CHECK(c3 == 1);
  CHECK_THROWS_AS(max_element_degree(Family{4, 2, {}}), EmptyFamily);
}

TEST_CASE("ell examples") {
  CHECK(ell(make_family(4, 2, {{1, 2}, {1, 3}, {2, 3}}), 2).value == 0);
  CHECK(ell(make_family(6, 2, {{1, 2}, {3, 4}, {5, 6}}), 2).value == 2);
  CHECK(ell(make_family(6, 2, {{1, 2}, {3, 4}, {5, 6}}), 3).value == 1);
  CHECK_THROWS_AS(ell(make_family(4, 2, {{1, 2}}), 1), BadParameters);

  // Star plus s-1 = 2 extra sets avoiding element 1 has ell = 2.
  std::vector<Mask> masks = star(10, 3, 1).masks;
  masks.push_back(mask_of({2, 3, 4}));
  masks.push_back(mask_of({5, 6, 7}));
  std::sort(masks.begin(), masks.end());
  Family f{10, 3, masks};
  CHECK(ell(f, 2).value == 2);
}

TEST_CASE("ell removal set is valid and minimal against brute force") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Family f = random_family(8, 3, 4 + bounded_draw(rng, 10), rng());
    for (int r : {2, 3}) {
      EllResult res = ell(f, r);
      CHECK(res.value == ufo::brute_ell(f, r));
      Family rest = remove_by_indices(f, res.removal);
      CHECK(!ufo::brute_has_r_disjoint(rest, r));
      CHECK(res.removal.size() == static_cast<std::size_t>(res.value));
    }
  }
}

TEST_CASE("removing fewer sets than ell leaves an r-clique") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Family f = random_family(8, 3, 6 + bounded_draw(rng, 10), rng());
    EllResult res = ell(f, 2);
    if (res.value == 0) continue;
    for (int probe = 0; probe < 100; ++probe) {
      std::size_t c = bounded_draw(rng, res.value);  // strictly smaller
      std::vector<std::size_t> idx;
      while (idx.size() < c) {
        std::size_t v = bounded_draw(rng, f.size());
        if (std::find(idx.begin(), idx.end(), v) == idx.end()) idx.push_back(v);
      }
      CHECK(ufo::brute_has_r_disjoint(remove_by_indices(f, idx), 2));
    }
  }
}

TEST_CASE("ell is permutation invariant") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Family f = random_family(8, 3, 5 + bounded_draw(rng, 12), rng());
    Family g = apply_permutation(f, ufo::random_permutation(8, rng));
    CHECK(ell(f, 2).value == ell(g, 2).value);
    CHECK(ell(f, 3).value == ell(g, 3).value);
  }
}

TEST_CASE("peel examples") {
  PeelingTrace t0 = peel(make_family(4, 2, {{1, 2}, {1, 3}, {2, 3}}), 2);
  CHECK(t0.m == 0);
  CHECK(t0.removed.empty());
  CHECK(t0.core == make_family(4, 2, {{1, 2}, {1, 3}, {2, 3}}));

  PeelingTrace t1 = peel(make_family(4, 2, {{1, 2}, {3, 4}}), 2);
  CHECK(t1.m == 1);
  CHECK(t1.pairs.size() == 1);
  CHECK(t1.pairs[0].first.mask == mask_of({1, 2}));
  CHECK(t1.pairs[0].second.mask == mask_of({3, 4}));
  CHECK(t1.removed == make_family(4, 2, {{3, 4}}));
  CHECK(t1.core == make_family(4, 2, {{1, 2}}));

  // Not (1,2)-union intersecting: {1,2} is disjoint from two members.
  CHECK_THROWS_AS(peel(make_family(6, 2, {{1, 2}, {3, 4}, {5, 6}, {3, 5}}), 2),
                  NotUnionIntersecting);
}

TEST_CASE("peel random property suite") {
  std::mt19937_64 rng(21);
  std::uint64_t cap = binom_u64(5, 2);
  for (int trial = 0; trial < 60; ++trial) {
    int t = 2 + static_cast<int>(bounded_draw(rng, 2));
    ConstraintSpec repair;
    repair.forbidden_pattern = std::vector<int>{1, t};
    Family f = random_family(10, 3, 5 + bounded_draw(rng, 30), rng(), repair);
    PeelingTrace tr = peel(f, t);
    CHECK(is_intersecting(tr.core));
    CHECK(tr.m <= cap);
    CHECK(tr.removed.size() <= tr.m * (t - 1));
    CHECK(tr.core.size() + tr.removed.size() == f.size());
    CHECK(static_cast<std::size_t>(ell(f, 2).value) <= tr.removed.size());
  }
}

TEST_CASE("verify_set_pair_system") {
  SetPairSystem s;
  s.ground_n = 4;
  s.pairs = {{mask_of({1}), mask_of({2})}, {mask_of({2}), mask_of({1})}};
  CHECK(verify_set_pair_system(s, 1, 1));

  SetPairSystem bad;
  bad.ground_n = 4;
  bad.pairs = {{mask_of({1}), mask_of({1})}};
  CHECK(!verify_set_pair_system(bad, 1, 1));

  SetPairSystem single;
  single.ground_n = 4;
  single.pairs = {{mask_of({1, 2}), mask_of({3})}};
  CHECK(verify_set_pair_system(single, 2, 1));

  CHECK_THROWS_AS(verify_set_pair_system(single, 1, 1), SizeMismatch);

  // No valid system of three (1,1)-pairs exists over a small ground set:
  // exhaustive check over all ordered triples.
  std::vector<Mask> singles = all_k_subsets(4, 1);
  for (Mask a1 : singles)
    for (Mask b1 : singles)
      for (Mask a2 : singles)
        for (Mask b2 : singles)
          for (Mask a3 : singles)
            for (Mask b3 : singles) {
              SetPairSystem sys;
              sys.ground_n = 4;
              sys.pairs = {{a1, b1}, {a2, b2}, {a3, b3}};
              CHECK(!verify_set_pair_system(sys, 1, 1));
            }
}

TEST_CASE("max_set_pair_system small instances") {
  CHECK(max_set_pair_system(1, 1, 4) == 2);
  CHECK(max_set_pair_system(1, 2, 5) == 3);
  CHECK(max_set_pair_system(1, 1, 2) == 2);
  CHECK(max_set_pair_system(2, 2, 3) == 0);  // no disjoint pair fits
  // The proved cap C(4,2) = 6 is attained already on 8 points.
  CHECK(max_set_pair_system(2, 2, 8) == 6);
  CHECK_THROWS_AS(max_set_pair_system(1, 1, 13), BadParameters);
}
