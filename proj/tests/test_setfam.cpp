#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "oracle_helpers.hpp"
#include "unionfam/random_family.hpp"
#include "unionfam/setfam.hpp"

using namespace unionfam;

TEST_CASE("make_family basics") {
  Family f = make_family(5, 2, {{1, 2}, {1, 3}});
  CHECK(f.size() == 2);
  CHECK(f.n == 5);
  CHECK(f.k == 2);
  CHECK(f.masks[0] < f.masks[1]);

  CHECK_THROWS_AS(make_family(5, 2, {{1, 2}, {2, 1}}), DuplicateSet);
  CHECK_THROWS_AS(make_family(5, 2, {{1, 6}}), ElementOutOfRange);
  CHECK_THROWS_AS(make_family(5, 2, {{1, 2, 3}}), WrongSetSize);
  CHECK_THROWS_AS(make_family(5, 2, {{1, 1}}), WrongSetSize);
  CHECK_THROWS_AS(make_family(5, 0, {}), BadParameters);
  CHECK_THROWS_AS(make_family(3, 4, {}), BadParameters);
}

TEST_CASE("make_family canonicalizes input order") {
  Family a = make_family(5, 2, {{4, 5}, {1, 2}, {2, 3}});
  Family b = make_family(5, 2, {{1, 2}, {2, 3}, {4, 5}});
  CHECK(a == b);
}

TEST_CASE("apply_permutation") {
  Family f = make_family(4, 2, {{1, 2}, {1, 3}});
  CHECK(apply_permutation(f, identity_permutation(4)) == f);

  Family g = make_family(4, 2, {{1, 2}});
  Permutation swap13_24{3, 4, 1, 2};
  CHECK(apply_permutation(g, swap13_24) == make_family(4, 2, {{3, 4}}));

  Family h = make_family(4, 2, {{1, 2}, {3, 4}});
  Permutation swap12{2, 1, 3, 4};
  CHECK(apply_permutation(h, swap12) == h);

  CHECK_THROWS_AS(apply_permutation(f, Permutation{1, 2, 3}), NotAPermutation);
  CHECK_THROWS_AS(apply_permutation(f, Permutation{1, 1, 2, 3}), NotAPermutation);
  CHECK_THROWS_AS(apply_permutation(f, Permutation{0, 1, 2, 3}), NotAPermutation);
}

TEST_CASE("is_isomorphic examples") {
  Family a = make_family(6, 2, {{1, 2}, {1, 3}});
  Family b = make_family(6, 2, {{4, 5}, {4, 6}});
  auto w = is_isomorphic(a, b);
  REQUIRE(w.has_value());
  CHECK(apply_permutation(a, *w) == b);

  Family star = make_family(4, 2, {{1, 2}, {1, 3}, {1, 4}});
  Family triangle = make_family(4, 2, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(!is_isomorphic(star, triangle).has_value());

  CHECK_THROWS_AS(is_isomorphic(star, make_family(5, 2, {{1, 2}})), ParameterMismatch);
  CHECK_THROWS_AS(is_isomorphic(star, make_family(4, 3, {{1, 2, 3}})), ParameterMismatch);
}

TEST_CASE("is_isomorphic property: permuted copies with verified witness") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 5 + static_cast<int>(bounded_draw(rng, 5));  // 5..9
    int k = 2 + static_cast<int>(bounded_draw(rng, 2));  // 2..3
    std::size_t total = all_k_subsets(n, k).size();
    std::size_t size = 1 + bounded_draw(rng, std::min<std::size_t>(total, 12));
    Family f = random_family(n, k, size, rng());
    Permutation sigma = ufo::random_permutation(n, rng);
    Family g = apply_permutation(f, sigma);
    auto w = is_isomorphic(f, g);
    REQUIRE(w.has_value());
    CHECK(apply_permutation(f, *w) == g);
  }
}

TEST_CASE("is_isomorphic is an equivalence relation on random triples") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Family f = random_family(6, 2, 1 + bounded_draw(rng, 8), rng());
    CHECK(is_isomorphic(f, f).has_value());  // reflexive

    Family g = apply_permutation(f, ufo::random_permutation(6, rng));
    Family h = apply_permutation(g, ufo::random_permutation(6, rng));
    CHECK(is_isomorphic(g, f).has_value());  // symmetric
    CHECK(is_isomorphic(f, h).has_value());  // transitive via g
  }
}

TEST_CASE("is_isomorphic agrees with all-permutations brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Family f = random_family(5, 2, 1 + bounded_draw(rng, 5), rng());
    Family g = random_family(5, 2, 1 + bounded_draw(rng, 5), rng());
    CHECK(is_isomorphic(f, g).has_value() == ufo::brute_isomorphic(f, g));
  }
}

TEST_CASE("canonical_form invariance and separation") {
  Family star = make_family(4, 2, {{1, 2}, {1, 3}, {1, 4}});
  Family triangle = make_family(4, 2, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(!(canonical_form(star) == canonical_form(triangle)));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Family f = random_family(7, 3, 1 + bounded_draw(rng, 10), rng());
    Family g = apply_permutation(f, ufo::random_permutation(7, rng));
    CHECK(canonical_form(f) == canonical_form(g));
  }
}

TEST_CASE("canonical_form matches isomorphism exhaustively at n=4, k=2, <=3 sets") {
  std::vector<Family> fams;
  std::vector<Mask> base = all_k_subsets(4, 2);
  for (std::size_t c = 0; c <= 3; ++c) {
    std::vector<std::size_t> idx(c);
    std::iota(idx.begin(), idx.end(), 0);
    if (c == 0) {
      fams.push_back(Family{4, 2, {}});
      continue;
    }
    do {
      std::vector<Mask> masks;
      for (auto i : idx) masks.push_back(base[i]);
      fams.push_back(Family{4, 2, masks});
    } while (ufo::next_combination(idx, base.size()));
  }
  std::vector<CanonicalForm> certs;
  certs.reserve(fams.size());
  for (const auto& f : fams) certs.push_back(canonical_form(f));
  for (std::size_t i = 0; i < fams.size(); ++i)
    for (std::size_t j = i + 1; j < fams.size(); ++j) {
      bool by_cert = certs[i] == certs[j];
      bool by_brute = ufo::brute_isomorphic(fams[i], fams[j]);
      CHECK(by_cert == by_brute);
    }
}

TEST_CASE("certificate equality coincides with the isomorphism search on 1000 pairs") {
  std::mt19937_64 rng(67);
  int equal_count = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 5 + static_cast<int>(bounded_draw(rng, 3));  // 5..7
    int k = 2 + static_cast<int>(bounded_draw(rng, 2));  // 2..3
    std::size_t total = all_k_subsets(n, k).size();
    std::size_t size = 1 + bounded_draw(rng, std::min<std::size_t>(total, 8));
    Family f = random_family(n, k, size, rng());
    // Half the pairs are relabeled copies so both outcomes occur often.
    Family g = (trial % 2 == 0)
                   ? apply_permutation(f, ufo::random_permutation(n, rng))
                   : random_family(n, k, 1 + bounded_draw(rng, std::min<std::size_t>(total, 8)),
                                   rng());
    bool by_cert = canonical_form(f) == canonical_form(g);
    bool by_search = is_isomorphic(f, g).has_value();
    CHECK(by_cert == by_search);
    equal_count += by_cert;
  }
  CHECK(equal_count >= 500);  // the relabeled half must all agree
}

TEST_CASE("canonical_masks is idempotent and sorted") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    Family f = random_family(8, 3, 1 + bounded_draw(rng, 8), rng());
    auto canon = canonical_masks(f.masks);
    CHECK(std::is_sorted(canon.begin(), canon.end()));
    CHECK(canonical_masks(canon) == canon);
  }
}
