#include <doctest.h>

#include "oracle_helpers.hpp"
#include "unionfam/bounds.hpp"
#include "unionfam/constructions.hpp"

using namespace unionfam;

TEST_CASE("binomial basics and Pascal oracle") {
  CHECK(binomial(9, 2) == 36);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(7, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == ufo::pascal_binomial(60, 30));

  for (int n = 0; n <= 80; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n, n - k));
      if (k >= 1)
        CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

TEST_CASE("evaluate_bound worked values") {
  CHECK(evaluate_bound({.id = BoundId::thm_1_9, .n = 10, .k = 3, .s = 1, .t = 1, .beta = 0})
            .value == 22);
  CHECK(evaluate_bound({.id = BoundId::n_i, .n = 12, .k = 4, .i = 2}).value == 115);
  CHECK(evaluate_bound({.id = BoundId::thm_d, .n = 20, .k = 2, .s = 2, .t = 2}).value == 7);
  CHECK(evaluate_bound({.id = BoundId::cor_1_10, .n = 12, .k = 3, .t = 2}).value == 29);
  CHECK(BigInt(j_1t_family(12, 3, 1, 2).size()) ==
        evaluate_bound({.id = BoundId::cor_1_10, .n = 12, .k = 3, .t = 2}).value);
  CHECK(evaluate_bound({.id = BoundId::ekr, .n = 10, .k = 3}).value == 36);
  CHECK(evaluate_bound({.id = BoundId::hm, .n = 10, .k = 3}).value == 22);
  CHECK(evaluate_bound({.id = BoundId::thm_2_6, .k = 2, .l = 2}).value == 6);
}

TEST_CASE("two-case bound agrees at the overlap") {
  // At k = s+2 both cases apply and must coincide.
  for (int s : {1, 2, 3, 4}) {
    int k = s + 2;
    int n = 4 * k;
    BoundValue v = evaluate_bound({.id = BoundId::thm_a, .n = n, .k = k, .s = s});
    REQUIRE(v.alt.has_value());
    CHECK(v.value == *v.alt);
  }
  BoundValue low = evaluate_bound({.id = BoundId::thm_a, .n = 20, .k = 2, .s = 2});
  CHECK(low.note == "case k<=2 or k>=s+2");
  CHECK_THROWS_AS(evaluate_bound({.id = BoundId::thm_a, .n = 20, .k = 2, .s = 3}),
                  BadParameters);
}

TEST_CASE("parameter validation names the range") {
  CHECK_THROWS_AS(evaluate_bound({.id = BoundId::thm_1_14, .n = 20, .k = 4, .t = 1, .gamma = 1}),
                  BadParameters);
  CHECK_THROWS_AS(evaluate_bound({.id = BoundId::thm_1_9, .n = 10, .k = 2, .s = 1, .t = 1, .beta = 0}),
                  BadParameters);
  CHECK_THROWS_AS(evaluate_bound({.id = BoundId::ekr, .n = 5, .k = 3}), BadParameters);
  CHECK_THROWS_AS(evaluate_bound({.id = BoundId::thm_d, .n = 20, .k = 3, .s = 1, .t = 2}),
                  BadParameters);
  CHECK_THROWS_AS(evaluate_bound({.id = BoundId::ekr, .k = 3}), BadParameters);
}

TEST_CASE("lem_2_5 is an exact ceiling") {
  // ell = 9, k = 2: ceil(81 / (2 * C(4,2))) = ceil(81/12) = 7.
  CHECK(evaluate_bound({.id = BoundId::lem_2_5, .k = 2, .ell = 9}).value == 7);
  CHECK(evaluate_bound({.id = BoundId::lem_2_5, .k = 2, .ell = 0}).value == 0);
  CHECK(evaluate_bound({.id = BoundId::lem_2_5, .k = 3, .ell = 40}).value ==
        (BigInt(1600) + 39) / 40);
}

TEST_CASE("bound monotonicity in the floor argument") {
  // C(n - a - 1, k - 1) decreases as a grows on the valid range.
  for (int n : {12, 16})
    for (int k : {3, 4})
      for (int a = 1; a + 1 < n; ++a)
        CHECK(binomial(n - a - 1, k - 1) >= binomial(n - a - 2, k - 1));
}

TEST_CASE("N_i telescoping") {
  for (int n : {12, 15})
    for (int k : {3, 4, 5})
      for (int i = 1; i <= k - 1; ++i) {
        BigInt lhs = evaluate_bound({.id = BoundId::n_i, .n = n, .k = k, .i = i - 1}).value -
                     evaluate_bound({.id = BoundId::n_i, .n = n, .k = k, .i = i}).value;
        CHECK(lhs == binomial(n - k - i, k - i));
      }
}

TEST_CASE("parse_bound_id round trip") {
  for (const char* name : {"ekr", "hm", "thm1.9", "cor1.10", "thm1.14", "lem2.2b", "n-i"}) {
    auto id = parse_bound_id(name);
    REQUIRE(id.has_value());
    CHECK(bound_id_name(*id) == name);
  }
  CHECK(!parse_bound_id("nope").has_value());
}

TEST_CASE("consistency_matrix") {
  ConsistencyGrid grid{{10, 11}, {3, 4}, {1, 2}};
  Report rep = consistency_matrix(grid);
  CHECK(rep.records.size() > 0);
  CHECK(rep.failed() == 0);

  Report corrupted = consistency_matrix(grid, /*corrupt_hook=*/true);
  CHECK(corrupted.failed() > 0);

  Report empty = consistency_matrix(ConsistencyGrid{{}, {}, {}});
  CHECK(empty.records.empty());
}
