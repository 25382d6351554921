#include <doctest.h>

#include <stdexcept>

#include "ordsemi/decision.hpp"
#include "ordsemi/errors.hpp"
#include "ordsemi/transformation.hpp"
#include "oracles.hpp"

using namespace ordsemi;

namespace {

// The 9-element example map onto {0,2,4,6,8}; deliberately not monotone.
Transformation example_alpha() {
  return Transformation(ChainPair(9, {0, 2, 4, 6, 8}),
                        {0, 4, 0, 8, 4, 4, 4, 2, 4});
}

}  // namespace

TEST_CASE("transformation validation") {
  const ChainPair pair(5, {1, 3});
  CHECK_THROWS_WITH_AS(Transformation(pair, {1, 1, 1}),
                       doctest::Contains("length"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Transformation(pair, {1, 1, 2, 3, 3}),
                       doctest::Contains("not a range element"),
                       std::invalid_argument);
  // Non-monotone maps into the range are representable; only membership in
  // the order-preserving subsemigroup is a predicate.
  const Transformation zigzag(pair, {3, 1, 3, 1, 3});
  CHECK_FALSE(is_order_preserving(zigzag));
  CHECK(is_order_preserving(Transformation(pair, {1, 1, 3, 3, 3})));
}

TEST_CASE("composition acts left to right") {
  const ChainPair pair(5, {1, 3});
  const Transformation alpha(pair, {1, 1, 1, 3, 3});
  const Transformation beta(pair, {1, 3, 3, 3, 3});
  // x(alpha beta) = (x alpha) beta.
  const Transformation product = compose(alpha, beta);
  CHECK(product.image() == std::vector<int>{3, 3, 3, 3, 3});

  CHECK_THROWS_WITH_AS(compose(alpha, Transformation(ChainPair(5, {1, 4}),
                                                     {1, 1, 1, 4, 4})),
                       doctest::Contains("different pairs"),
                       std::invalid_argument);
}

TEST_CASE("composing with constants") {
  const ChainPair pair(5, {1, 3});
  const Transformation beta(pair, {1, 1, 3, 3, 3});
  CHECK(compose(constant_map(pair, 1), beta).image() ==
        std::vector<int>{1, 1, 1, 1, 1});  // constant at 1beta = 1
  CHECK(compose(beta, constant_map(pair, 3)) == constant_map(pair, 3));
  CHECK(compose(constant_map(pair, 1), constant_map(pair, 3)) ==
        constant_map(pair, 3));
}

TEST_CASE("the example map composes but is not order-preserving") {
  const Transformation alpha = example_alpha();
  CHECK_FALSE(is_order_preserving(alpha));
  const Transformation square = compose(alpha, alpha);
  CHECK(square.image() == std::vector<int>{0, 4, 0, 4, 4, 4, 4, 0, 4});
  CHECK_FALSE(is_order_preserving(square));
}

TEST_CASE("constants are exactly the right zeros") {
  const ChainPair pair(5, {1, 3});
  const auto elements = enumerate_top(pair);
  for (const Transformation& kappa : elements) {
    bool right_zero = true;
    for (const Transformation& beta : elements) {
      if (compose(beta, kappa) != kappa) {
        right_zero = false;
        break;
      }
    }
    const bool constant =
        kappa == constant_map(pair, kappa.apply(0)) && true;
    CHECK(right_zero == constant);
  }
}

TEST_CASE("enumeration counts and canonical order") {
  const auto small = enumerate_top(ChainPair(5, {1, 3}));
  REQUIRE(small.size() == 6);
  CHECK(small[0].image() == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(small[1].image() == std::vector<int>{1, 1, 1, 1, 3});
  CHECK(small[2].image() == std::vector<int>{1, 1, 1, 3, 3});
  CHECK(small[3].image() == std::vector<int>{1, 1, 3, 3, 3});
  CHECK(small[4].image() == std::vector<int>{1, 3, 3, 3, 3});
  CHECK(small[5].image() == std::vector<int>{3, 3, 3, 3, 3});

  const ChainPair nine(9, {0, 2, 4, 6, 8});
  CHECK(count_top(nine) == 715);  // C(13,4)
  CHECK(enumerate_top(nine).size() == 715);

  CHECK(enumerate_top(ChainPair(7, {3})).size() == 1);
}

TEST_CASE("enumeration equals the brute-force filter on every instance up to size 6") {
  for (const ChainPair& pair : instance_family(6, 1)) {
    const auto enumerated = enumerate_top(pair);
    const auto expected = oracles::monotone_maps(pair);
    REQUIRE(enumerated.size() == expected.size());
    CHECK(count_top(pair) == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(enumerated[i].image() == expected[i]);
      if (i > 0) CHECK(enumerated[i - 1].image() < enumerated[i].image());
    }
  }
}

TEST_CASE("enumeration cap is enforced") {
  const ChainPair nine(9, {0, 2, 4, 6, 8});
  CHECK_THROWS_AS(enumerate_top(nine, 100), CapExceeded);
  try {
    enumerate_top(nine, 100);
  } catch (const CapExceeded& e) {
    CHECK(e.count() == 715);
    CHECK(e.cap() == 100);
  }
}

TEST_CASE("fixpoints") {
  CHECK(fixpoints(example_alpha()) == std::vector<int>{0, 4});
  const ChainPair pair(5, {1, 3});
  CHECK(fixpoints(constant_map(pair, 1)) == std::vector<int>{1});
  // The identity-on-range idempotent fixes at least the range.
  CHECK(fixpoints(Transformation(pair, {1, 1, 1, 3, 3})) ==
        std::vector<int>{1, 3});
}

TEST_CASE("idempotency") {
  const ChainPair pair(5, {1, 3});
  CHECK(is_idempotent(constant_map(pair, 1)));
  CHECK(is_idempotent(constant_map(pair, 3)));
  CHECK_FALSE(is_idempotent(example_alpha()));
  // Both lambda3-shape maps fix the whole range pointwise.
  CHECK(is_idempotent(Transformation(pair, {1, 1, 1, 3, 3})));
  CHECK(is_idempotent(Transformation(pair, {1, 1, 3, 3, 3})));
}

TEST_CASE("restriction to the range") {
  const auto table = restrict_to_range(example_alpha());
  const std::vector<std::pair<int, int>> expected{
      {0, 0}, {2, 0}, {4, 4}, {6, 4}, {8, 4}};
  CHECK(table == expected);

  const ChainPair pair(5, {1, 3});
  CHECK(restrict_to_range(constant_map(pair, 1)) ==
        std::vector<std::pair<int, int>>{{1, 1}, {3, 1}});
  CHECK(restrict_to_range(Transformation(pair, {1, 1, 1, 3, 3})) ==
        std::vector<std::pair<int, int>>{{1, 1}, {3, 3}});
}

TEST_CASE("omega_three produces the displayed cut map") {
  const ChainPair pair(9, {0, 2, 4, 6, 8});
  const GapBlock block{3, 3, 2};
  const Transformation omega = omega_three(pair, block, {3}, 0, 2, 4);
  CHECK(omega.image() == std::vector<int>{0, 0, 0, 2, 4, 4, 4, 4, 4});
  CHECK(is_order_preserving(omega));

  // Degenerate a = b collapses to a two-valued map.
  const Transformation degenerate = omega_three(pair, block, {3}, 0, 0, 4);
  CHECK(degenerate.image() == std::vector<int>{0, 0, 0, 0, 4, 4, 4, 4, 4});

  // b-preimage is exactly A when a != b (and c != b).
  for (int x = 0; x < pair.size(); ++x) {
    CHECK((omega.apply(x) == 2) == (x == 3));
  }
}

TEST_CASE("omega_three preconditions") {
  const ChainPair pair(9, {0, 2, 4, 6, 8});
  const GapBlock block{3, 3, 2};
  CHECK_NOTHROW(omega_three(pair, block, {3}, 2, 4, 6));  // a < block < b <= c
  // a on the wrong side of the block for either form.
  CHECK_THROWS_AS(omega_three(pair, block, {3}, 4, 6, 8), std::invalid_argument);
  // c below the block in the first form.
  CHECK_THROWS_AS(omega_three(pair, block, {3}, 0, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(omega_three(pair, block, {4}, 0, 2, 4), std::invalid_argument);

  const ChainPair wide(6, {0, 4});
  const GapBlock wide_block{1, 3, 1};
  CHECK_THROWS_WITH_AS(omega_three(wide, wide_block, {1, 3}, 0, 0, 4),
                       doctest::Contains("not convex"), std::invalid_argument);
}

TEST_CASE("composing a three-valued cut with a collapse gives the lower-edge cut") {
  const ChainPair pair(9, {0, 2, 4, 6, 8});
  const Transformation omega = omega_three(pair, GapBlock{3, 3, 2}, {3}, 0, 2, 4);
  const Transformation collapse(pair, {0, 0, 4, 4, 4, 4, 4, 4, 4});
  const Transformation cut = compose(omega, collapse);
  CHECK(cut.image() == std::vector<int>{0, 0, 0, 4, 4, 4, 4, 4, 4});
}

TEST_CASE("omega_low") {
  const ChainPair pair(3, {1, 2});
  const Transformation low = omega_low(pair, {0}, 1, 2);
  CHECK(low.image() == std::vector<int>{1, 2, 2});
  for (int x = 0; x < 3; ++x) {
    CHECK((low.apply(x) == 1) == (x == 0));  // a-preimage is exactly L
  }

  CHECK(compose(low, constant_map(pair, 2)) == constant_map(pair, 2));

  CHECK_THROWS_WITH_AS(omega_low(ChainPair(3, {0, 1}), {0}, 0, 1),
                       doctest::Contains("below the range"),
                       std::invalid_argument);
  CHECK_THROWS_AS(omega_low(pair, {0}, 2, 1), std::invalid_argument);
}

TEST_CASE("omega_high") {
  const ChainPair pair(3, {0, 1});
  const Transformation high = omega_high(pair, {2}, 0, 1);
  CHECK(high.image() == std::vector<int>{0, 0, 1});
  for (int x = 0; x < 3; ++x) {
    CHECK((high.apply(x) == 1) == (x == 2));  // b-preimage is exactly U
  }

  CHECK_THROWS_WITH_AS(omega_high(ChainPair(3, {1, 2}), {0}, 1, 2),
                       doctest::Contains("above the range"),
                       std::invalid_argument);

  const ChainPair wide(6, {0, 1});
  CHECK(omega_high(wide, {3, 4, 5}, 0, 1).image() ==
        std::vector<int>{0, 0, 0, 1, 1, 1});
  CHECK_THROWS_WITH_AS(omega_high(wide, {3, 4}, 0, 1),
                       doctest::Contains("upper-convex"),
                       std::invalid_argument);
}

TEST_CASE("closure and associativity on small instances") {
  for (const ChainPair& pair : instance_family(5, 1)) {
    const auto elements = enumerate_top(pair);
    for (const Transformation& a : elements) {
      for (const Transformation& b : elements) {
        const Transformation ab = compose(a, b);
        CHECK(is_order_preserving(ab));
        for (int x = 0; x < pair.size(); ++x) {
          CHECK(pair.in_range(ab.apply(x)));
        }
      }
    }
    if (elements.size() <= 30) {
      for (const Transformation& a : elements) {
        for (const Transformation& b : elements) {
          for (const Transformation& c : elements) {
            CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
          }
        }
      }
    }
  }
}
