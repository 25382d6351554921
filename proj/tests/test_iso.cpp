#include <doctest.h>

#include <numeric>

#include "ordsemi/decision.hpp"
#include "ordsemi/errors.hpp"
#include "ordsemi/iso.hpp"
#include "oracles.hpp"

using namespace ordsemi;

namespace {

SemigroupIso inverse_of(const SemigroupIso& m) {
  SemigroupIso inv;
  inv.mapping.resize(m.mapping.size());
  for (std::size_t i = 0; i < m.mapping.size(); ++i) {
    inv.mapping[static_cast<std::size_t>(m.mapping[i])] = static_cast<int>(i);
  }
  return inv;
}

SemigroupIso composed(const SemigroupIso& first, const SemigroupIso& second) {
  SemigroupIso out;
  out.mapping.reserve(first.mapping.size());
  for (int v : first.mapping) {
    out.mapping.push_back(second.mapping[static_cast<std::size_t>(v)]);
  }
  return out;
}

}  // namespace

TEST_CASE("identity is found on equal tables") {
  const CayleyTable t = build_cayley(ChainPair(5, {1, 3}));
  const auto iso = find_iso(t, t);
  REQUIRE(iso.has_value());
  std::vector<int> identity(static_cast<std::size_t>(t.order));
  std::iota(identity.begin(), identity.end(), 0);
  CHECK(iso->mapping == identity);
  CHECK(verify_iso(t, t, *iso));
}

TEST_CASE("mirror pair is isomorphic and the witness is lexicographically least") {
  const CayleyTable a = build_cayley(ChainPair(3, {1, 2}));
  const CayleyTable b = build_cayley(ChainPair(3, {0, 1}));
  REQUIRE(a.order == 4);
  REQUIRE(b.order == 4);

  const auto iso = find_iso(a, b);
  REQUIRE(iso.has_value());
  CHECK(verify_iso(a, b, *iso));
  CHECK(iso->mapping == std::vector<int>{3, 2, 1, 0});

  const auto all = oracles::all_isos(a, b);
  REQUIRE_FALSE(all.empty());
  CHECK(*iso == all.front());  // brute-force enumeration is lexicographic
}

TEST_CASE("same order does not imply isomorphic") {
  const CayleyTable a = build_cayley(ChainPair(3, {0, 1}));
  const CayleyTable b = build_cayley(ChainPair(3, {0, 2}));
  REQUIRE(a.order == b.order);
  CHECK_FALSE(find_iso(a, b).has_value());
  CHECK(oracles::all_isos(a, b).empty());
}

TEST_CASE("verify_iso rejects structure breakers") {
  const CayleyTable a = build_cayley(ChainPair(3, {1, 2}));
  std::vector<int> identity(static_cast<std::size_t>(a.order));
  std::iota(identity.begin(), identity.end(), 0);
  CHECK(verify_iso(a, a, SemigroupIso{identity}));

  // Swapping a right zero with a non-right-zero cannot be a homomorphism.
  CHECK_FALSE(verify_iso(a, a, SemigroupIso{{1, 0, 2, 3}}));
  // Wrong sizes and non-bijections are rejected outright.
  CHECK_FALSE(verify_iso(a, a, SemigroupIso{{0, 1, 2}}));
  CHECK_FALSE(verify_iso(a, a, SemigroupIso{{0, 0, 2, 3}}));
}

TEST_CASE("presence is symmetric and witnesses invert") {
  const auto family = instance_family(4, 2);
  std::vector<CayleyTable> tables;
  for (const auto& pair : family) tables.push_back(build_cayley(pair));

  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (std::size_t j = 0; j < tables.size(); ++j) {
      const auto forward = find_iso(tables[i], tables[j]);
      const auto backward = find_iso(tables[j], tables[i]);
      REQUIRE(forward.has_value() == backward.has_value());
      if (forward) {
        CHECK(verify_iso(tables[i], tables[j], *forward));
        CHECK(verify_iso(tables[j], tables[i], inverse_of(*forward)));
        // Composing the two found witnesses yields an automorphism.
        CHECK(verify_iso(tables[i], tables[i], composed(*forward, *backward)));
      }
    }
  }
}

TEST_CASE("pruning never changes the answer") {
  const auto family = instance_family(5, 2);
  std::vector<CayleyTable> tables;
  for (const auto& pair : family) {
    if (count_top(pair) <= 30) tables.push_back(build_cayley(pair));
  }

  IsoSearchOptions pruned;
  IsoSearchOptions exhaustive;
  exhaustive.use_refinement = false;

  for (const auto& a : tables) {
    for (const auto& b : tables) {
      const auto with = find_iso(a, b, pruned);
      const auto without = find_iso(a, b, exhaustive);
      CHECK(with == without);
    }
  }
}

TEST_CASE("budget exceeded is distinct from refusal") {
  const CayleyTable t = build_cayley(ChainPair(5, {1, 3}));
  IsoSearchOptions options;
  options.node_budget = 1;
  CHECK_THROWS_AS(find_iso(t, t, options), BudgetExceeded);

  // A cheap refusal (different orders) stays a refusal even with no budget.
  const CayleyTable tiny = build_cayley(ChainPair(2, {0}));
  CHECK_FALSE(find_iso(t, tiny, options).has_value());
}

TEST_CASE("find_all_isos enumerates the automorphism group at small scale") {
  const CayleyTable t = build_cayley(ChainPair(5, {1, 3}));
  const auto all = find_all_isos(t, t);
  const auto brute = oracles::all_isos(t, t);
  REQUIRE(all.size() == brute.size());
  CHECK(all.size() == 4);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i] == brute[i]);  // same lexicographic order
    CHECK(verify_iso(t, t, all[i]));
  }
}
