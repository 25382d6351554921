#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "ordsemi/decision.hpp"
#include "ordsemi/induced.hpp"
#include "oracles.hpp"

using namespace ordsemi;

namespace {

SemigroupIso identity_iso(const CayleyTable& t) {
  SemigroupIso iso;
  iso.mapping.resize(static_cast<std::size_t>(t.order));
  std::iota(iso.mapping.begin(), iso.mapping.end(), 0);
  return iso;
}

SemigroupIso inverse_of(const SemigroupIso& m) {
  SemigroupIso inv;
  inv.mapping.resize(m.mapping.size());
  for (std::size_t i = 0; i < m.mapping.size(); ++i) {
    inv.mapping[static_cast<std::size_t>(m.mapping[i])] = static_cast<int>(i);
  }
  return inv;
}

}  // namespace

TEST_CASE("theta of the identity automorphism is the identity") {
  const CayleyTable t = build_cayley(ChainPair(5, {1, 3}));
  const RangeBijection theta = extract_theta(t, t, identity_iso(t));
  CHECK(theta.domain == std::vector<int>{1, 3});
  CHECK(theta.image == std::vector<int>{1, 3});
  CHECK(theta.orientation == Orientation::order);
  CHECK(theta.apply(1) == 1);
  CHECK(theta.apply(3) == 3);
}

TEST_CASE("theta of the mirror isomorphism is anti-monotone") {
  const CayleyTable a = build_cayley(ChainPair(3, {1, 2}));
  const CayleyTable b = build_cayley(ChainPair(3, {0, 1}));
  const auto iso = find_iso(a, b);
  REQUIRE(iso.has_value());

  const RangeBijection theta = extract_theta(a, b, *iso);
  CHECK(theta.domain == std::vector<int>{1, 2});
  CHECK(theta.image == std::vector<int>{1, 0});
  CHECK(theta.orientation == Orientation::anti);
}

TEST_CASE("every automorphism of the six-element semigroup induces identity or swap") {
  const CayleyTable t = build_cayley(ChainPair(5, {1, 3}));
  const auto automorphisms = find_all_isos(t, t);
  REQUIRE(automorphisms.size() == 4);

  std::set<std::vector<int>> images;
  for (const SemigroupIso& phi : automorphisms) {
    const RangeBijection theta = extract_theta(t, t, phi);
    images.insert(theta.image);
  }
  CHECK(images == std::set<std::vector<int>>{{1, 3}, {3, 1}});
}

TEST_CASE("theta of the inverse isomorphism is the inverse of theta") {
  const auto family = instance_family(5, 2);
  std::vector<CayleyTable> tables;
  for (const auto& pair : family) tables.push_back(build_cayley(pair));

  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (std::size_t j = i; j < tables.size(); ++j) {
      const auto iso = find_iso(tables[i], tables[j]);
      if (!iso) continue;
      const RangeBijection theta = extract_theta(tables[i], tables[j], *iso);
      const RangeBijection back =
          extract_theta(tables[j], tables[i], inverse_of(*iso));
      CHECK(back.orientation == theta.orientation);
      for (std::size_t k = 0; k < theta.domain.size(); ++k) {
        CHECK(back.apply(theta.image[k]) == theta.domain[k]);
      }
    }
  }
}

TEST_CASE("extract_theta rejects a mapping that breaks the constants") {
  const CayleyTable t = build_cayley(ChainPair(3, {1, 2}));
  // Swaps the constant at index 0 with the non-constant at index 1.
  CHECK_THROWS_AS(extract_theta(t, t, SemigroupIso{{1, 0, 2, 3}}),
                  std::logic_error);
}

TEST_CASE("adjusted-chain extension of the identity") {
  const CayleyTable t = build_cayley(ChainPair(6, {1, 4}));
  const AdjustedChainIso hat = extend_theta_hat(t, t, identity_iso(t));
  CHECK(hat.orientation == Orientation::order);
  REQUIRE(hat.blocks.size() == 3);
  for (const auto& match : hat.blocks) {
    CHECK(match.from == match.to);
  }
}

TEST_CASE("adjusted-chain extension of the mirror isomorphism") {
  const CayleyTable a = build_cayley(ChainPair(3, {1, 2}));
  const CayleyTable b = build_cayley(ChainPair(3, {0, 1}));
  const auto iso = find_iso(a, b);
  REQUIRE(iso.has_value());

  const AdjustedChainIso hat = extend_theta_hat(a, b, *iso);
  CHECK(hat.orientation == Orientation::anti);
  REQUIRE(hat.blocks.size() == 1);
  CHECK(hat.blocks[0].from == GapBlock{0, 0, 0});
  CHECK(hat.blocks[0].to == GapBlock{2, 2, 2});
  CHECK(hat.blocks[0].from.count() == hat.blocks[0].to.count());
}

TEST_CASE("extension requires nontrivial ranges") {
  const CayleyTable t = build_cayley(ChainPair(3, {1}));
  CHECK_THROWS_AS(extend_theta_hat(t, t, identity_iso(t)),
                  std::invalid_argument);
}

TEST_CASE("preservation report is clean for identity and mirror") {
  const CayleyTable t = build_cayley(ChainPair(6, {1, 4}));
  const PreservationReport self = check_preservation(t, t, identity_iso(t));
  CHECK(self.clean());
  CHECK(self.elements_checked == t.order);

  const CayleyTable a = build_cayley(ChainPair(3, {1, 2}));
  const CayleyTable b = build_cayley(ChainPair(3, {0, 1}));
  const auto iso = find_iso(a, b);
  REQUIRE(iso.has_value());
  CHECK(check_preservation(a, b, *iso).clean());
}

TEST_CASE("transport suite over every oracle isomorphism up to size 5") {
  const auto family = instance_family(5, 2);
  std::vector<CayleyTable> tables;
  for (const auto& pair : family) tables.push_back(build_cayley(pair));

  int found = 0;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    for (std::size_t j = 0; j < tables.size(); ++j) {
      const auto iso = find_iso(tables[i], tables[j]);
      if (!iso) continue;
      ++found;
      REQUIRE(verify_iso(tables[i], tables[j], *iso));
      CHECK_NOTHROW(extract_theta(tables[i], tables[j], *iso));
      CHECK(check_preservation(tables[i], tables[j], *iso).clean());
      const AdjustedChainIso hat = extend_theta_hat(tables[i], tables[j], *iso);
      for (const auto& match : hat.blocks) {
        CHECK(match.from.count() == match.to.count());
      }
    }
  }
  CHECK(found >= static_cast<int>(tables.size()));  // at least all self-pairs
}
