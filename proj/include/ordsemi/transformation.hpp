#ifndef ORDSEMI_TRANSFORMATION_HPP
#define ORDSEMI_TRANSFORMATION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ordsemi/chain.hpp"

namespace ordsemi {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000;

// A total map X -> X' in dense image-array form: image[x] = x alpha.
//
// Values are required to land in the range; order preservation is NOT an
// invariant of the type, since partial graphs, fixed points and range
// restrictions are defined for arbitrary maps into X'. The order-preserving
// subsemigroup T_OP(X, X') is the set carved out by is_order_preserving();
// enumerate_top and the map constructors below only ever produce members
// of it.
//
// Composition acts left to right throughout: x(alpha beta) = (x alpha)beta.
class Transformation {
 public:
  Transformation(ChainPair pair, std::vector<int> image);

  const ChainPair& pair() const noexcept { return pair_; }
  const std::vector<int>& image() const noexcept { return image_; }
  int apply(int x) const { return image_[static_cast<std::size_t>(x)]; }

  bool operator==(const Transformation&) const = default;

 private:
  ChainPair pair_;
  std::vector<int> image_;
};

bool is_order_preserving(const Transformation& alpha);

// x(alpha beta) = (x alpha)beta. Rejects transformations over different pairs.
Transformation compose(const Transformation& alpha, const Transformation& beta);

// Number of weakly monotone maps X -> X', i.e. |T_OP(X, X')|. Saturates at
// UINT64_MAX on overflow.
std::uint64_t count_top(const ChainPair& pair);

// All of T_OP(X, X'), exactly once, in lexicographic order of image arrays.
// This ordering is the canonical element indexing used everywhere downstream.
// Throws CapExceeded when |T_OP| > cap.
std::vector<Transformation> enumerate_top(
    const ChainPair& pair, std::uint64_t cap = kDefaultEnumerationCap);

// The constant map C_a. Idempotent; the constants are exactly the right zeros.
Transformation constant_map(const ChainPair& pair, int a);

// Fix(alpha) = {x : x alpha = x}, ascending. Always a subset of the range.
std::vector<int> fixpoints(const Transformation& alpha);

bool is_idempotent(const Transformation& alpha);

// The three-valued cut map with block-convex middle part:
//   (<-A) |-> a,   A |-> b,   (A->) |-> c
// for A a convex subset of `block` and range elements with either
// a <= b < block < c or a < block < b <= c.
Transformation omega_three(const ChainPair& pair, const GapBlock& block,
                           const std::vector<int>& A, int a, int b, int c);

// Two-valued cut maps anchored at the extremal gap blocks:
//   omega_low:   L |-> a, (L->) |-> b    (L lower-convex in the block below X')
//   omega_high:  (<-U) |-> a, U |-> b    (U upper-convex in the block above X')
Transformation omega_low(const ChainPair& pair, const std::vector<int>& L,
                         int a, int b);
Transformation omega_high(const ChainPair& pair, const std::vector<int>& U,
                          int a, int b);

// The restriction table alpha|_{X'} as (x, x alpha) pairs in range order.
std::vector<std::pair<int, int>> restrict_to_range(const Transformation& alpha);

}  // namespace ordsemi

#endif  // ORDSEMI_TRANSFORMATION_HPP
