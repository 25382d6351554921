#ifndef ORDSEMI_CHAIN_HPP
#define ORDSEMI_CHAIN_HPP

#include <optional>
#include <vector>

namespace ordsemi {

enum class Orientation { order, anti };

// A finite chain. Elements are canonically the indices 0 .. size-1 with the
// natural order; arbitrary labels are normalized away at the CLI boundary.
class Chain {
 public:
  explicit Chain(int size);

  int size() const noexcept { return size_; }
  bool contains(int x) const noexcept { return 0 <= x && x < size_; }

  bool operator==(const Chain&) const = default;

 private:
  int size_;
};

// A chain X together with a restricted range X' (strictly increasing list of
// indices into X). Every transformation in the artifact maps X into X'.
class ChainPair {
 public:
  ChainPair(int size, std::vector<int> range);

  int size() const noexcept { return chain_.size(); }
  const Chain& chain() const noexcept { return chain_; }
  const std::vector<int>& range() const noexcept { return range_; }

  bool in_range(int x) const;
  // Position of x within the range list, or -1 when x is not a range element.
  int range_position(int x) const;

  bool operator==(const ChainPair&) const = default;

 private:
  Chain chain_;
  std::vector<int> range_;
};

// Cardinalities of the maximal runs of X\X' before, between and after the
// range elements. Length |range|+1; zero entries are kept so that signatures
// of equal-sized ranges are always comparable slot by slot.
struct GapSignature {
  std::vector<int> gaps;

  GapSignature reversed() const;

  bool operator==(const GapSignature&) const = default;
};

// A maximal nonempty run [lo, hi] of X\X'. `position` is the gap slot the
// block occupies in the signature (0 = before the first range element).
struct GapBlock {
  int lo;
  int hi;
  int position;

  int count() const noexcept { return hi - lo + 1; }
  bool contains(int x) const noexcept { return lo <= x && x <= hi; }

  bool operator==(const GapBlock&) const = default;
};

GapSignature gap_signature(const ChainPair& pair);

// The nonempty gap blocks in chain order. Their cardinalities are exactly the
// nonzero entries of gap_signature, order preserved.
std::vector<GapBlock> gap_blocks(const ChainPair& pair);

// The unique order-isomorphism (orientation == order) or anti-isomorphism
// (orientation == anti) theta : X -> Y with (X')theta = Y', when one exists.
// Returned as a vector v with v[x] = x theta.
std::optional<std::vector<int>> pair_isomorphism(const ChainPair& a,
                                                 const ChainPair& b,
                                                 Orientation orientation);

// Convexity within the whole chain: no element outside `subset` lies strictly
// between two members. `subset` must be a nonempty set of chain elements.
bool is_convex(const ChainPair& pair, const std::vector<int>& subset);

// Convexity relative to a gap block: every element of the block outside
// `subset` is above (lower) / below (upper) every member. `subset` must be a
// nonempty subset of the block.
bool is_lower_convex(const GapBlock& block, const std::vector<int>& subset);
bool is_upper_convex(const GapBlock& block, const std::vector<int>& subset);

}  // namespace ordsemi

#endif  // ORDSEMI_CHAIN_HPP
