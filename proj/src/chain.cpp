#include "ordsemi/chain.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ordsemi {

namespace {

// Sorted, deduplicated copy; rejects elements outside the chain.
std::vector<int> checked_subset(const Chain& chain, const std::vector<int>& subset,
                                const char* what) {
  if (subset.empty()) {
    throw std::invalid_argument(std::string(what) + ": subset must be nonempty");
  }
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int x : sorted) {
    if (!chain.contains(x)) {
      throw std::invalid_argument(std::string(what) + ": element " +
                                  std::to_string(x) + " outside chain of size " +
                                  std::to_string(chain.size()));
    }
  }
  return sorted;
}

}  // namespace

Chain::Chain(int size) : size_(size) {
  if (size < 1) {
    throw std::invalid_argument("chain size must be >= 1, got " +
                                std::to_string(size));
  }
}

ChainPair::ChainPair(int size, std::vector<int> range)
    : chain_(size), range_(std::move(range)) {
  if (range_.empty()) {
    throw std::invalid_argument("range must be nonempty");
  }
  for (std::size_t i = 0; i < range_.size(); ++i) {
    if (!chain_.contains(range_[i])) {
      throw std::invalid_argument("range index " + std::to_string(range_[i]) +
                                  " out of bounds for chain of size " +
                                  std::to_string(size));
    }
    if (i > 0 && range_[i - 1] >= range_[i]) {
      throw std::invalid_argument("range must be strictly increasing");
    }
  }
}

bool ChainPair::in_range(int x) const {
  return std::binary_search(range_.begin(), range_.end(), x);
}

int ChainPair::range_position(int x) const {
  auto it = std::lower_bound(range_.begin(), range_.end(), x);
  if (it == range_.end() || *it != x) return -1;
  return static_cast<int>(it - range_.begin());
}

GapSignature GapSignature::reversed() const {
  GapSignature out{gaps};
  std::reverse(out.gaps.begin(), out.gaps.end());
  return out;
}

GapSignature gap_signature(const ChainPair& pair) {
  const auto& range = pair.range();
  GapSignature sig;
  sig.gaps.reserve(range.size() + 1);
  sig.gaps.push_back(range.front());
  for (std::size_t i = 1; i < range.size(); ++i) {
    sig.gaps.push_back(range[i] - range[i - 1] - 1);
  }
  sig.gaps.push_back(pair.size() - 1 - range.back());
  return sig;
}

std::vector<GapBlock> gap_blocks(const ChainPair& pair) {
  const GapSignature sig = gap_signature(pair);
  const auto& range = pair.range();
  std::vector<GapBlock> blocks;
  for (std::size_t slot = 0; slot < sig.gaps.size(); ++slot) {
    if (sig.gaps[slot] == 0) continue;
    const int lo = slot == 0 ? 0 : range[slot - 1] + 1;
    blocks.push_back(GapBlock{lo, lo + sig.gaps[slot] - 1, static_cast<int>(slot)});
  }
  return blocks;
}

std::optional<std::vector<int>> pair_isomorphism(const ChainPair& a,
                                                 const ChainPair& b,
                                                 Orientation orientation) {
  if (a.size() != b.size()) return std::nullopt;
  const GapSignature sig_a = gap_signature(a);
  const GapSignature sig_b = gap_signature(b);
  const int n = a.size();
  std::vector<int> theta(n);
  if (orientation == Orientation::order) {
    // The only order-isomorphism between equal finite chains is the identity.
    if (sig_a != sig_b) return std::nullopt;
    for (int x = 0; x < n; ++x) theta[x] = x;
  } else {
    if (sig_a != sig_b.reversed()) return std::nullopt;
    for (int x = 0; x < n; ++x) theta[x] = n - 1 - x;
  }
  return theta;
}

bool is_convex(const ChainPair& pair, const std::vector<int>& subset) {
  const std::vector<int> s = checked_subset(pair.chain(), subset, "is_convex");
  return s.back() - s.front() + 1 == static_cast<int>(s.size());
}

namespace {

std::vector<int> checked_block_subset(const GapBlock& block,
                                      const std::vector<int>& subset,
                                      const char* what) {
  if (subset.empty()) {
    throw std::invalid_argument(std::string(what) + ": subset must be nonempty");
  }
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int x : sorted) {
    if (!block.contains(x)) {
      throw std::invalid_argument(std::string(what) + ": element " +
                                  std::to_string(x) + " outside block [" +
                                  std::to_string(block.lo) + ", " +
                                  std::to_string(block.hi) + "]");
    }
  }
  return sorted;
}

}  // namespace

bool is_lower_convex(const GapBlock& block, const std::vector<int>& subset) {
  const auto s = checked_block_subset(block, subset, "is_lower_convex");
  // Every block element outside the subset must lie above every member:
  // the subset is a prefix of the block.
  return s.front() == block.lo &&
         s.back() - s.front() + 1 == static_cast<int>(s.size());
}

bool is_upper_convex(const GapBlock& block, const std::vector<int>& subset) {
  const auto s = checked_block_subset(block, subset, "is_upper_convex");
  return s.back() == block.hi &&
         s.back() - s.front() + 1 == static_cast<int>(s.size());
}

}  // namespace ordsemi
