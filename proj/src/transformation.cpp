#include "ordsemi/transformation.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "ordsemi/errors.hpp"

namespace ordsemi {

Transformation::Transformation(ChainPair pair, std::vector<int> image)
    : pair_(std::move(pair)), image_(std::move(image)) {
  if (static_cast<int>(image_.size()) != pair_.size()) {
    throw std::invalid_argument(
        "image array has length " + std::to_string(image_.size()) +
        ", expected chain size " + std::to_string(pair_.size()));
  }
  for (int x = 0; x < pair_.size(); ++x) {
    if (!pair_.in_range(image_[static_cast<std::size_t>(x)])) {
      throw std::invalid_argument(
          "image value " + std::to_string(image_[static_cast<std::size_t>(x)]) +
          " at position " + std::to_string(x) + " is not a range element");
    }
  }
}

bool is_order_preserving(const Transformation& alpha) {
  const auto& img = alpha.image();
  for (std::size_t x = 1; x < img.size(); ++x) {
    if (img[x - 1] > img[x]) return false;
  }
  return true;
}

Transformation compose(const Transformation& alpha, const Transformation& beta) {
  if (alpha.pair() != beta.pair()) {
    throw std::invalid_argument("compose: transformations over different pairs");
  }
  std::vector<int> image(alpha.image().size());
  for (std::size_t x = 0; x < image.size(); ++x) {
    image[x] = beta.image()[static_cast<std::size_t>(alpha.image()[x])];
  }
  return Transformation(alpha.pair(), std::move(image));
}

std::uint64_t count_top(const ChainPair& pair) {
  // Weakly monotone maps from an n-chain into an m-chain are multisets of
  // size n over m values: C(n + m - 1, n).
  const std::uint64_t n = static_cast<std::uint64_t>(pair.size());
  const std::uint64_t m = pair.range().size();
  const std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  // C(n + m - 1, m - 1): multiply by (n + i)/i for i = 1 .. m-1.
  for (std::uint64_t i = 1; i < m; ++i) {
    if (result > kMax / (n + i)) return kMax;  // saturate
    result = result * (n + i) / i;
  }
  return result;
}

std::vector<Transformation> enumerate_top(const ChainPair& pair,
                                          std::uint64_t cap) {
  const std::uint64_t total = count_top(pair);
  if (total > cap) throw CapExceeded(total, cap);

  const auto& range = pair.range();
  const int n = pair.size();
  const int m = static_cast<int>(range.size());

  std::vector<Transformation> out;
  out.reserve(static_cast<std::size_t>(total));

  // Odometer over weakly increasing range-position words; since the range is
  // sorted, this visits image arrays in lexicographic order.
  std::vector<int> pos(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      image[static_cast<std::size_t>(x)] = range[static_cast<std::size_t>(pos[static_cast<std::size_t>(x)])];
    }
    out.emplace_back(pair, std::move(image));

    int x = n - 1;
    while (x >= 0 && pos[static_cast<std::size_t>(x)] == m - 1) --x;
    if (x < 0) break;
    const int next = pos[static_cast<std::size_t>(x)] + 1;
    for (int y = x; y < n; ++y) pos[static_cast<std::size_t>(y)] = next;
  }
  return out;
}

Transformation constant_map(const ChainPair& pair, int a) {
  if (!pair.in_range(a)) {
    throw std::invalid_argument("constant_map: " + std::to_string(a) +
                                " is not a range element");
  }
  return Transformation(pair,
                        std::vector<int>(static_cast<std::size_t>(pair.size()), a));
}

std::vector<int> fixpoints(const Transformation& alpha) {
  std::vector<int> fix;
  for (int x = 0; x < alpha.pair().size(); ++x) {
    if (alpha.apply(x) == x) fix.push_back(x);
  }
  return fix;
}

bool is_idempotent(const Transformation& alpha) {
  for (int x = 0; x < alpha.pair().size(); ++x) {
    if (alpha.apply(alpha.apply(x)) != alpha.apply(x)) return false;
  }
  return true;
}

namespace {

void require_range_element(const ChainPair& pair, int a, const char* what) {
  if (!pair.in_range(a)) {
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(a) +
                                " is not a range element");
  }
}

// Sorted nonempty subset of `block`, already validated convex where needed.
std::vector<int> sorted_subset_of_block(const GapBlock& block,
                                        const std::vector<int>& subset,
                                        const char* what) {
  if (subset.empty()) {
    throw std::invalid_argument(std::string(what) + ": subset must be nonempty");
  }
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!block.contains(s.front()) || !block.contains(s.back())) {
    throw std::invalid_argument(std::string(what) +
                                ": subset is not contained in the block");
  }
  return s;
}

}  // namespace

Transformation omega_three(const ChainPair& pair, const GapBlock& block,
                           const std::vector<int>& A, int a, int b, int c) {
  require_range_element(pair, a, "omega_three");
  require_range_element(pair, b, "omega_three");
  require_range_element(pair, c, "omega_three");
  const auto s = sorted_subset_of_block(block, A, "omega_three");
  if (s.back() - s.front() + 1 != static_cast<int>(s.size())) {
    throw std::invalid_argument("omega_three: A is not convex");
  }
  const bool below = a <= b && b < block.lo && block.hi < c;
  const bool above = a < block.lo && block.hi < b && b <= c;
  if (!below && !above) {
    throw std::invalid_argument(
        "omega_three: need a <= b < block < c or a < block < b <= c");
  }
  std::vector<int> image(static_cast<std::size_t>(pair.size()));
  for (int x = 0; x < pair.size(); ++x) {
    image[static_cast<std::size_t>(x)] = x < s.front() ? a : (x <= s.back() ? b : c);
  }
  return Transformation(pair, std::move(image));
}

Transformation omega_low(const ChainPair& pair, const std::vector<int>& L,
                         int a, int b) {
  const auto blocks = gap_blocks(pair);
  if (blocks.empty() || blocks.front().position != 0) {
    throw std::invalid_argument(
        "omega_low: no gap block below the range exists");
  }
  const GapBlock& block = blocks.front();
  require_range_element(pair, a, "omega_low");
  require_range_element(pair, b, "omega_low");
  if (a >= b) {
    throw std::invalid_argument("omega_low: need a < b");
  }
  const auto s = sorted_subset_of_block(block, L, "omega_low");
  if (!is_lower_convex(block, s)) {
    throw std::invalid_argument("omega_low: L is not lower-convex in the block");
  }
  std::vector<int> image(static_cast<std::size_t>(pair.size()));
  for (int x = 0; x < pair.size(); ++x) {
    image[static_cast<std::size_t>(x)] = x <= s.back() ? a : b;
  }
  return Transformation(pair, std::move(image));
}

Transformation omega_high(const ChainPair& pair, const std::vector<int>& U,
                          int a, int b) {
  const auto blocks = gap_blocks(pair);
  const int last_slot = static_cast<int>(pair.range().size());
  if (blocks.empty() || blocks.back().position != last_slot) {
    throw std::invalid_argument(
        "omega_high: no gap block above the range exists");
  }
  const GapBlock& block = blocks.back();
  require_range_element(pair, a, "omega_high");
  require_range_element(pair, b, "omega_high");
  if (a >= b) {
    throw std::invalid_argument("omega_high: need a < b");
  }
  const auto s = sorted_subset_of_block(block, U, "omega_high");
  if (!is_upper_convex(block, s)) {
    throw std::invalid_argument("omega_high: U is not upper-convex in the block");
  }
  std::vector<int> image(static_cast<std::size_t>(pair.size()));
  for (int x = 0; x < pair.size(); ++x) {
    image[static_cast<std::size_t>(x)] = x < s.front() ? a : b;
  }
  return Transformation(pair, std::move(image));
}

std::vector<std::pair<int, int>> restrict_to_range(const Transformation& alpha) {
  std::vector<std::pair<int, int>> table;
  table.reserve(alpha.pair().range().size());
  for (int x : alpha.pair().range()) {
    table.emplace_back(x, alpha.apply(x));
  }
  return table;
}

}  // namespace ordsemi
