#include "ordsemi/cayley.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace ordsemi {

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

void verify_associativity(const CayleyTable& t) {
  const int n = t.order;
  auto check = [&t](int i, int j, int k) {
    if (t.at(t.at(i, j), k) != t.at(i, t.at(j, k))) {
      throw std::logic_error("cayley table failed associativity check");
    }
  };
  if (n <= 200) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) check(i, j, k);
  } else {
    std::mt19937 rng(0xC0FFEE);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < 1'000'000; ++s) check(pick(rng), pick(rng), pick(rng));
  }
}

}  // namespace

int CayleyTable::constant_index(int a) const {
  for (int i = 0; i < order; ++i) {
    if (constant[static_cast<std::size_t>(i)] && elements[static_cast<std::size_t>(i)].apply(0) == a) {
      return i;
    }
  }
  throw std::invalid_argument("constant_index: no constant map at " +
                              std::to_string(a));
}

CayleyTable build_cayley(const ChainPair& pair, std::uint64_t cap) {
  CayleyTable t{pair, 0, enumerate_top(pair, cap), {}, {}, {}, {}, {}};
  t.order = static_cast<int>(t.elements.size());
  const std::size_t n = t.elements.size();
  const std::size_t chain_size = static_cast<std::size_t>(pair.size());

  std::unordered_map<std::vector<int>, int, ImageHash> index;
  index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) {
    index.emplace(t.elements[i].image(), static_cast<int>(i));
  }

  t.table.resize(n * n);
  std::vector<int> scratch(chain_size);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = t.elements[i].image();
    for (std::size_t j = 0; j < n; ++j) {
      const auto& b = t.elements[j].image();
      for (std::size_t x = 0; x < chain_size; ++x) {
        scratch[x] = b[static_cast<std::size_t>(a[x])];
      }
      const auto it = index.find(scratch);
      if (it == index.end()) {
        throw std::logic_error("composition left the enumerated semigroup");
      }
      t.table[i * n + j] = it->second;
    }
  }

  t.idempotent.resize(n);
  t.constant.resize(n);
  t.range_sets.resize(n);
  t.restrictions.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& img = t.elements[i].image();
    t.idempotent[i] = t.table[i * n + i] == static_cast<int>(i);
    t.constant[i] =
        std::all_of(img.begin(), img.end(), [&img](int v) { return v == img[0]; });
    std::vector<int> ran = img;
    std::sort(ran.begin(), ran.end());
    ran.erase(std::unique(ran.begin(), ran.end()), ran.end());
    t.range_sets[i] = std::move(ran);
    auto& restr = t.restrictions[i];
    restr.reserve(pair.range().size());
    for (int x : pair.range()) restr.push_back(img[static_cast<std::size_t>(x)]);
  }

  verify_associativity(t);
  return t;
}

}  // namespace ordsemi
