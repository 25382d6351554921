#include "ordsemi/iso.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "ordsemi/errors.hpp"

namespace ordsemi {

namespace {

// Joint iterative-refinement fingerprints over both tables. Elements get
// colors comparable across A and B; isomorphisms can only map color to color.
// Signature of an element: (current color, color of its square, sorted
// multiset over j of (color j, color of i*j, color of j*i)), refined until
// the partition stops splitting.
struct Refinement {
  std::vector<int> color_a;
  std::vector<int> color_b;
  bool multisets_match = true;
};

Refinement refine_colors(const CayleyTable& A, const CayleyTable& B) {
  const int n = A.order;
  Refinement r;
  r.color_a.resize(static_cast<std::size_t>(n));
  r.color_b.resize(static_cast<std::size_t>(n));

  auto is_right_zero = [](const CayleyTable& t, int j) {
    for (int i = 0; i < t.order; ++i) {
      if (t.at(i, j) != j) return false;
    }
    return true;
  };

  {
    std::map<std::pair<bool, bool>, int> ids;
    auto seed = [&](const CayleyTable& t, std::vector<int>& color) {
      for (int i = 0; i < n; ++i) {
        auto key = std::make_pair(t.at(i, i) == i, is_right_zero(t, i));
        auto [it, inserted] = ids.emplace(key, static_cast<int>(ids.size()));
        color[static_cast<std::size_t>(i)] = it->second;
        (void)inserted;
      }
    };
    seed(A, r.color_a);
    seed(B, r.color_b);
  }

  using Signature = std::tuple<int, int, std::vector<std::tuple<int, int, int>>>;
  int distinct = 0;
  for (;;) {
    std::map<Signature, int> ids;
    auto signature = [n](const CayleyTable& t, const std::vector<int>& color,
                         int i) {
      std::vector<std::tuple<int, int, int>> profile;
      profile.reserve(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        profile.emplace_back(color[static_cast<std::size_t>(j)],
                             color[static_cast<std::size_t>(t.at(i, j))],
                             color[static_cast<std::size_t>(t.at(j, i))]);
      }
      std::sort(profile.begin(), profile.end());
      return Signature{color[static_cast<std::size_t>(i)],
                       color[static_cast<std::size_t>(t.at(i, i))],
                       std::move(profile)};
    };
    std::vector<Signature> sig_a, sig_b;
    sig_a.reserve(static_cast<std::size_t>(n));
    sig_b.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sig_a.push_back(signature(A, r.color_a, i));
    for (int i = 0; i < n; ++i) sig_b.push_back(signature(B, r.color_b, i));
    for (const auto& s : sig_a) ids.emplace(s, 0);
    for (const auto& s : sig_b) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int i = 0; i < n; ++i) {
      r.color_a[static_cast<std::size_t>(i)] = ids.at(sig_a[static_cast<std::size_t>(i)]);
      r.color_b[static_cast<std::size_t>(i)] = ids.at(sig_b[static_cast<std::size_t>(i)]);
    }
    if (next == distinct) break;  // partition stable
    distinct = next;
  }

  auto sorted_a = r.color_a;
  auto sorted_b = r.color_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  r.multisets_match = sorted_a == sorted_b;
  return r;
}

class IsoSearcher {
 public:
  IsoSearcher(const CayleyTable& A, const CayleyTable& B,
              const IsoSearchOptions& options)
      : a_(A), b_(B), options_(options), n_(A.order) {
    map_ab_.assign(static_cast<std::size_t>(n_), -1);
    map_ba_.assign(static_cast<std::size_t>(n_), -1);
  }

  // Invokes on_solution for each isomorphism in lexicographic order; the
  // callback returns true to keep searching. Throws BudgetExceeded.
  template <typename Callback>
  void run(Callback&& on_solution) {
    if (a_.order != b_.order) return;
    if (options_.use_refinement) {
      refinement_ = refine_colors(a_, b_);
      if (!refinement_.multisets_match) return;
    }
    dfs(std::forward<Callback>(on_solution));
  }

 private:
  template <typename Callback>
  bool dfs(Callback&& on_solution) {  // returns true to stop the search
    int k = -1;
    for (int i = 0; i < n_; ++i) {
      if (map_ab_[static_cast<std::size_t>(i)] < 0) {
        k = i;
        break;
      }
    }
    if (k < 0) {
      return !on_solution(map_ab_);
    }
    for (int v = 0; v < n_; ++v) {
      if (map_ba_[static_cast<std::size_t>(v)] >= 0) continue;
      if (options_.use_refinement &&
          refinement_.color_a[static_cast<std::size_t>(k)] !=
              refinement_.color_b[static_cast<std::size_t>(v)]) {
        continue;
      }
      if (++nodes_ > options_.node_budget) {
        throw BudgetExceeded(options_.node_budget);
      }
      const std::size_t mark = trail_.size();
      assign(k, v);
      if (propagate(mark) && dfs(on_solution)) return true;
      undo(mark);
    }
    return false;
  }

  void assign(int i, int v) {
    map_ab_[static_cast<std::size_t>(i)] = v;
    map_ba_[static_cast<std::size_t>(v)] = i;
    trail_.push_back(i);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int i = trail_.back();
      trail_.pop_back();
      map_ba_[static_cast<std::size_t>(map_ab_[static_cast<std::size_t>(i)])] = -1;
      map_ab_[static_cast<std::size_t>(i)] = -1;
    }
  }

  // Forward checking: every product involving two assigned elements forces
  // the image of the product; contradictions prune the branch.
  bool propagate(std::size_t from) {
    for (std::size_t p = from; p < trail_.size(); ++p) {
      const int i = trail_[p];
      for (std::size_t q = 0; q <= p; ++q) {
        const int j = trail_[q];
        if (!check_product(i, j) || !check_product(j, i)) return false;
      }
    }
    return true;
  }

  bool check_product(int i, int j) {
    const int p = a_.at(i, j);
    const int q = b_.at(map_ab_[static_cast<std::size_t>(i)],
                        map_ab_[static_cast<std::size_t>(j)]);
    const int mapped = map_ab_[static_cast<std::size_t>(p)];
    if (mapped >= 0) return mapped == q;
    if (map_ba_[static_cast<std::size_t>(q)] >= 0) return false;
    assign(p, q);
    return true;
  }

  const CayleyTable& a_;
  const CayleyTable& b_;
  IsoSearchOptions options_;
  int n_;
  Refinement refinement_;
  std::vector<int> map_ab_;
  std::vector<int> map_ba_;
  std::vector<int> trail_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<SemigroupIso> find_iso(const CayleyTable& A, const CayleyTable& B,
                                     const IsoSearchOptions& options) {
  std::optional<SemigroupIso> result;
  IsoSearcher searcher(A, B, options);
  searcher.run([&result](const std::vector<int>& mapping) {
    result = SemigroupIso{mapping};
    return false;  // first (lexicographically least) witness only
  });
  return result;
}

std::vector<SemigroupIso> find_all_isos(const CayleyTable& A,
                                        const CayleyTable& B,
                                        const IsoSearchOptions& options,
                                        std::size_t max_count) {
  std::vector<SemigroupIso> all;
  IsoSearcher searcher(A, B, options);
  searcher.run([&all, max_count](const std::vector<int>& mapping) {
    all.push_back(SemigroupIso{mapping});
    return all.size() < max_count;
  });
  return all;
}

bool verify_iso(const CayleyTable& A, const CayleyTable& B,
                const SemigroupIso& m) {
  const int n = A.order;
  if (B.order != n || static_cast<int>(m.mapping.size()) != n) return false;
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int v : m.mapping) {
    if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m.mapping[static_cast<std::size_t>(A.at(i, j))] !=
          B.at(m.mapping[static_cast<std::size_t>(i)],
               m.mapping[static_cast<std::size_t>(j)])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ordsemi
