#include "ordsemi/structures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ordsemi {

AdjustedChain adjusted_chain(const ChainPair& pair) {
  const auto blocks = gap_blocks(pair);
  const auto& range = pair.range();
  AdjustedChain out;
  out.nodes.reserve(range.size() + blocks.size());
  std::size_t bi = 0;
  for (std::size_t slot = 0; slot <= range.size(); ++slot) {
    if (bi < blocks.size() && blocks[bi].position == static_cast<int>(slot)) {
      out.nodes.emplace_back(blocks[bi++]);
    }
    if (slot < range.size()) {
      out.nodes.emplace_back(range[slot]);
    }
  }
  return out;
}

PartialGraph partial_graph(const Transformation& alpha) {
  PartialGraph g;
  g.upper = alpha.pair().range();
  g.lower = alpha.image();
  std::sort(g.lower.begin(), g.lower.end());
  g.lower.erase(std::unique(g.lower.begin(), g.lower.end()), g.lower.end());
  g.edges.reserve(g.upper.size());
  for (int x : g.upper) {
    g.edges.emplace_back(x, alpha.apply(x));
  }
  return g;
}

int PartialGraph::components() const {
  // Vertices 0..|upper|-1 are upper, |upper|.. are lower.
  const int nu = static_cast<int>(upper.size());
  const int nl = static_cast<int>(lower.size());
  std::vector<int> parent(static_cast<std::size_t>(nu + nl));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      v = parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    }
    return v;
  };
  for (const auto& [x, y] : edges) {
    const int u = static_cast<int>(
        std::lower_bound(upper.begin(), upper.end(), x) - upper.begin());
    const int l = nu + static_cast<int>(std::lower_bound(lower.begin(),
                                                         lower.end(), y) -
                                        lower.begin());
    parent[static_cast<std::size_t>(find(u))] = find(l);
  }
  int count = 0;
  for (int v = 0; v < nu + nl; ++v) {
    if (find(v) == v) ++count;
  }
  return count;
}

std::vector<int> PartialGraph::edge_targets() const {
  std::vector<int> targets;
  targets.reserve(edges.size());
  for (const auto& [x, y] : edges) {
    targets.push_back(static_cast<int>(
        std::lower_bound(lower.begin(), lower.end(), y) - lower.begin()));
  }
  return targets;
}

namespace {

std::vector<int> range_set_of(const Transformation& alpha) {
  std::vector<int> ran = alpha.image();
  std::sort(ran.begin(), ran.end());
  ran.erase(std::unique(ran.begin(), ran.end()), ran.end());
  return ran;
}

std::vector<int> restriction_of(const Transformation& alpha) {
  std::vector<int> r;
  r.reserve(alpha.pair().range().size());
  for (int x : alpha.pair().range()) r.push_back(alpha.apply(x));
  return r;
}

}  // namespace

bool k_equivalent(const Transformation& alpha, const Transformation& beta) {
  if (alpha.pair() != beta.pair()) {
    throw std::invalid_argument("k_equivalent: transformations over different pairs");
  }
  return restriction_of(alpha) == restriction_of(beta) &&
         range_set_of(alpha) == range_set_of(beta);
}

KClassPartition k_classes(const ChainPair& pair, std::uint64_t cap) {
  const auto elements = enumerate_top(pair, cap);
  KClassPartition partition{pair, {}};
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto key = std::make_pair(restriction_of(elements[i]), range_set_of(elements[i]));
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, partition.classes.size());
      partition.classes.push_back(
          KClass{{static_cast<int>(i)}, key.first, key.second});
    } else {
      partition.classes[it->second].members.push_back(static_cast<int>(i));
    }
  }
  // Enumeration is scanned in order, so classes are already sorted by their
  // smallest member.
  return partition;
}

const char* to_string(LambdaShape shape) {
  switch (shape) {
    case LambdaShape::lambda1: return "lambda1";
    case LambdaShape::lambda2: return "lambda2";
    case LambdaShape::lambda3: return "lambda3";
    case LambdaShape::lambda4: return "lambda4";
    case LambdaShape::lambda5: return "lambda5";
  }
  return "?";
}

LambdaShape classify_lambda(const Transformation& alpha) {
  const auto& range = alpha.pair().range();
  if (range.size() != 2) {
    throw std::invalid_argument("classify_lambda: |range| must be 2, got " +
                                std::to_string(range.size()));
  }
  if (!is_order_preserving(alpha)) {
    throw std::invalid_argument("classify_lambda: map is not order-preserving");
  }
  const int p = range[0];
  const int q = range[1];
  const auto ran = range_set_of(alpha);
  if (ran.size() == 1) {
    return ran[0] == p ? LambdaShape::lambda1 : LambdaShape::lambda2;
  }
  const int pa = alpha.apply(p);
  const int qa = alpha.apply(q);
  if (pa == p && qa == q) return LambdaShape::lambda3;
  if (pa == p && qa == p) return LambdaShape::lambda4;
  return LambdaShape::lambda5;  // pa == qa == q
}

LambdaShape classify_lambda_class(const ChainPair& pair, const KClass& cls) {
  if (pair.range().size() != 2) {
    throw std::invalid_argument("classify_lambda_class: |range| must be 2");
  }
  const int p = pair.range()[0];
  const int q = pair.range()[1];
  if (cls.range_set.size() == 1) {
    return cls.range_set[0] == p ? LambdaShape::lambda1 : LambdaShape::lambda2;
  }
  const int pa = cls.restriction[0];
  const int qa = cls.restriction[1];
  if (pa == p && qa == q) return LambdaShape::lambda3;
  if (pa == p && qa == p) return LambdaShape::lambda4;
  return LambdaShape::lambda5;
}

std::array<int, 5> lambda_class_sizes(const ChainPair& pair) {
  if (pair.range().size() != 2) {
    throw std::invalid_argument("lambda_class_sizes: |range| must be 2, got " +
                                std::to_string(pair.range().size()));
  }
  const auto sig = gap_signature(pair);
  return {1, 1, sig.gaps[1] + 1, sig.gaps[2], sig.gaps[0]};
}

MultTableReport lambda_mult_table_check(const ChainPair& pair,
                                        std::uint64_t cap) {
  using L = LambdaShape;
  // Rows index the shape of alpha, columns the shape of beta.
  static constexpr L kTable[5][5] = {
      {L::lambda1, L::lambda2, L::lambda1, L::lambda1, L::lambda2},
      {L::lambda1, L::lambda2, L::lambda2, L::lambda1, L::lambda2},
      {L::lambda1, L::lambda2, L::lambda3, L::lambda1, L::lambda2},
      {L::lambda1, L::lambda2, L::lambda4, L::lambda1, L::lambda2},
      {L::lambda1, L::lambda2, L::lambda5, L::lambda1, L::lambda2},
  };

  const auto elements = enumerate_top(pair, cap);
  std::vector<L> tags;
  tags.reserve(elements.size());
  for (const auto& e : elements) tags.push_back(classify_lambda(e));

  MultTableReport report;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      ++report.pairs_checked;
      const Transformation product = compose(elements[i], elements[j]);
      const L expected =
          kTable[static_cast<int>(tags[i])][static_cast<int>(tags[j])];
      const L actual = classify_lambda(product);
      if (actual != expected) {
        report.violations.push_back(
            {static_cast<int>(i), static_cast<int>(j),
             std::string("product has shape ") + to_string(actual) +
                 ", table predicts " + to_string(expected)});
      }
      if (tags[j] == L::lambda3 && product != elements[i]) {
        report.violations.push_back(
            {static_cast<int>(i), static_cast<int>(j),
             "product with a lambda3 element differs from alpha element-wise"});
      }
    }
  }
  return report;
}

}  // namespace ordsemi
