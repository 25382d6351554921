#include "ordsemi/induced.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ordsemi/structures.hpp"

namespace ordsemi {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

}  // namespace

int RangeBijection::apply(int a) const {
  const auto it = std::lower_bound(domain.begin(), domain.end(), a);
  if (it == domain.end() || *it != a) {
    throw std::invalid_argument("range bijection: " + std::to_string(a) +
                                " is not in the domain");
  }
  return image[static_cast<std::size_t>(it - domain.begin())];
}

RangeBijection extract_theta(const CayleyTable& A, const CayleyTable& B,
                             const SemigroupIso& m) {
  RangeBijection theta;
  theta.domain = A.pair.range();
  theta.image.reserve(theta.domain.size());
  for (int a : theta.domain) {
    const int ia = A.constant_index(a);
    const int ib = m.mapping[static_cast<std::size_t>(ia)];
    if (!B.constant[static_cast<std::size_t>(ib)]) {
      throw std::logic_error(
          "extract_theta: a constant map is sent to a non-constant; "
          "the mapping cannot be a verified isomorphism");
    }
    theta.image.push_back(B.elements[static_cast<std::size_t>(ib)].apply(0));
  }

  // Bijectivity onto Y'.
  std::vector<int> sorted = theta.image;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted != B.pair.range()) {
    throw std::logic_error(
        "extract_theta: induced map is not a bijection onto the target range");
  }

  if (theta.domain.size() == 1) {
    theta.orientation = Orientation::order;
    return theta;
  }
  const bool increasing =
      std::adjacent_find(theta.image.begin(), theta.image.end(),
                         [](int x, int y) { return x >= y; }) == theta.image.end();
  if (increasing) {
    theta.orientation = Orientation::order;
    return theta;
  }
  const bool decreasing =
      std::adjacent_find(theta.image.begin(), theta.image.end(),
                         [](int x, int y) { return x <= y; }) == theta.image.end();
  if (decreasing) {
    theta.orientation = Orientation::anti;
    return theta;
  }
  throw std::logic_error(
      "extract_theta: induced map is neither monotone nor anti-monotone");
}

AdjustedChainIso extend_theta_hat(const CayleyTable& A, const CayleyTable& B,
                                  const SemigroupIso& m) {
  if (A.pair.range().size() < 2 || B.pair.range().size() < 2) {
    throw std::invalid_argument(
        "extend_theta_hat: both ranges must have at least 2 elements");
  }
  const RangeBijection theta = extract_theta(A, B, m);

  AdjustedChainIso out;
  out.orientation = theta.orientation;
  for (std::size_t i = 0; i < theta.domain.size(); ++i) {
    out.range_map.emplace_back(theta.domain[i], theta.image[i]);
  }

  // When theta is anti-monotone, normalize by reading B's slots mirrored:
  // slot i of A corresponds to slot |Y'| - i of B.
  const GapSignature sig_a = gap_signature(A.pair);
  const GapSignature sig_b = gap_signature(B.pair);
  const int slots = static_cast<int>(sig_a.gaps.size());
  auto partner_slot = [&](int slot) {
    return theta.orientation == Orientation::order ? slot : slots - 1 - slot;
  };
  for (int slot = 0; slot < slots; ++slot) {
    const int from = sig_a.gaps[static_cast<std::size_t>(slot)];
    const int to = sig_b.gaps[static_cast<std::size_t>(partner_slot(slot))];
    if (from != to) {
      std::ostringstream os;
      if (from > 0 && to == 0) {
        os << "extend_theta_hat: gap block in slot " << slot
           << " has no partner block";
      } else {
        os << "extend_theta_hat: gap cardinality mismatch in slot " << slot
           << ": " << from << " vs " << to;
      }
      throw std::logic_error(os.str());
    }
  }

  const auto blocks_a = gap_blocks(A.pair);
  const auto blocks_b = gap_blocks(B.pair);
  for (const GapBlock& block : blocks_a) {
    const int target_slot = partner_slot(block.position);
    const auto it =
        std::find_if(blocks_b.begin(), blocks_b.end(), [target_slot](const GapBlock& b) {
          return b.position == target_slot;
        });
    // Unreachable after the signature walk above, kept as a hard guarantee.
    if (it == blocks_b.end()) {
      throw std::logic_error("extend_theta_hat: partner block disappeared");
    }
    out.blocks.push_back({block, *it});
  }
  return out;
}

namespace {

// theta-image of a sorted subset of X', returned sorted.
std::vector<int> transport(const RangeBijection& theta, const std::vector<int>& set) {
  std::vector<int> out;
  out.reserve(set.size());
  for (int a : set) out.push_back(theta.apply(a));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PreservationReport check_preservation(const CayleyTable& A,
                                      const CayleyTable& B,
                                      const SemigroupIso& m) {
  const RangeBijection theta = extract_theta(A, B, m);
  PreservationReport report;
  report.elements_checked = A.order;

  for (int i = 0; i < A.order; ++i) {
    const int j = m.mapping[static_cast<std::size_t>(i)];
    const Transformation& alpha = A.elements[static_cast<std::size_t>(i)];
    const Transformation& beta = B.elements[static_cast<std::size_t>(j)];

    // Fixed points are always range elements, so theta applies.
    const std::vector<int> fix_a = transport(theta, fixpoints(alpha));
    const std::vector<int> fix_b = fixpoints(beta);
    if (fix_a != fix_b) {
      report.violations.push_back(
          {i, "fix", "transported {" + join(fix_a) + "} vs {" + join(fix_b) + "}"});
    }

    const std::vector<int> ran_a =
        transport(theta, A.range_sets[static_cast<std::size_t>(i)]);
    const std::vector<int>& ran_b = B.range_sets[static_cast<std::size_t>(j)];
    if (ran_a != ran_b) {
      report.violations.push_back(
          {i, "range",
           "transported {" + join(ran_a) + "} vs {" + join(ran_b) + "}"});
    }

    // X'-preimage transport for every value in ran alpha, including values
    // whose only preimages lie outside X' (both sides must then be empty).
    for (int a : A.range_sets[static_cast<std::size_t>(i)]) {
      std::vector<int> pre_a;
      for (int x : A.pair.range()) {
        if (alpha.apply(x) == a) pre_a.push_back(x);
      }
      const int a_bar = theta.apply(a);
      std::vector<int> pre_b;
      for (int y : B.pair.range()) {
        if (beta.apply(y) == a_bar) pre_b.push_back(y);
      }
      if (transport(theta, pre_a) != pre_b) {
        report.violations.push_back(
            {i, "preimage",
             "value " + std::to_string(a) + ": transported {" +
                 join(transport(theta, pre_a)) + "} vs {" + join(pre_b) + "}"});
      }
    }

    // Positional graph structure, mirrored when theta is anti-monotone.
    const PartialGraph ga = partial_graph(alpha);
    const PartialGraph gb = partial_graph(beta);
    const std::vector<int> ta = ga.edge_targets();
    const std::vector<int> tb = gb.edge_targets();
    bool graphs_match = ga.lower.size() == gb.lower.size() &&
                        ga.upper.size() == gb.upper.size();
    if (graphs_match) {
      const int nu = static_cast<int>(ga.upper.size());
      const int nl = static_cast<int>(ga.lower.size());
      for (int u = 0; u < nu && graphs_match; ++u) {
        const int expected =
            theta.orientation == Orientation::order
                ? tb[static_cast<std::size_t>(u)]
                : nl - 1 - tb[static_cast<std::size_t>(nu - 1 - u)];
        graphs_match = ta[static_cast<std::size_t>(u)] == expected;
      }
    }
    if (!graphs_match) {
      report.violations.push_back(
          {i, "graph", "partial graphs are not positionally isomorphic"});
    }
  }
  return report;
}

}  // namespace ordsemi
