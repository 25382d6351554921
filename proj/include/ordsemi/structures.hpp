#ifndef ORDSEMI_STRUCTURES_HPP
#define ORDSEMI_STRUCTURES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ordsemi/chain.hpp"
#include "ordsemi/transformation.hpp"

namespace ordsemi {

// The chain formed by X' together with the maximal gap blocks of X\X',
// in the order induced by X.
struct AdjustedChain {
  using Node = std::variant<int, GapBlock>;
  std::vector<Node> nodes;
};

AdjustedChain adjusted_chain(const ChainPair& pair);

// The ordered bipartite graph Gamma_alpha: upper vertices X', lower vertices
// ran alpha (over the whole domain), one edge x -> x alpha per upper vertex.
// Upper and lower vertices are distinct even when their labels coincide.
struct PartialGraph {
  std::vector<int> upper;
  std::vector<int> lower;
  std::vector<std::pair<int, int>> edges;  // (x, x alpha), x in X', range order

  // Weakly connected component count, computed by union-find. Always equals
  // |lower|: every component is the fan of upper vertices over one lower
  // vertex (possibly an empty fan).
  int components() const;

  // For each upper position, the position of its edge target in `lower`.
  // This is the positional structure used for graph comparisons.
  std::vector<int> edge_targets() const;
};

PartialGraph partial_graph(const Transformation& alpha);

// alpha K beta  iff  alpha|_{X'} = beta|_{X'} and ran alpha = ran beta.
// Ranges are taken over the whole domain, which makes K strictly finer than
// agreement on X' alone.
bool k_equivalent(const Transformation& alpha, const Transformation& beta);

struct KClass {
  std::vector<int> members;      // indices into the canonical enumeration
  std::vector<int> restriction;  // x alpha for x in X', range order
  std::vector<int> range_set;    // ran alpha, ascending
};

struct KClassPartition {
  ChainPair pair;
  std::vector<KClass> classes;  // ordered by smallest member index
};

KClassPartition k_classes(const ChainPair& pair,
                          std::uint64_t cap = kDefaultEnumerationCap);

// The five K-class shapes of T_OP(X, X') when |X'| = 2, with p < q the two
// range elements:
//   lambda1: constant p             lambda2: constant q
//   lambda3: p,q fixed, ran {p,q}
//   lambda4: p,q |-> p, ran {p,q}   lambda5: p,q |-> q, ran {p,q}
enum class LambdaShape { lambda1, lambda2, lambda3, lambda4, lambda5 };

const char* to_string(LambdaShape shape);

// Requires |range| = 2 and an order-preserving alpha.
LambdaShape classify_lambda(const Transformation& alpha);

// Same classification read off a K-class key (restriction plus range set).
LambdaShape classify_lambda_class(const ChainPair& pair, const KClass& cls);

// Class sizes (|K_l1|, ..., |K_l5|) = (1, 1, |M2|+1, |M3|, |M1|) computed
// from the gap signature alone. Requires |range| = 2.
std::array<int, 5> lambda_class_sizes(const ChainPair& pair);

// Exhaustive verification that products of T_OP elements land in the K-class
// the 5x5 shape table predicts, and that alpha beta = alpha element-wise for
// every beta of shape lambda3. Violations are reported, not thrown, so the
// CLI can surface counterexamples.
struct MultTableReport {
  int pairs_checked = 0;
  struct Violation {
    int alpha;  // canonical indices of the offending pair
    int beta;
    std::string detail;
  };
  std::vector<Violation> violations;

  bool clean() const { return violations.empty(); }
};

MultTableReport lambda_mult_table_check(const ChainPair& pair,
                                        std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace ordsemi

#endif  // ORDSEMI_STRUCTURES_HPP
