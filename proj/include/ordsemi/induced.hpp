#ifndef ORDSEMI_INDUCED_HPP
#define ORDSEMI_INDUCED_HPP

#include <string>
#include <vector>

#include "ordsemi/cayley.hpp"
#include "ordsemi/iso.hpp"

namespace ordsemi {

// The bijection X' -> Y' induced by a semigroup isomorphism via constant
// maps: a |-> the value of the constant the constant-at-a maps to. Strictly
// monotone or strictly anti-monotone, never anything else.
struct RangeBijection {
  std::vector<int> domain;  // X', ascending
  std::vector<int> image;   // image[i] corresponds to domain[i]
  Orientation orientation;

  int apply(int a) const;
};

// Extension of the range bijection to the adjusted chains: range elements map
// through theta, and every gap block of A is matched to the block of B in the
// corresponding slot, with equal cardinality.
struct AdjustedChainIso {
  Orientation orientation;
  std::vector<std::pair<int, int>> range_map;  // (a, a theta)
  struct BlockMatch {
    GapBlock from;
    GapBlock to;
  };
  std::vector<BlockMatch> blocks;  // nonempty blocks of A, chain order
};

// Reads the induced range bijection off a verified isomorphism. Throws
// std::logic_error if constants do not map to constants or the induced map is
// neither monotone nor anti-monotone; both indicate an unverified mapping.
RangeBijection extract_theta(const CayleyTable& A, const CayleyTable& B,
                             const SemigroupIso& m);

// Matches gap blocks slot by slot (mirrored slots when theta is
// anti-monotone, following the reversal normalization) and validates the
// cardinality law |[k]| = |[t_k]|. A missing partner or a cardinality
// mismatch throws std::logic_error: for a verified isomorphism it would be a
// genuine violation of the block-transport law, and must surface.
// Requires |X'| >= 2 on both sides.
AdjustedChainIso extend_theta_hat(const CayleyTable& A, const CayleyTable& B,
                                  const SemigroupIso& m);

// Element-by-element transport checks over a verified isomorphism:
// fixed-point sets, ranges, X'-preimages, and positional partial-graph
// structure (mirrored when theta is anti-monotone). Violations are collected,
// not thrown.
struct PreservationReport {
  int elements_checked = 0;
  struct Violation {
    int element;        // canonical index in A
    std::string check;  // "fix" | "range" | "preimage" | "graph"
    std::string detail;
  };
  std::vector<Violation> violations;

  bool clean() const { return violations.empty(); }
};

PreservationReport check_preservation(const CayleyTable& A,
                                      const CayleyTable& B,
                                      const SemigroupIso& m);

}  // namespace ordsemi

#endif  // ORDSEMI_INDUCED_HPP
