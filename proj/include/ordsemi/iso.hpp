#ifndef ORDSEMI_ISO_HPP
#define ORDSEMI_ISO_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ordsemi/cayley.hpp"

namespace ordsemi {

// A candidate or verified semigroup isomorphism between two Cayley tables:
// mapping[i] = index in B of the image of element i of A.
struct SemigroupIso {
  std::vector<int> mapping;

  bool operator==(const SemigroupIso&) const = default;
};

struct IsoSearchOptions {
  // DFS node budget (candidate assignments tried). Exceeding it throws
  // BudgetExceeded, a distinct outcome from "not isomorphic".
  std::uint64_t node_budget = 50'000'000;
  // Invariant-based pruning (iterative refinement fingerprints). Disabling it
  // must never change any answer; the flag exists so tests can check that.
  bool use_refinement = true;
};

// Exhaustive backtracking search. Returns the lexicographically least
// isomorphism under the canonical element order when one exists, nullopt
// after exhaustive refusal. Deterministic.
std::optional<SemigroupIso> find_iso(const CayleyTable& A, const CayleyTable& B,
                                     const IsoSearchOptions& options = {});

// All isomorphisms A -> B in lexicographic order, up to max_count.
// Intended for small instances (automorphism enumeration in tests).
std::vector<SemigroupIso> find_all_isos(const CayleyTable& A,
                                        const CayleyTable& B,
                                        const IsoSearchOptions& options = {},
                                        std::size_t max_count = 1'000'000);

// Full n^2 homomorphism check plus bijectivity.
bool verify_iso(const CayleyTable& A, const CayleyTable& B,
                const SemigroupIso& m);

}  // namespace ordsemi

#endif  // ORDSEMI_ISO_HPP
