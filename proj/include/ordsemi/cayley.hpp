#ifndef ORDSEMI_CAYLEY_HPP
#define ORDSEMI_CAYLEY_HPP

#include <cstdint>
#include <vector>

#include "ordsemi/chain.hpp"
#include "ordsemi/transformation.hpp"

namespace ordsemi {

// The full multiplication table of T_OP(X, X') over the canonical
// (lexicographic) element ordering, plus per-element metadata used by the
// isomorphism search and the induced-map extractors.
//
// table[i*order + j] is the canonical index of element_i element_j
// (left-to-right composition).
struct CayleyTable {
  ChainPair pair;
  int order = 0;
  std::vector<Transformation> elements;
  std::vector<int> table;

  std::vector<bool> idempotent;
  std::vector<bool> constant;  // the constants are exactly the right zeros
  std::vector<std::vector<int>> range_sets;
  std::vector<std::vector<int>> restrictions;  // x alpha for x in X'

  int at(int i, int j) const {
    return table[static_cast<std::size_t>(i) * static_cast<std::size_t>(order) +
                 static_cast<std::size_t>(j)];
  }

  // Canonical index of the constant map at range element a.
  int constant_index(int a) const;
};

// Builds the table and verifies associativity (fully for order <= 200,
// on a deterministic sample of triples above that).
CayleyTable build_cayley(const ChainPair& pair,
                         std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace ordsemi

#endif  // ORDSEMI_CAYLEY_HPP
