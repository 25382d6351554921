#ifndef ORDSEMI_DECISION_HPP
#define ORDSEMI_DECISION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordsemi/cayley.hpp"
#include "ordsemi/chain.hpp"
#include "ordsemi/iso.hpp"

namespace ordsemi {

enum class Verdict { isomorphic, not_isomorphic };

// Which criterion produced the verdict:
//   trivial_x1        both ranges are singletons, both semigroups trivial
//   signature_x2      |X'| = |Y'| = 2, gap triple comparison (with mirror)
//   signature_general every other case, gap signature comparison
enum class Rule { trivial_x1, signature_x2, signature_general };

const char* to_string(Verdict v);
const char* to_string(Rule r);

// A full-chain witness: map[x] = x theta, order- or anti-isomorphism with
// (X')theta = Y'. Feeding it to construct_iso_from_theta and verify_iso makes
// every isomorphic verdict independently checkable.
struct ThetaWitness {
  std::vector<int> map;
  Orientation orientation;
};

struct Decision {
  Verdict verdict;
  Rule rule;
  // True when the verdict is isomorphic, the rule is signature_x2, and only
  // the reversed gap triple matched. Logged because the literal |X'| = 2
  // criterion compares triples one way only, yet an anti-isomorphism of the
  // chains forces the semigroup isomorphism; the oracle concurs.
  bool mirror_clause_used = false;
  std::optional<ThetaWitness> theta;  // present for signature-rule isomorphic
  bool trivial_witness = false;       // present for trivial_x1 isomorphic
};

Decision decide_iso(const ChainPair& a, const ChainPair& b);

// The conjugation isomorphism alpha |-> theta^{-1} alpha theta induced by a
// validated full-chain (anti-)isomorphism with (X')theta = Y', materialized
// over canonical indices. Throws std::invalid_argument when theta fails
// validation.
SemigroupIso construct_iso_from_theta(const CayleyTable& A,
                                      const CayleyTable& B,
                                      const std::vector<int>& theta,
                                      Orientation orientation);

// The union-of-class-bijections isomorphism for |X'| = |Y'| = 2: constants
// pair up, and f3/f4/f5 are arbitrary bijections between the corresponding
// nontrivial K-classes (as permutations of the B class member list, in
// canonical order; empty means identity pairing). Every choice yields a
// verified isomorphism whenever the class sizes match.
SemigroupIso construct_iso_x2(const CayleyTable& A, const CayleyTable& B,
                              const std::vector<int>& f3 = {},
                              const std::vector<int>& f4 = {},
                              const std::vector<int>& f5 = {});

struct CrossValidateOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  IsoSearchOptions search;
};

enum class OracleOutcome { found, refused, budget_exceeded };

struct PairOutcome {
  int a_index = 0;
  int b_index = 0;
  Verdict decided = Verdict::not_isomorphic;
  Rule rule = Rule::signature_general;
  bool mirror_clause_used = false;
  OracleOutcome oracle = OracleOutcome::refused;
  std::optional<SemigroupIso> witness;  // oracle == found
  bool agree = true;               // decided verdict matches oracle presence
  bool witness_verified = true;    // oracle == found: verify_iso passed
  bool preservation_clean = true;  // oracle == found: transport checks clean
  bool blocks_match = true;        // oracle == found: blocks matched
  std::string note;
};

struct CrossValidateReport {
  std::vector<ChainPair> family;
  std::vector<PairOutcome> outcomes;  // (a_index, b_index) ascending
  int mismatches = 0;  // disagreements plus any failed post-check on a witness
  int skipped = 0;     // pairs where the oracle hit its budget

  bool complete() const { return skipped == 0; }
  bool consistent() const { return mismatches == 0; }
};

// Runs decide_iso against the oracle on every ordered pair of the family,
// and the transport/block checks on every oracle-found isomorphism.
CrossValidateReport cross_validate(const std::vector<ChainPair>& family,
                                   const CrossValidateOptions& options = {});

// All instances with chain size <= max_size and |range| >= min_range, in
// deterministic order (by size, then lexicographic range).
std::vector<ChainPair> instance_family(int max_size, int min_range = 2);

}  // namespace ordsemi

#endif  // ORDSEMI_DECISION_HPP
