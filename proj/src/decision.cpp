#include "ordsemi/decision.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordsemi/errors.hpp"
#include "ordsemi/induced.hpp"
#include "ordsemi/structures.hpp"

namespace ordsemi {

const char* to_string(Verdict v) {
  return v == Verdict::isomorphic ? "isomorphic" : "not_isomorphic";
}

const char* to_string(Rule r) {
  switch (r) {
    case Rule::trivial_x1: return "trivial_x1";
    case Rule::signature_x2: return "signature_x2";
    case Rule::signature_general: return "signature_general";
  }
  return "?";
}

Decision decide_iso(const ChainPair& a, const ChainPair& b) {
  const std::size_t nx = a.range().size();
  const std::size_t ny = b.range().size();

  if (nx == 1 && ny == 1) {
    // Both semigroups are trivial regardless of the gap structure.
    Decision d{Verdict::isomorphic, Rule::trivial_x1, false, std::nullopt, true};
    return d;
  }

  const Rule rule =
      (nx == 2 && ny == 2) ? Rule::signature_x2 : Rule::signature_general;
  Decision d{Verdict::not_isomorphic, rule, false, std::nullopt, false};
  if (nx != ny || a.size() != b.size()) {
    // Signatures of different lengths or sums can never match either way.
    return d;
  }

  const GapSignature sig_a = gap_signature(a);
  const GapSignature sig_b = gap_signature(b);
  if (sig_a == sig_b) {
    d.verdict = Verdict::isomorphic;
    d.theta = ThetaWitness{*pair_isomorphism(a, b, Orientation::order),
                           Orientation::order};
  } else if (sig_a == sig_b.reversed()) {
    d.verdict = Verdict::isomorphic;
    d.theta = ThetaWitness{*pair_isomorphism(a, b, Orientation::anti),
                           Orientation::anti};
    d.mirror_clause_used = rule == Rule::signature_x2;
  }
  return d;
}

namespace {

// Canonical elements are lexicographically sorted, so index lookup is a
// binary search on image arrays.
int index_of_image(const CayleyTable& t, const std::vector<int>& image) {
  const auto it = std::lower_bound(
      t.elements.begin(), t.elements.end(), image,
      [](const Transformation& e, const std::vector<int>& img) {
        return e.image() < img;
      });
  if (it == t.elements.end() || it->image() != image) {
    throw std::logic_error("conjugated element is not in the target semigroup");
  }
  return static_cast<int>(it - t.elements.begin());
}

}  // namespace

SemigroupIso construct_iso_from_theta(const CayleyTable& A,
                                      const CayleyTable& B,
                                      const std::vector<int>& theta,
                                      Orientation orientation) {
  const int n = A.pair.size();
  if (B.pair.size() != n || static_cast<int>(theta.size()) != n) {
    throw std::invalid_argument("theta fails validation: size mismatch");
  }
  for (int x = 0; x < n; ++x) {
    if (theta[static_cast<std::size_t>(x)] < 0 ||
        theta[static_cast<std::size_t>(x)] >= n) {
      throw std::invalid_argument("theta fails validation: value out of range");
    }
    if (x > 0) {
      const bool ok = orientation == Orientation::order
                          ? theta[static_cast<std::size_t>(x - 1)] <
                                theta[static_cast<std::size_t>(x)]
                          : theta[static_cast<std::size_t>(x - 1)] >
                                theta[static_cast<std::size_t>(x)];
      if (!ok) {
        throw std::invalid_argument(
            "theta fails validation: not strictly monotone in the stated "
            "orientation");
      }
    }
  }
  std::vector<int> range_image;
  range_image.reserve(A.pair.range().size());
  for (int x : A.pair.range()) {
    range_image.push_back(theta[static_cast<std::size_t>(x)]);
  }
  std::sort(range_image.begin(), range_image.end());
  if (range_image != B.pair.range()) {
    throw std::invalid_argument(
        "theta fails validation: range is not carried onto the target range");
  }

  std::vector<int> theta_inv(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    theta_inv[static_cast<std::size_t>(theta[static_cast<std::size_t>(x)])] = x;
  }

  SemigroupIso iso;
  iso.mapping.reserve(static_cast<std::size_t>(A.order));
  std::vector<int> conjugated(static_cast<std::size_t>(n));
  for (const Transformation& alpha : A.elements) {
    for (int y = 0; y < n; ++y) {
      conjugated[static_cast<std::size_t>(y)] =
          theta[static_cast<std::size_t>(
              alpha.apply(theta_inv[static_cast<std::size_t>(y)]))];
    }
    iso.mapping.push_back(index_of_image(B, conjugated));
  }
  return iso;
}

SemigroupIso construct_iso_x2(const CayleyTable& A, const CayleyTable& B,
                              const std::vector<int>& f3,
                              const std::vector<int>& f4,
                              const std::vector<int>& f5) {
  if (A.pair.range().size() != 2 || B.pair.range().size() != 2) {
    throw std::invalid_argument("construct_iso_x2: both ranges must have size 2");
  }

  // Members of each shape class in canonical order, per table.
  auto classify_all = [](const CayleyTable& t) {
    std::array<std::vector<int>, 5> classes;
    for (int i = 0; i < t.order; ++i) {
      const LambdaShape tag = classify_lambda(t.elements[static_cast<std::size_t>(i)]);
      classes[static_cast<std::size_t>(tag)].push_back(i);
    }
    return classes;
  };
  const auto classes_a = classify_all(A);
  const auto classes_b = classify_all(B);

  for (std::size_t c = 0; c < 5; ++c) {
    if (classes_a[c].size() != classes_b[c].size()) {
      throw std::invalid_argument(
          "construct_iso_x2: class size mismatch at " +
          std::string(to_string(static_cast<LambdaShape>(c))) + ": " +
          std::to_string(classes_a[c].size()) + " vs " +
          std::to_string(classes_b[c].size()));
    }
  }

  auto check_perm = [](const std::vector<int>& f, std::size_t size,
                       const char* name) {
    if (f.empty()) return;
    if (f.size() != size) {
      throw std::invalid_argument(std::string("construct_iso_x2: ") + name +
                                  " has wrong length");
    }
    std::vector<bool> seen(size, false);
    for (int v : f) {
      if (v < 0 || static_cast<std::size_t>(v) >= size ||
          seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument(std::string("construct_iso_x2: ") + name +
                                    " is not a permutation");
      }
      seen[static_cast<std::size_t>(v)] = true;
    }
  };
  check_perm(f3, classes_a[2].size(), "f3");
  check_perm(f4, classes_a[3].size(), "f4");
  check_perm(f5, classes_a[4].size(), "f5");

  SemigroupIso iso;
  iso.mapping.assign(static_cast<std::size_t>(A.order), -1);
  auto place = [&iso](const std::vector<int>& from, const std::vector<int>& to,
                      const std::vector<int>& f) {
    for (std::size_t t = 0; t < from.size(); ++t) {
      const std::size_t target = f.empty() ? t : static_cast<std::size_t>(f[t]);
      iso.mapping[static_cast<std::size_t>(from[t])] = to[target];
    }
  };
  place(classes_a[0], classes_b[0], {});
  place(classes_a[1], classes_b[1], {});
  place(classes_a[2], classes_b[2], f3);
  place(classes_a[3], classes_b[3], f4);
  place(classes_a[4], classes_b[4], f5);
  return iso;
}

std::vector<ChainPair> instance_family(int max_size, int min_range) {
  std::vector<ChainPair> family;
  std::vector<int> range;
  for (int n = std::max(1, min_range); n <= max_size; ++n) {
    range.clear();
    // Lexicographic subset generation.
    auto emit = [&](auto&& self, int next) -> void {
      if (static_cast<int>(range.size()) >= min_range) {
        family.emplace_back(n, range);
      }
      for (int x = next; x < n; ++x) {
        range.push_back(x);
        self(self, x + 1);
        range.pop_back();
      }
    };
    emit(emit, 0);
  }
  return family;
}

CrossValidateReport cross_validate(const std::vector<ChainPair>& family,
                                   const CrossValidateOptions& options) {
  CrossValidateReport report;
  report.family = family;

  std::vector<CayleyTable> tables;
  tables.reserve(family.size());
  for (const ChainPair& pair : family) {
    tables.push_back(build_cayley(pair, options.cap));
  }

  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      PairOutcome out;
      out.a_index = static_cast<int>(i);
      out.b_index = static_cast<int>(j);
      const Decision decided = decide_iso(family[i], family[j]);
      out.decided = decided.verdict;
      out.rule = decided.rule;
      out.mirror_clause_used = decided.mirror_clause_used;

      std::optional<SemigroupIso> witness;
      try {
        witness = find_iso(tables[i], tables[j], options.search);
        out.oracle =
            witness ? OracleOutcome::found : OracleOutcome::refused;
        out.witness = witness;
      } catch (const BudgetExceeded&) {
        out.oracle = OracleOutcome::budget_exceeded;
        out.agree = false;
        out.note = "oracle budget exceeded; pair skipped";
        ++report.skipped;
        report.outcomes.push_back(std::move(out));
        continue;
      }

      out.agree = (decided.verdict == Verdict::isomorphic) ==
                  (out.oracle == OracleOutcome::found);
      if (!out.agree) {
        out.note = "criterion and oracle disagree";
        ++report.mismatches;
      }

      if (witness) {
        out.witness_verified = verify_iso(tables[i], tables[j], *witness);
        if (!out.witness_verified) {
          out.note = "oracle witness failed verification";
          ++report.mismatches;
        } else {
          const PreservationReport pres =
              check_preservation(tables[i], tables[j], *witness);
          out.preservation_clean = pres.clean();
          if (!out.preservation_clean) {
            out.note = "transport violation: " + pres.violations.front().check;
            ++report.mismatches;
          }
          if (family[i].range().size() >= 2 && family[j].range().size() >= 2) {
            try {
              extend_theta_hat(tables[i], tables[j], *witness);
            } catch (const std::logic_error& e) {
              out.blocks_match = false;
              out.note = e.what();
              ++report.mismatches;
            }
          }
        }
      }
      report.outcomes.push_back(std::move(out));
    }
  }
  return report;
}

}  // namespace ordsemi
