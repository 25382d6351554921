#ifndef ORDSEMI_ERRORS_HPP
#define ORDSEMI_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ordsemi {

// Thrown when an enumeration would exceed the configured element cap.
// Distinct from invalid input: the instance is valid, just too large.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::uint64_t count, std::uint64_t cap)
      : std::runtime_error("enumeration cap exceeded: instance has " +
                           std::to_string(count) + " transformations, cap is " +
                           std::to_string(cap)),
        count_(count),
        cap_(cap) {}

  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t count_;
  std::uint64_t cap_;
};

// Thrown when the isomorphism search exhausts its node budget before
// reaching an answer. Deliberately distinct from "not isomorphic".
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("isomorphism search budget exceeded (" +
                           std::to_string(budget) + " nodes)"),
        budget_(budget) {}

  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t budget_;
};

}  // namespace ordsemi

#endif  // ORDSEMI_ERRORS_HPP
