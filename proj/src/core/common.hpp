#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace twobridge {

enum class Errc {
  InvalidArgument,
  ParseError,
  OddLengthWord,
  DegenerateP,
  NotCoprime,
  EvenP,
  EvenQ,
  NotSymmetrizable,
  HalfExponentAtNonSquare,
  HalfExponentPresent,
  DivisionByZero,
  PTooLarge,
  BudgetExceeded,
  BaseBudgetExceeded,
  TraceMismatch,
  SizeTooSmall,
  TooLarge,
  UnequalP,
  ExpansionFailure,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Computation limits. Every quantity that grows with p(n) is gated by one of
// these so that nothing silently runs for hours.
struct Budgets {
  std::uint64_t alexander_terms = 100'000'000;  // O(p) closed-form sum
  std::uint64_t cross_check = 10'000'000;       // validate_alexander check (iv)
  std::uint64_t profile = 10'000'000;           // materialized linking sequence
  std::uint64_t direct = 100'000'000;           // direct diagonal sums
  std::size_t determinant_size = 128;           // certificate cofactor witness
  unsigned word_nmax = 6;                       // family words
  unsigned alexander_nmax = 3;                  // family Alexander polynomials
};

// One named pass/fail outcome; the unit of every report and certificate.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

}  // namespace twobridge
