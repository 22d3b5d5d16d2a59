#pragma once

#include <cstdint>
#include <vector>

#include "core/bridge.hpp"
#include "core/common.hpp"
#include "core/laurent.hpp"

namespace twobridge {

// Lower-bidiagonal Seifert matrix of D(a1, ..., am): V(i,i) = a_i,
// V(i+1,i) = 1, everything else zero.
class SeifertMatrix {
 public:
  explicit SeifertMatrix(const BridgeWord& w);

  std::size_t size() const noexcept { return diagonal_.size(); }
  std::int64_t operator()(std::size_t row, std::size_t col) const;
  const std::vector<std::int64_t>& diagonal() const noexcept { return diagonal_; }

  // det(V - t V^T) as an ordinary polynomial, coefficient k for t^k.
  std::vector<BigInt> alexander_determinant() const;

 private:
  std::vector<std::int64_t> diagonal_;
};

// Closed-form sum  sum_{j<p} (-1)^j t^{h(j)},  h(j) = sum_{i<=j} (-1)^floor(iq/p),
// symmetrized. O(p); throws PTooLarge above max_terms.
LaurentPoly alexander_from_pq(const TwoBridge& k, std::uint64_t max_terms = Budgets{}.alexander_terms);

struct WordAlexander {
  LaurentPoly poly;
  bool mirror_retry = false;  // symmetrization needed the negated word
};

// Seifert-matrix route, symmetrized.
WordAlexander alexander_from_word_detailed(const BridgeWord& w);
inline LaurentPoly alexander_from_word(const BridgeWord& w) { return alexander_from_word_detailed(w).poly; }

struct ValidationReport {
  BigInt p;
  std::vector<Check> checks;

  bool passed() const { return all_passed(checks); }
};

// Consistency gate for an Alexander polynomial claimed for the knot of w:
// f(1) = ±1, |f(-1)| = p, palindromic, and (below the budget) agreement with
// the closed-form sum.
ValidationReport validate_alexander(const BridgeWord& w, const LaurentPoly& f,
                                    std::uint64_t cross_check_budget = Budgets{}.cross_check);

}  // namespace twobridge
