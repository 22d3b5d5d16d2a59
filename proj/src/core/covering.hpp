#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/bridge.hpp"
#include "core/common.hpp"

namespace twobridge {

// Linking data of the dihedral covering link of b(p,q): the circulant matrix
// has off-diagonal entries l(s - r) with l(k) = (-1)^floor(qk/p) and diagonal
// d = -sum_{k=1}^{p-1} l(k).
struct CoveringProfile {
  BigInt p;
  BigInt q;                           // representative the floors were taken with
  std::vector<std::int8_t> offdiag;   // l(1..p-1); empty unless materialized
  std::int64_t d = 0;

  bool materialized() const noexcept { return !offdiag.empty(); }
};

// Full sequence when p <= budgets.profile, d only when p <= budgets.direct.
// require_full turns the d-only case into BudgetExceeded.
CoveringProfile linking_profile(const TwoBridge& k, const Budgets& budgets = {}, bool require_full = false);

// -2 * sum_{k=1}^{(p-1)/2} (-1)^floor(qk/p) on the normalized representative.
std::int64_t diagonal_direct(const TwoBridge& k, std::uint64_t budget = Budgets{}.direct);

// sum_{k=1}^{upto} (-1)^floor(qk/p) for any p > 0 and integer q.
std::int64_t linking_sum(std::int64_t p, std::int64_t q, std::int64_t upto);

// -linking_sum(p, q, p - 1): the diagonal of the pair exactly as written,
// without normalizing q.
std::int64_t diagonal_sum_full(std::int64_t p, std::int64_t q);

// Explicit witness that (p, q) arises from a base pair by steps
// (p, q) -> (4p^3 - p, (4p^2 - 1) q + 2 s p), s = ±1. With mirrored set the
// steps reach the mirror (p, -q) of the target instead.
struct RecursionTrace {
  BigInt base_p;
  BigInt base_q;
  std::vector<int> signs;
  bool mirrored = false;
};

struct TraceStep {
  BigInt p;
  BigInt q;
};
// Pairs visited by the trace, base first.
std::vector<TraceStep> expand_trace(const RecursionTrace& trace);

// d(base) by direct summation plus 2s per step; the trace arithmetic is
// checked against the target. Throws TraceMismatch / BaseBudgetExceeded.
std::int64_t diagonal_recursive(const BigInt& p, const BigInt& q, const RecursionTrace& trace,
                                std::uint64_t base_budget = Budgets{}.direct);

// Symmetric off-diagonal weights on m vertices; the diagonal is ignored.
class WeightMatrix {
 public:
  explicit WeightMatrix(std::size_t m) : m_(m), w_(m * m, 0) {}
  WeightMatrix(std::size_t m, const std::vector<std::int64_t>& row_major);

  std::size_t size() const noexcept { return m_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return w_[i * m_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) {
    w_[i * m_ + j] = v;
    w_[j * m_ + i] = v;
  }

 private:
  std::size_t m_;
  std::vector<std::int64_t> w_;
};

// Circulant covering weights of the first m components of a materialized profile.
WeightMatrix covering_weights(const CoveringProfile& profile, std::size_t m);

// (1,1)-cofactor of the linking matrix whose diagonal is minus the off-diagonal
// row sum, by fraction-free elimination. Equals (-1)^{m-1} * tree_sum.
BigInt laplacian_cofactor(const WeightMatrix& weights);

// Sum over all m^{m-2} labeled spanning trees of the product of edge weights,
// enumerated through Prüfer sequences. m <= 8.
BigInt tree_sum_bruteforce(const WeightMatrix& weights);

enum class Verdict { Distinguished, Inconclusive };
const char* verdict_name(Verdict v) noexcept;

struct CoveringSide {
  TwoBridge knot;
  std::int64_t d_raw = 0;       // diagonal of the knot as given
  bool mirrored = false;        // orientation switched to make d >= 0
  std::int64_t d = 0;           // |d_raw|
  std::string source;           // "diagonal_direct" or "diagonal_recursive"
};

struct ParityWitness {
  BigInt components;                 // p - d_min
  bool cayley_count_odd = false;     // (p-d)^{p-d-2} odd
  std::optional<BigInt> cofactor;    // exact H(1) of the sublink when small enough
};

// Verdict that the covering links of two b(p, .) knots have distinct
// multivariable Alexander polynomials.
struct Certificate {
  CoveringSide left;
  CoveringSide right;
  std::vector<Check> hypotheses;
  ParityWitness witness;
  Verdict verdict = Verdict::Inconclusive;
};

// Diagonals come from diagonal_recursive when a trace is supplied, otherwise
// from diagonal_direct. Throws UnequalP.
Certificate distinguish_certificate(const TwoBridge& k1, const TwoBridge& k2, const Budgets& budgets = {},
                                    const RecursionTrace* trace1 = nullptr, const RecursionTrace* trace2 = nullptr);

}  // namespace twobridge
