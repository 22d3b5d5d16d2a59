#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "core/bridge.hpp"
#include "core/covering.hpp"

namespace twobridge {

// Level n and member i = sum eps_j 2^j of the iterated family.
class FamilyIndex {
 public:
  FamilyIndex(unsigned n, std::uint64_t i);

  unsigned n() const noexcept { return n_; }
  std::uint64_t i() const noexcept { return i_; }
  int bit(unsigned j) const { return static_cast<int>((i_ >> j) & 1U); }
  std::vector<int> bits() const;
  // Index of the ancestor at level n - 1.
  FamilyIndex parent() const;

 private:
  unsigned n_;
  std::uint64_t i_;
};

// Sign (-1)^{eps + 1} inserted at a level with bit eps.
inline int step_sign(int eps) { return eps == 0 ? -1 : 1; }

// K_n = D(1, ..., 1) with 2n ones.
BridgeWord kn_word(unsigned n);
// K_n(s) = D(1 x 2n, s, -1 x 2n, s, 1 x 2n), s = ±1.
BridgeWord kn_pm_word(unsigned n, int sign);

struct TorusClosedForm {
  BigInt p;          // (2n+1)(4n+1)(4n+3)
  BigInt q_first;    // 2n(4n+1)(4n+3) + 2s(2n+1)
  BigInt q_second;   // -(4n+1)(4n+3) + 2s(2n+1)
};
TorusClosedForm kn_pm_closed_form_raw(unsigned n, int sign);
// normalize of the closed form; throws ExpansionFailure if the two printed
// forms disagree.
TwoBridge kn_pm_closed_form(unsigned n, int sign);
// Trace of the mirror of K_n(s): base b(2n+1, 1), one step of sign -s.
RecursionTrace kn_pm_trace(unsigned n, int sign);

// W(0,0) = (1,1); W(n,i) = W', s, -W', s, W' with W' = W(n-1, parent) and
// s = (-1)^{eps_{n-1}+1}.
BridgeWord w_word(const FamilyIndex& index);

BigInt family_p(unsigned n);

struct FamilyPQ {
  BigInt p;
  BigInt q;
};
// p(0) = 3, q(0,0) = 2, p' = p(4p^2-1), q' = q(4p^2-1) + 2 s p.
FamilyPQ pq_recursion(const FamilyIndex& index);
// Same recursion from q'(0,0) = -1.
BigInt q_prime(const FamilyIndex& index);
// (2/3) p(n) + sum_j 2 s_j p(n) / (4 p(j)^2 - 1), evaluated exactly.
Rational q_closed_form(const FamilyIndex& index);
// Base b(3,-1) with signs s_0, ..., s_{n-1}; reaches b(p(n), q'(n,i)).
RecursionTrace tree_trace(const FamilyIndex& index);

// word a, s, reverse of -a, s, a
BridgeWord kanenobu_compose(const BridgeWord& a, int sign);

struct DiagFamilySet {
  std::vector<std::int64_t> values;              // d(K(n,i)) indexed by i
  std::map<std::int64_t, std::size_t> multiset;  // value -> multiplicity
  std::size_t distinct_abs = 0;
};
DiagFamilySet diag_family_set(unsigned n, const Budgets& budgets = {});

}  // namespace twobridge
