#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/bigint.hpp"

namespace twobridge {

// Twist sequence (a1, ..., am) naming D(a1, ..., am). Entries are nonzero;
// odd lengths are representable but rejected by knot-level operations.
class BridgeWord {
 public:
  BridgeWord() = default;
  explicit BridgeWord(std::vector<std::int64_t> entries);

  // "1,1,-1,-1"; whitespace around entries is ignored.
  static BridgeWord parse(std::string_view text);

  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  bool has_even_length() const noexcept { return entries_.size() % 2 == 0; }
  std::int64_t operator[](std::size_t k) const { return entries_[k]; }

  BridgeWord negated() const;
  BridgeWord reversed() const;

  std::string to_string() const;
  friend bool operator==(const BridgeWord&, const BridgeWord&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

struct Mat2 {
  BigInt a = 1, b = 0, c = 0, d = 1;  // (a b; c d)

  BigInt det() const { return a * d - b * c; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// b(p,q) with p odd >= 3, q odd, -p < q < p, gcd(p,q) = 1. Only normalize()
// builds one, so a TwoBridge always satisfies these invariants. Field equality
// compares representatives; knot equivalence is equivalent().
class TwoBridge {
 public:
  const BigInt& p() const noexcept { return p_; }
  const BigInt& q() const noexcept { return q_; }

  // "b(p,q)" or "p,q"; the pair is normalized.
  static TwoBridge parse(std::string_view text);

  std::string to_string() const;
  friend bool operator==(const TwoBridge&, const TwoBridge&) = default;

 private:
  friend TwoBridge normalize(const BigInt& p, const BigInt& q);
  TwoBridge(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {}

  BigInt p_;
  BigInt q_;
};

struct WordEvaluation {
  Mat2 matrix;     // ±(r q; s p), sign chosen so that p > 0
  BigInt raw_p;    // p and q exactly as read from the matrix
  BigInt raw_q;
  TwoBridge knot;
};

// phi(s2)^{2 a1} phi(s1)^{2 a2} ... phi(s1)^{2 a_m} with phi(s1) = (1 -1; 0 1)
// and phi(s2) = (1 0; 1 1).
WordEvaluation evaluate_word(const BridgeWord& w);

// Odd representative of q modulo 2p inside (-p, p).
TwoBridge normalize(const BigInt& p, const BigInt& q);

bool equivalent(const TwoBridge& k1, const TwoBridge& k2);
TwoBridge mirror(const TwoBridge& k);

bool is_fibered(const BridgeWord& w);
bool word_equivalent(const BridgeWord& w1, const BridgeWord& w2);

// Word for k by continued fractions with even partial quotients; the result
// evaluates back to exactly k.
BridgeWord even_cf_expansion(const TwoBridge& k);

}  // namespace twobridge
