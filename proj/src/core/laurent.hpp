#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/bigint.hpp"

namespace twobridge {

// Laurent polynomial in one variable with half-integer exponents and
// arbitrary-precision coefficients. Exponents are stored doubled, so the
// monomial t^{1/2} has key 1 and t^{-1} has key -2. No zero coefficient is
// ever stored, which makes the term map canonical.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, BigInt>;

  LaurentPoly() = default;
  // From (doubled exponent, coefficient) pairs; repeated exponents accumulate.
  LaurentPoly(std::initializer_list<std::pair<std::int64_t, BigInt>> terms);
  explicit LaurentPoly(Terms terms);

  static LaurentPoly constant(const BigInt& c);
  static LaurentPoly monomial(const BigInt& c, std::int64_t doubled_exponent);
  // Integer-exponent coefficients c0 + c1 t + c2 t^2 + ... shifted by t^{low}.
  static LaurentPoly from_coefficients(const std::vector<BigInt>& coeffs, std::int64_t low = 0);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  // Doubled exponents of the extreme terms; undefined for the zero polynomial.
  std::int64_t min_exponent() const { return terms_.begin()->first; }
  std::int64_t max_exponent() const { return terms_.rbegin()->first; }
  BigInt coefficient(std::int64_t doubled_exponent) const;
  bool has_half_exponents() const noexcept;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& g);
  LaurentPoly& operator-=(const LaurentPoly& g);
  LaurentPoly& operator*=(const LaurentPoly& g);
  friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
  friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // c * t^{k/2} * f
  LaurentPoly scaled(const BigInt& c, std::int64_t doubled_shift = 0) const;
  LaurentPoly shifted(std::int64_t doubled_shift) const { return scaled(1, doubled_shift); }

  // f(1), always defined.
  BigInt value_at_one() const;
  // f(t) == f(1/t)
  bool is_palindromic() const;

  // "t^-1 - 1 + t", half exponents as t^(1/2).
  std::string to_string(const std::string& var = "t") const;

 private:
  void add_term(std::int64_t e, const BigInt& c);

  Terms terms_;
};

// Unique unit multiple g = ±t^{k/2} f with g(t) = g(1/t) and g(1) > 0 (the
// top coefficient decides when g(1) = 0). Throws NotSymmetrizable.
LaurentPoly symmetrize(const LaurentPoly& f);

// f == ±t^{k/2} g for some k.
bool equal_up_to_units(const LaurentPoly& f, const LaurentPoly& g);

// Exact value at a nonzero rational. Half exponents need x to be the square of
// a positive rational; the positive root is used.
Rational evaluate(const LaurentPoly& f, const Rational& x);

// f(-t); requires integer exponents.
LaurentPoly substitute_neg(const LaurentPoly& f);

}  // namespace twobridge
