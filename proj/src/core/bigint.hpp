#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace twobridge {

using BigInt = mpz_class;
using Rational = mpq_class;

// Decimal with optional leading sign. Throws Error(ParseError).
BigInt parse_bigint(std::string_view text);
// "a/b" or a plain integer; the result is canonicalized.
Rational parse_rational(std::string_view text);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

// Mathematical floor of a/b (b != 0).
BigInt floor_div(const BigInt& a, const BigInt& b);
// Representative of a in [0, |m|).
BigInt mod_floor(const BigInt& a, const BigInt& m);

std::optional<std::int64_t> to_int64(const BigInt& x);

inline bool is_odd(const BigInt& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

BigInt pow_ui(const BigInt& base, unsigned long exponent);

}  // namespace twobridge
