#pragma once

#include <doctest.h>

#include <random>

#include "core/laurent.hpp"

namespace twobridge::test {

// t as an integer-exponent polynomial from low-to-high coefficients.
inline LaurentPoly poly(std::initializer_list<long> coeffs, std::int64_t low = 0) {
  std::vector<BigInt> c;
  for (long x : coeffs) c.emplace_back(x);
  return LaurentPoly::from_coefficients(c, low);
}

inline LaurentPoly random_poly(std::mt19937_64& rng, bool half = false) {
  std::uniform_int_distribution<int> len(0, 5), coef(-9, 9), low(-4, 4);
  LaurentPoly::Terms terms;
  const std::int64_t start = 2 * low(rng) + (half ? 1 : 0);
  const int n = len(rng);
  for (int k = 0; k < n; ++k) {
    const int c = coef(rng);
    if (c != 0) terms[start + 2 * k] = c;
  }
  return LaurentPoly(terms);
}

}  // namespace twobridge::test
