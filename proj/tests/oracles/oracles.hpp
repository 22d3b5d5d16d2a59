#pragma once

// Slow, independent re-derivations used only to check the library. Nothing
// here shares code with src/core beyond the GMP integer types.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;

struct M2 {
  Z a = 1, b = 0, c = 0, d = 1;
};

inline M2 mul(const M2& x, const M2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline M2 inverse(const M2& x) { return {x.d, -x.b, -x.c, x.a}; }

// Braid-group image, one generator at a time (no closed-form powers).
inline M2 word_matrix(const std::vector<std::int64_t>& w) {
  const M2 s1{1, -1, 0, 1}, s2{1, 0, 1, 1};
  M2 acc;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const M2 g = (k % 2 == 0) ? s2 : s1;
    const M2 step = w[k] > 0 ? g : inverse(g);
    const std::int64_t reps = 2 * (w[k] > 0 ? w[k] : -w[k]);
    for (std::int64_t r = 0; r < reps; ++r) acc = mul(acc, step);
  }
  return acc;
}

// (p, q) read off the matrix with p > 0.
inline std::pair<Z, Z> word_pq(const std::vector<std::int64_t>& w) {
  M2 m = word_matrix(w);
  if (m.d < 0) return {-m.d, -m.b};
  return {m.d, m.b};
}

inline Z floor_div(const Z& a, const Z& b) {
  Z r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// -sum_{k=1}^{p-1} (-1)^floor(qk/p), one big-integer division per term.
inline std::int64_t diagonal(const Z& p, const Z& q) {
  std::int64_t s = 0;
  for (Z k = 1; k < p; ++k) s += mpz_odd_p(Z(floor_div(q * k, p)).get_mpz_t()) ? -1 : 1;
  return -s;
}

// Same classes as b(p,q) ~ b(p,q'): scan all residues.
inline bool same_knot(const Z& p, const Z& q1, const Z& q2) {
  auto mod = [&](const Z& x) {
    Z r = x % p;
    if (r < 0) r += p;
    return r;
  };
  return mod(q1 - q2) == 0 || mod(q1 * q2 - 1) == 0;
}

// Exact determinant by Gaussian elimination over the rationals.
inline Q det(std::vector<std::vector<Q>> a) {
  const std::size_t n = a.size();
  Q result = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      result = -result;
    }
    result *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Q f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return result;
}

// det(V - t V^T) at an integer point, V the lower-bidiagonal Seifert matrix.
inline Q seifert_det_at(const std::vector<std::int64_t>& w, const Q& t) {
  const std::size_t n = w.size();
  std::vector<std::vector<Q>> v(n, std::vector<Q>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    v[i][i] = w[i];
    if (i + 1 < n) v[i + 1][i] = 1;
  }
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = v[i][j] - t * v[j][i];
  return det(m);
}

// Kirchhoff: (1,1)-minor of the linking matrix (diagonal = -row sum).
inline Q kirchhoff_cofactor(const std::vector<std::vector<std::int64_t>>& w) {
  const std::size_t m = w.size();
  std::vector<std::vector<Q>> a(m - 1, std::vector<Q>(m - 1, 0));
  for (std::size_t i = 1; i < m; ++i) {
    std::int64_t row = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) row += w[i][j];
    for (std::size_t j = 1; j < m; ++j) a[i - 1][j - 1] = (i == j) ? Q(-row) : Q(w[i][j]);
  }
  return det(a);
}

// Dense Laurent polynomial with integer exponents for hand expansions.
using Dense = std::map<std::int64_t, Z>;

inline Dense dense_mul(const Dense& f, const Dense& g) {
  Dense out;
  for (const auto& [e1, c1] : f)
    for (const auto& [e2, c2] : g) out[e1 + e2] += c1 * c2;
  for (auto it = out.begin(); it != out.end();) it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

inline Q dense_eval(const Dense& f, const Q& x) {
  Q s = 0;
  for (const auto& [e, c] : f) {
    Q pw = 1;
    for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) pw *= x;
    s += c * (e < 0 ? Q(1) / pw : pw);
  }
  return s;
}

}  // namespace oracle
