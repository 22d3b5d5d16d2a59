#include "core/covering.hpp"

#include <numeric>
#include <random>

#include "core/families.hpp"
#include "helpers.hpp"
#include "oracles/oracles.hpp"

using namespace twobridge;

namespace {

std::vector<std::vector<std::int64_t>> dense(const WeightMatrix& w) {
  std::vector<std::vector<std::int64_t>> out(w.size(), std::vector<std::int64_t>(w.size(), 0));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      if (i != j) out[i][j] = w(i, j);
  return out;
}

WeightMatrix constant_weights(std::size_t m, std::int64_t v) {
  WeightMatrix w(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) w.set(i, j, v);
  return w;
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("linking profile examples") {
  const CoveringProfile t = linking_profile(normalize(3, -1));
  CHECK(t.offdiag == std::vector<std::int8_t>{-1, -1});
  CHECK(t.d == 2);
  const CoveringProfile m = linking_profile(normalize(3, 1));
  CHECK(m.offdiag == std::vector<std::int8_t>{1, 1});
  CHECK(m.d == -2);
  const CoveringProfile f = linking_profile(normalize(5, 3));
  CHECK(f.offdiag == std::vector<std::int8_t>{1, -1, -1, 1});
  CHECK(f.d == 0);
}

TEST_CASE("profile budgets") {
  Budgets b;
  b.profile = 50;
  const CoveringProfile big = linking_profile(normalize(105, -41), b);
  CHECK_FALSE(big.materialized());
  CHECK(big.d == 0);
  CHECK(code_of([&] { linking_profile(normalize(105, -41), b, true); }) == Errc::BudgetExceeded);
}

TEST_CASE("diagonal examples") {
  CHECK(diagonal_direct(normalize(3, -1)) == 2);
  CHECK(diagonal_direct(normalize(105, -29)) == 4);
  CHECK(diagonal_direct(normalize(105, -41)) == 0);
  CHECK(diagonal_direct(normalize(105, 64)) == diagonal_direct(normalize(105, -41)));
  CHECK(code_of([] { diagonal_direct(normalize(105, -41), 10); }) == Errc::BudgetExceeded);
}

TEST_CASE("recursive diagonal examples") {
  CHECK(diagonal_recursive(3, -1, RecursionTrace{3, -1, {}, false}) == 2);
  CHECK(diagonal_recursive(105, -41, RecursionTrace{3, -1, {-1}, false}) == 0);
  CHECK(diagonal_recursive(105, -29, RecursionTrace{3, -1, {1}, false}) == 4);
  CHECK(diagonal_recursive(4630395, -1278661, RecursionTrace{3, -1, {1, 1}, false}) == 6);
  CHECK(code_of([] { diagonal_recursive(105, -29, RecursionTrace{3, -1, {-1}, false}); }) == Errc::TraceMismatch);
  CHECK(code_of([] { diagonal_recursive(4630395, -1278661, RecursionTrace{3, -1, {1, 1}, false}, 2); }) ==
        Errc::BaseBudgetExceeded);
  const auto steps = expand_trace(RecursionTrace{3, -1, {1, 1}, false});
  REQUIRE(steps.size() == 3);
  CHECK(steps[1].p == 105);
  CHECK(steps[2].p == 4630395);
}

TEST_CASE("Matrix-Tree examples") {
  CHECK(laplacian_cofactor(constant_weights(3, -1)) == 3);
  CHECK(laplacian_cofactor(constant_weights(3, 1)) == 3);
  CHECK(tree_sum_bruteforce(constant_weights(3, 1)) == 3);
  CHECK(tree_sum_bruteforce(constant_weights(4, 1)) == 16);
  WeightMatrix w(3);
  w.set(0, 1, 1);
  w.set(0, 2, 1);
  w.set(1, 2, -1);
  CHECK(tree_sum_bruteforce(w) == -1);
  CHECK(code_of([] { laplacian_cofactor(WeightMatrix(1)); }) == Errc::SizeTooSmall);
  CHECK(code_of([] { tree_sum_bruteforce(WeightMatrix(9)); }) == Errc::TooLarge);
}

TEST_CASE("certificate examples") {
  const Certificate torus = distinguish_certificate(normalize(105, -29), normalize(105, -41));
  CHECK(torus.verdict == Verdict::Distinguished);
  CHECK(torus.left.d == 4);
  CHECK(torus.right.d == 0);
  const Certificate self = distinguish_certificate(normalize(105, -29), normalize(105, -29));
  CHECK(self.verdict == Verdict::Inconclusive);
  const Certificate tree = distinguish_certificate(normalize(105, -41), normalize(105, -29));
  CHECK(tree.verdict == Verdict::Distinguished);
  CHECK(tree.left.d == 0);
  CHECK(tree.right.d == 4);
  CHECK(all_passed(tree.hypotheses));
  CHECK(tree.witness.cofactor.has_value());
  CHECK(is_odd(*tree.witness.cofactor));
  CHECK(code_of([] { distinguish_certificate(normalize(5, 1), normalize(7, 1)); }) == Errc::UnequalP);
  // Mirror images share |d| and an equivalent pair fails the inequivalence hypothesis.
  CHECK(distinguish_certificate(normalize(105, -29), normalize(105, 29)).verdict == Verdict::Inconclusive);
}

TEST_CASE("certificates from traces at level three") {
  const FamilyIndex a(3, 0), b(3, 7);
  const BigInt p = family_p(3);
  const TwoBridge ka = normalize(p, q_prime(a)), kb = normalize(p, q_prime(b));
  const RecursionTrace ta = tree_trace(a), tb = tree_trace(b);
  const Certificate c = distinguish_certificate(ka, kb, Budgets{}, &ta, &tb);
  CHECK(c.verdict == Verdict::Distinguished);
  CHECK(c.left.d == 4);   // d = -4, mirrored
  CHECK(c.right.d == 8);
  CHECK(c.left.mirrored);
}

TEST_CASE("property: diagonal agrees with the big-integer oracle") {
  for (long p = 3; p <= 61; p += 2)
    for (long q = -p + 2; q < p; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      const TwoBridge k = normalize(p, q);
      const std::int64_t d = diagonal_direct(k);
      CHECK(d == oracle::diagonal(p, q));
      CHECK(d == diagonal_sum_full(p, q));
      CHECK(d % 2 == 0);
      CHECK(diagonal_direct(mirror(k)) == -d);
      const CoveringProfile prof = linking_profile(k);
      for (std::size_t i = 0; i < prof.offdiag.size(); ++i)
        CHECK(prof.offdiag[i] == prof.offdiag[prof.offdiag.size() - 1 - i]);
    }
}

TEST_CASE("property: d is the same for q and its inverse") {
  for (long p = 3; p <= 61; p += 2)
    for (long q = -p + 2; q < p; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      long inv = 1;
      while ((inv * q - 1) % p != 0) ++inv;
      const TwoBridge k = normalize(p, q), kinv = normalize(p, inv);
      CHECK(equivalent(k, kinv));
      CHECK(diagonal_direct(k) == diagonal_direct(kinv));
    }
}

TEST_CASE("property: averaging identity and the diagonal step") {
  for (long p = 3; p <= 15; p += 2)
    for (long q = 1; q < p; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      const long big = 4 * p * p * p - p;
      CHECK(linking_sum(p, q, big - 1) == linking_sum(p, q, p - 1));
      for (int s : {1, -1})
        CHECK(oracle::diagonal(big, (4 * p * p - 1) * q + 2 * s * p) == oracle::diagonal(p, q) + 2 * s);
    }
}

TEST_CASE("property: cofactor matches Prüfer and Kirchhoff oracles") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coin(0, 1), small(-3, 3);
  for (std::size_t m = 2; m <= 7; ++m) {
    for (int t = 0; t < 40; ++t) {
      WeightMatrix w(m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) w.set(i, j, t % 2 ? small(rng) : (coin(rng) ? 1 : -1));
      const BigInt cof = laplacian_cofactor(w);
      const BigInt sign = (m % 2 == 1) ? 1 : -1;
      CHECK(cof == sign * tree_sum_bruteforce(w));
      CHECK(Rational(cof) == oracle::kirchhoff_cofactor(dense(w)));
      if (t % 2 == 0 && m % 2 == 1) CHECK(is_odd(cof));
    }
  }
  for (std::size_t m = 2; m <= 8; ++m)
    CHECK(tree_sum_bruteforce(constant_weights(m, 1)) == pow_ui(BigInt(static_cast<unsigned long>(m)), m - 2));
}

TEST_CASE("covering weights of a profile") {
  const CoveringProfile prof = linking_profile(normalize(105, -41));
  const WeightMatrix w = covering_weights(prof, 6);
  CHECK(w.size() == 6);
  CHECK(w(0, 1) == prof.offdiag[0]);
  CHECK(w(1, 4) == prof.offdiag[2]);
  CHECK(w(4, 1) == w(1, 4));
}
