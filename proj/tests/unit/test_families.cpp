#include "core/families.hpp"

#include <set>

#include "core/alexpoly.hpp"
#include "helpers.hpp"
#include "oracles/oracles.hpp"

using namespace twobridge;

using W = std::vector<std::int64_t>;

TEST_CASE("torus words") {
  CHECK(kn_word(1).entries() == W{1, 1});
  CHECK(kn_word(2).entries() == W{1, 1, 1, 1});
  CHECK(kn_pm_word(1, 1).entries() == W{1, 1, 1, -1, -1, 1, 1, 1});
  CHECK(kn_pm_word(1, -1).entries() == W{1, 1, -1, -1, -1, -1, 1, 1});
  CHECK(kn_pm_word(3, 1).size() == 20);
}

TEST_CASE("torus closed forms") {
  CHECK(kn_pm_closed_form(1, 1) == normalize(105, -29));
  CHECK(kn_pm_closed_form(1, -1) == normalize(105, -41));
  const TorusClosedForm cf = kn_pm_closed_form_raw(1, 1);
  CHECK(cf.p == 105);
  CHECK(cf.q_first == 76);
  for (unsigned n = 1; n <= 10; ++n)
    for (int s : {1, -1}) {
      const TwoBridge k = evaluate_word(kn_pm_word(n, s)).knot;
      CHECK(k == kn_pm_closed_form(n, s));
      const BigInt p = BigInt(2 * n + 1) * (4 * n + 1) * (4 * n + 3);
      CHECK(k.p() == p);
      const auto [op, oq] = oracle::word_pq(kn_pm_word(n, s).entries());
      CHECK(op == p);
      CHECK(oracle::same_knot(p, oq, BigInt(2 * n) * (4 * n + 1) * (4 * n + 3) + 2 * s * static_cast<long>(2 * n + 1)));
    }
}

TEST_CASE("torus traces reach the mirror") {
  for (unsigned n = 1; n <= 10; ++n)
    for (int s : {1, -1}) {
      const TwoBridge k = evaluate_word(kn_pm_word(n, s)).knot;
      CHECK(diagonal_recursive(k.p(), k.q(), kn_pm_trace(n, s)) == static_cast<std::int64_t>(2 * n) + 2 * s);
      CHECK(diagonal_direct(k) == static_cast<std::int64_t>(2 * n) + 2 * s);
    }
}

TEST_CASE("tree words") {
  CHECK(w_word(FamilyIndex(0, 0)).entries() == W{1, 1});
  CHECK(w_word(FamilyIndex(1, 0)).entries() == W{1, 1, -1, -1, -1, -1, 1, 1});
  CHECK(w_word(FamilyIndex(1, 1)).entries() == W{1, 1, 1, -1, -1, 1, 1, 1});
  CHECK(w_word(FamilyIndex(2, 3)).entries() ==
        W{1, 1, 1, -1, -1, 1, 1, 1, 1, -1, -1, -1, 1, 1, -1, -1, -1, 1, 1, 1, 1, -1, -1, 1, 1, 1});
  CHECK(w_word(FamilyIndex(3, 5)).size() == 80);
  CHECK_THROWS_AS(FamilyIndex(2, 4), Error);
}

TEST_CASE("Kanenobu composition") {
  CHECK(kanenobu_compose(BridgeWord({1, 1}), 1).entries() == W{1, 1, 1, -1, -1, 1, 1, 1});
  CHECK(kanenobu_compose(BridgeWord({1, 1}), -1).entries() == W{1, 1, -1, -1, -1, -1, 1, 1});
  CHECK(kanenobu_compose(BridgeWord({1, 1}), 1) == kn_pm_word(1, 1));
  CHECK_THROWS_AS(kanenobu_compose(BridgeWord({1}), 1), Error);
  for (unsigned n = 0; n <= 3; ++n)
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i)
      for (int eps : {0, 1}) {
        const FamilyIndex child(n + 1, i + (static_cast<std::uint64_t>(eps) << n));
        CHECK(w_word(child) == kanenobu_compose(w_word(FamilyIndex(n, i)), step_sign(eps)));
      }
}

TEST_CASE("p and q recursion") {
  CHECK(pq_recursion(FamilyIndex(0, 0)).p == 3);
  CHECK(pq_recursion(FamilyIndex(0, 0)).q == 2);
  CHECK(pq_recursion(FamilyIndex(1, 0)).q == 64);
  CHECK(pq_recursion(FamilyIndex(1, 1)).q == 76);
  CHECK(family_p(1) == 105);
  CHECK(family_p(2) == 4630395);
  CHECK(family_p(3) == BigInt(4630395) * (BigInt(4) * 4630395 * 4630395 - 1));
  CHECK(q_prime(FamilyIndex(0, 0)) == -1);
  CHECK(q_prime(FamilyIndex(1, 0)) == -41);
  CHECK(q_prime(FamilyIndex(1, 1)) == -29);
  CHECK(equivalent(normalize(105, 64), normalize(105, -41)));
}

TEST_CASE("property: q q' = 1 and closed form for n <= 4") {
  for (unsigned n = 0; n <= 4; ++n) {
    const BigInt p = family_p(n);
    std::set<std::string> seen;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const FamilyIndex idx(n, i);
      const FamilyPQ pq = pq_recursion(idx);
      CHECK(pq.p == p);
      CHECK(mod_floor(pq.q * q_prime(idx) - 1, p) == 0);
      CHECK(q_closed_form(idx) == Rational(pq.q));
      if (n <= 3) {
        const auto [op, oq] = oracle::word_pq(w_word(idx).entries());
        CHECK(op == p);
        CHECK(oq == pq.q);
      }
      seen.insert(normalize(p, pq.q).to_string());
    }
    CHECK(seen.size() == (std::size_t{1} << n));
  }
}

TEST_CASE("property: family members are fibered and pairwise inequivalent") {
  for (unsigned n = 0; n <= 2; ++n) {
    std::vector<TwoBridge> ks;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const BridgeWord w = w_word(FamilyIndex(n, i));
      CHECK(is_fibered(w));
      ks.push_back(evaluate_word(w).knot);
    }
    for (std::size_t a = 0; a < ks.size(); ++a)
      for (std::size_t b = 0; b < a; ++b) CHECK_FALSE(oracle::same_knot(ks[a].p(), ks[a].q(), ks[b].q()));
  }
  for (unsigned n = 1; n <= 5; ++n) CHECK(is_fibered(kn_pm_word(n, 1)));
}

TEST_CASE("diagonal family sets") {
  const DiagFamilySet s0 = diag_family_set(0);
  CHECK(s0.values == std::vector<std::int64_t>{2});
  const DiagFamilySet s1 = diag_family_set(1);
  CHECK(s1.values == std::vector<std::int64_t>{0, 4});
  CHECK(s1.distinct_abs == 2);
  const DiagFamilySet s2 = diag_family_set(2);
  CHECK(s2.multiset == std::map<std::int64_t, std::size_t>{{-2, 1}, {2, 2}, {6, 1}});
  CHECK(s2.distinct_abs == 2);
  for (unsigned n = 0; n <= 8; ++n) {
    const DiagFamilySet s = diag_family_set(n);
    CHECK(s.distinct_abs == (n + 1) / 2 + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      // binomial multiplicity of 2 - 2n + 4k
      BigInt c = 1;
      for (std::size_t j = 0; j < k; ++j) c = c * (n - j) / (j + 1);
      CHECK(BigInt(static_cast<unsigned long>(s.multiset.at(2 - 2 * static_cast<std::int64_t>(n) + 4 * static_cast<std::int64_t>(k)))) == c);
    }
  }
}

TEST_CASE("direct and recursive diagonals agree on K(n,i) for n <= 2") {
  for (unsigned n = 0; n <= 2; ++n)
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const FamilyIndex idx(n, i);
      const TwoBridge k = normalize(family_p(n), pq_recursion(idx).q);
      CHECK(diagonal_direct(k) == diagonal_recursive(k.p(), k.q(), tree_trace(idx)));
    }
  // Independent oracle on level 1.
  CHECK(oracle::diagonal(105, -41) == 0);
  CHECK(oracle::diagonal(105, -29) == 4);
}
