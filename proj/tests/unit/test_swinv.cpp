#include "core/swinv.hpp"

#include <random>

#include "core/alexpoly.hpp"
#include "core/families.hpp"
#include "helpers.hpp"

using namespace twobridge;
using twobridge::test::poly;

TEST_CASE("knot surgery examples") {
  const LaurentPoly trefoil = poly({1, -1, 1}, -1);
  CHECK(sw_knot_surgery(default_sw_base(), trefoil).poly == trefoil);
  CHECK(sw_knot_surgery(trefoil, LaurentPoly::constant(1)).poly == trefoil);
  CHECK(sw_knot_surgery(trefoil, trefoil).poly == poly({1, -2, 3, -2, 1}, -2));
}

TEST_CASE("covering base examples") {
  // Symmetrize fixes the sign by a positive value at 1.
  CHECK(sw_covering_base(poly({1, -1, 1}, -1)).poly == poly({1, 0, 1, 0, 1}, -2));
  CHECK(sw_covering_base(LaurentPoly::constant(1)).poly == LaurentPoly::constant(1));
  CHECK(sw_covering_base(poly({-1, 3, -1}, -1)).poly == poly({-1, 0, 7, 0, -1}, -2));
  CHECK_THROWS_AS(sw_covering_base(LaurentPoly{{1, 1}, {-1, 1}}), Error);
}

TEST_CASE("SW equality examples") {
  const FormalSW a = sw_covering_base(alexander_from_word(kn_pm_word(1, 1)));
  const FormalSW b = sw_covering_base(alexander_from_word(kn_pm_word(1, -1)));
  CHECK(sw_equal(a, b));
  CHECK_FALSE(sw_equal(sw_covering_base(poly({1, -1, 1}, -1)), sw_covering_base(poly({-1, 3, -1}, -1))));
  CHECK(sw_equal(a, a));
}

TEST_CASE("property: covering base is even in tau") {
  for (unsigned n = 0; n <= 3; ++n)
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
      const FormalSW s = sw_covering_base(alexander_from_word(w_word(FamilyIndex(n, i))));
      for (const auto& [e, c] : s.poly.terms()) CHECK(e % 4 == 0);
    }
  for (unsigned n = 1; n <= 6; ++n) {
    const FormalSW s = sw_covering_base(alexander_from_word(kn_pm_word(n, -1)));
    for (const auto& [e, c] : s.poly.terms()) CHECK(e % 4 == 0);
  }
}

TEST_CASE("property: covering SW is constant on each family level") {
  for (unsigned n = 0; n <= 3; ++n) {
    const FormalSW first = sw_covering_base(alexander_from_word(w_word(FamilyIndex(n, 0))));
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i)
      CHECK(sw_equal(first, sw_covering_base(alexander_from_word(w_word(FamilyIndex(n, i))))));
  }
}

TEST_CASE("property: surgery order does not matter") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> coin(0, 1), half(1, 4);
  for (int t = 0; t < 50; ++t) {
    auto word = [&] {
      std::vector<std::int64_t> e(2 * half(rng));
      for (auto& x : e) x = coin(rng) ? 1 : -1;
      return BridgeWord(e);
    };
    const LaurentPoly k = alexander_from_word(word()), j = alexander_from_word(word());
    const LaurentPoly base = default_sw_base();
    CHECK(sw_equal(sw_knot_surgery(sw_knot_surgery(base, k).poly, j), sw_knot_surgery(sw_knot_surgery(base, j).poly, k)));
  }
}
