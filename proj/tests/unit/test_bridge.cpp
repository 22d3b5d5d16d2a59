#include "core/bridge.hpp"

#include <random>

#include "core/common.hpp"
#include "helpers.hpp"
#include "oracles/oracles.hpp"

using namespace twobridge;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

BridgeWord random_word(std::mt19937_64& rng, std::size_t max_half, int max_entry) {
  std::uniform_int_distribution<std::size_t> half(1, max_half);
  std::uniform_int_distribution<int> entry(-max_entry, max_entry);
  std::vector<std::int64_t> e(2 * half(rng));
  for (auto& x : e) {
    do x = entry(rng);
    while (x == 0);
  }
  return BridgeWord(e);
}

}  // namespace

TEST_CASE("word parsing") {
  CHECK(BridgeWord::parse("1, 1,-1 ,-1").entries() == std::vector<std::int64_t>{1, 1, -1, -1});
  CHECK(BridgeWord::parse("3").size() == 1);
  CHECK(code_of([] { BridgeWord::parse("1,,2"); }) == Errc::ParseError);
  CHECK(code_of([] { BridgeWord::parse("1,0"); }) == Errc::ParseError);
  CHECK(code_of([] { BridgeWord::parse("1,x"); }) == Errc::ParseError);
  CHECK(code_of([] { BridgeWord::parse(""); }) == Errc::ParseError);
  try {
    BridgeWord::parse("1,2,z");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("evaluate_word examples") {
  const WordEvaluation d11 = evaluate_word(BridgeWord({1, 1}));
  CHECK(d11.raw_p == 3);
  CHECK(d11.raw_q == 2);
  CHECK(d11.knot.p() == 3);
  CHECK(d11.knot.q() == -1);
  const WordEvaluation d1m1 = evaluate_word(BridgeWord({1, -1}));
  CHECK(d1m1.raw_p == 5);
  CHECK(d1m1.raw_q == 2);
  for (unsigned n = 1; n <= 8; ++n) {
    const WordEvaluation ev = evaluate_word(BridgeWord(std::vector<std::int64_t>(2 * n, 1)));
    CHECK(ev.raw_p == 2 * n + 1);
    CHECK(ev.raw_q == 2 * n);
  }
  CHECK(code_of([] { evaluate_word(BridgeWord({1})); }) == Errc::OddLengthWord);
}

TEST_CASE("normalize examples and errors") {
  CHECK(normalize(3, 2) == normalize(3, -1));
  CHECK(normalize(3, 2).q() == -1);
  CHECK(normalize(5, 4).q() == -1);
  CHECK(normalize(105, 64).q() == -41);
  CHECK(normalize(105, 64 + 210 * 7).q() == -41);
  CHECK(normalize(105, -41).q() == -41);
  CHECK(normalize(7, 3).q() == 3);
  CHECK(code_of([] { normalize(1, 0); }) == Errc::DegenerateP);
  CHECK(code_of([] { normalize(-5, 2); }) == Errc::DegenerateP);
  CHECK(code_of([] { normalize(6, 1); }) == Errc::EvenP);
  CHECK(code_of([] { normalize(9, 6); }) == Errc::NotCoprime);
  CHECK(TwoBridge::parse("b(105,64)") == normalize(105, -41));
  CHECK(TwoBridge::parse(" 105 , 64 ") == normalize(105, -41));
  CHECK(code_of([] { TwoBridge::parse("b(105"); }) == Errc::ParseError);
  CHECK(normalize(105, -41).to_string() == "b(105,-41)");
}

TEST_CASE("equivalence and mirror examples") {
  CHECK(equivalent(normalize(5, -3), normalize(5, -3)));
  CHECK(equivalent(normalize(5, 3), normalize(5, -3)));
  CHECK(equivalent(normalize(105, 64), normalize(105, -41)));
  CHECK(equivalent(normalize(5, 2), normalize(5, 3)));
  CHECK_FALSE(equivalent(normalize(5, 1), normalize(5, 3)));
  CHECK_FALSE(equivalent(normalize(7, 1), normalize(9, 1)));
  CHECK(mirror(normalize(3, -1)) == normalize(3, 1));
  CHECK(mirror(normalize(105, -41)) == normalize(105, 41));
  const TwoBridge k = normalize(105, -29);
  CHECK(mirror(mirror(k)) == k);
}

TEST_CASE("fiberedness and word equivalence") {
  CHECK(is_fibered(BridgeWord({1, 1, -1, -1, -1, -1, 1, 1})));
  CHECK_FALSE(is_fibered(BridgeWord({2, 1})));
  CHECK(is_fibered(BridgeWord({1, 1})));
  CHECK(code_of([] { is_fibered(BridgeWord({1, 1, 1})); }) == Errc::OddLengthWord);
  CHECK(word_equivalent(BridgeWord({1, 2, 3, 4}), BridgeWord({4, 3, 2, 1})));
  CHECK(word_equivalent(BridgeWord({1, 2, 3, 4}), BridgeWord({1, 2, 3, 4})));
  CHECK_FALSE(word_equivalent(BridgeWord({1, 1, -1, -1}), BridgeWord({1, -1, 1, -1})));
}

TEST_CASE("even continued fraction expansion") {
  const BridgeWord t = even_cf_expansion(normalize(3, -1));
  CHECK(equivalent(evaluate_word(t).knot, normalize(3, -1)));
  CHECK((word_equivalent(t, BridgeWord({1, 1})) || word_equivalent(t.negated(), BridgeWord({1, 1}))));
  const BridgeWord f = even_cf_expansion(normalize(5, 2));
  CHECK(equivalent(evaluate_word(f).knot, normalize(5, 2)));
  CHECK((word_equivalent(f, BridgeWord({1, -1})) || word_equivalent(f.negated(), BridgeWord({1, -1}))));
  CHECK(evaluate_word(even_cf_expansion(normalize(105, -41))).knot == normalize(105, -41));
}

TEST_CASE("property: evaluate_word matches the generator-by-generator oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const BridgeWord w = random_word(rng, 4, 3);
    const WordEvaluation ev = evaluate_word(w);
    const auto [p, q] = oracle::word_pq(w.entries());
    CHECK(ev.raw_p == p);
    CHECK(ev.raw_q == q);
    CHECK(ev.matrix.det() == 1);
    CHECK(is_odd(ev.knot.p()));
    CHECK(oracle::same_knot(p, q, ev.knot.q()));
  }
}

TEST_CASE("property: expansion round trip") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const BridgeWord w = random_word(rng, 5, 4);
    const TwoBridge k = evaluate_word(w).knot;
    const BridgeWord e = even_cf_expansion(k);
    CHECK(equivalent(evaluate_word(e).knot, k));
    CHECK(evaluate_word(e).knot == k);
  }
  for (long p = 3; p < 80; p += 2)
    for (long q = -p + 2; q < p; q += 2)
      if (std::gcd(p, q) == 1) CHECK(evaluate_word(even_cf_expansion(normalize(p, q))).knot == normalize(p, q));
}

TEST_CASE("property: word equivalence implies knot equivalence") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const BridgeWord w = random_word(rng, 4, 3);
    const BridgeWord r = w.reversed();
    CHECK(word_equivalent(w, r));
    CHECK(equivalent(evaluate_word(w).knot, evaluate_word(r).knot));
    CHECK(equivalent(evaluate_word(w.negated()).knot, mirror(evaluate_word(w).knot)));
  }
}

TEST_CASE("property: equivalent is an equivalence relation") {
  std::vector<TwoBridge> ks;
  for (long q = -19; q < 21; q += 2)
    if (std::gcd(21L, q) == 1) ks.push_back(normalize(21, q));
  for (const auto& a : ks) {
    CHECK(equivalent(a, a));
    for (const auto& b : ks) {
      CHECK(equivalent(a, b) == equivalent(b, a));
      CHECK(equivalent(a, b) == oracle::same_knot(21, a.q(), b.q()));
      for (const auto& c : ks)
        if (equivalent(a, b) && equivalent(b, c)) CHECK(equivalent(a, c));
    }
  }
}
