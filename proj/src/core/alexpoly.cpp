#include "core/alexpoly.hpp"

namespace twobridge {

SeifertMatrix::SeifertMatrix(const BridgeWord& w) : diagonal_(w.entries()) {
  if (!w.has_even_length())
    throw Error(Errc::OddLengthWord, "Seifert matrix needs an even-length word, got " + w.to_string());
}

std::int64_t SeifertMatrix::operator()(std::size_t row, std::size_t col) const {
  if (row == col) return diagonal_.at(row);
  if (row == col + 1) return 1;
  return 0;
}

std::vector<BigInt> SeifertMatrix::alexander_determinant() const {
  // V - tV^T is tridiagonal: diagonal a_k(1 - t), super -t, sub 1, so
  // D_k = a_k (1 - t) D_{k-1} + t D_{k-2}.
  std::vector<BigInt> prev2;       // D_{k-2}
  std::vector<BigInt> prev{1};     // D_{k-1}, D_0 = 1
  for (std::size_t k = 0; k < diagonal_.size(); ++k) {
    const BigInt a(static_cast<long>(diagonal_[k]));
    std::vector<BigInt> cur(prev.size() + 1);
    for (std::size_t e = 0; e < prev.size(); ++e) {
      cur[e] += a * prev[e];
      cur[e + 1] -= a * prev[e];
    }
    if (k > 0) {
      if (cur.size() < prev2.size() + 1) cur.resize(prev2.size() + 1);
      for (std::size_t e = 0; e < prev2.size(); ++e) cur[e + 1] += prev2[e];
    }
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

LaurentPoly alexander_from_pq(const TwoBridge& k, std::uint64_t max_terms) {
  const auto p64 = to_int64(k.p());
  if (!p64 || static_cast<std::uint64_t>(*p64) > max_terms)
    throw Error(Errc::PTooLarge, "closed-form sum for " + k.to_string() + " exceeds the budget of " +
                                     std::to_string(max_terms) + " terms");
  if (!is_odd(k.q())) throw Error(Errc::EvenQ, "closed-form sum requires odd q, got " + k.to_string());
  const std::int64_t p = *p64;
  const std::int64_t q = *to_int64(k.q());

  // Tally (-1)^j at exponent h(j). |h| is at most the degree, usually far
  // below p, so the two halves grow on demand.
  std::vector<std::int64_t> nonneg{1};
  std::vector<std::int64_t> neg;
  auto bump = [&](std::int64_t e, std::int64_t by) {
    auto& side = e >= 0 ? nonneg : neg;
    const auto idx = static_cast<std::size_t>(e >= 0 ? e : -e - 1);
    if (idx >= side.size()) side.resize(idx + 1, 0);
    side[idx] += by;
  };
  std::int64_t h = 0;
  std::int64_t rem = 0;  // j*q - floor(j*q/p)*p, kept in [0, p)
  bool floor_odd = false;
  for (std::int64_t j = 1; j < p; ++j) {
    rem += q;
    if (rem >= p) {
      rem -= p;
      floor_odd = !floor_odd;
    } else if (rem < 0) {
      rem += p;
      floor_odd = !floor_odd;
    }
    h += floor_odd ? -1 : 1;
    bump(h, (j % 2 == 0) ? 1 : -1);
  }
  LaurentPoly::Terms terms;
  for (std::size_t idx = 0; idx < nonneg.size(); ++idx)
    if (nonneg[idx] != 0) terms.emplace(2 * static_cast<std::int64_t>(idx), BigInt(static_cast<long>(nonneg[idx])));
  for (std::size_t idx = 0; idx < neg.size(); ++idx)
    if (neg[idx] != 0) terms.emplace(-2 * (static_cast<std::int64_t>(idx) + 1), BigInt(static_cast<long>(neg[idx])));
  return symmetrize(LaurentPoly(std::move(terms)));
}

WordAlexander alexander_from_word_detailed(const BridgeWord& w) {
  try {
    return {symmetrize(LaurentPoly::from_coefficients(SeifertMatrix(w).alexander_determinant())), false};
  } catch (const Error& e) {
    if (e.code() != Errc::NotSymmetrizable) throw;
  }
  try {
    return {symmetrize(LaurentPoly::from_coefficients(SeifertMatrix(w.negated()).alexander_determinant())), true};
  } catch (const Error& e) {
    if (e.code() != Errc::NotSymmetrizable) throw;
    throw Error(Errc::NotSymmetrizable,
                "Seifert determinant of " + w.to_string() + " is not symmetrizable for the word or its mirror");
  }
}

ValidationReport validate_alexander(const BridgeWord& w, const LaurentPoly& f, std::uint64_t cross_check_budget) {
  const WordEvaluation ev = evaluate_word(w);
  ValidationReport report;
  report.p = ev.knot.p();

  const BigInt at_one = f.value_at_one();
  report.checks.push_back({"value_at_one", at_one == 1 || at_one == -1, "f(1) = " + at_one.get_str()});

  std::string minus_one_detail;
  bool minus_one_ok = false;
  if (f.has_half_exponents()) {
    minus_one_detail = "f has half-integer exponents";
  } else {
    const Rational v = evaluate(f, Rational(-1));
    minus_one_ok = v.get_den() == 1 && abs(v.get_num()) == report.p;
    minus_one_detail = "|f(-1)| = " + to_string(Rational(abs(v))) + ", p = " + report.p.get_str();
  }
  report.checks.push_back({"determinant", minus_one_ok, minus_one_detail});

  report.checks.push_back({"palindromic", !f.is_zero() && f.is_palindromic(), f.to_string()});

  if (report.p <= BigInt(static_cast<unsigned long>(cross_check_budget))) {
    const LaurentPoly reference = alexander_from_pq(ev.knot, cross_check_budget);
    report.checks.push_back({"closed_form_agreement", equal_up_to_units(f, reference),
                             "closed form for " + ev.knot.to_string() + ": " + reference.to_string()});
  }
  return report;
}

}  // namespace twobridge
