#include "core/laurent.hpp"

#include <sstream>

#include "core/common.hpp"

namespace twobridge {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<std::int64_t, BigInt>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::constant(const BigInt& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, std::int64_t doubled_exponent) {
  LaurentPoly f;
  f.add_term(doubled_exponent, c);
  return f;
}

LaurentPoly LaurentPoly::from_coefficients(const std::vector<BigInt>& coeffs, std::int64_t low) {
  LaurentPoly f;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    f.add_term(2 * (low + static_cast<std::int64_t>(k)), coeffs[k]);
  return f;
}

void LaurentPoly::add_term(std::int64_t e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly::coefficient(std::int64_t doubled_exponent) const {
  auto it = terms_.find(doubled_exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool LaurentPoly::has_half_exponents() const noexcept {
  for (const auto& [e, c] : terms_)
    if (e % 2 != 0) return true;
  return false;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& g) {
  for (const auto& [e, c] : g.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& g) {
  for (const auto& [e, c] : g.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly r;
  for (const auto& [e1, c1] : f.terms_)
    for (const auto& [e2, c2] : g.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& g) {
  *this = *this * g;
  return *this;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c, std::int64_t doubled_shift) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + doubled_shift, v * c);
  return r;
}

BigInt LaurentPoly::value_at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::is_palindromic() const {
  for (const auto& [e, c] : terms_) {
    auto it = terms_.find(-e);
    if (it == terms_.end() || it->second != c) return false;
  }
  return true;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (e == 2) continue;
    if (e % 2 == 0)
      out << "^" << e / 2;
    else
      out << "^(" << e << "/2)";
  }
  return out.str();
}

LaurentPoly symmetrize(const LaurentPoly& f) {
  if (f.is_zero()) throw Error(Errc::NotSymmetrizable, "the zero polynomial has no symmetric unit multiple");
  const std::int64_t span = f.min_exponent() + f.max_exponent();
  if (span % 2 != 0)
    throw Error(Errc::NotSymmetrizable, "exponent range of " + f.to_string() + " has no integral center");
  LaurentPoly g = f.shifted(-span / 2);
  if (!g.is_palindromic())
    throw Error(Errc::NotSymmetrizable, f.to_string() + " is not a unit multiple of a palindromic polynomial");
  const BigInt at_one = g.value_at_one();
  const bool flip = at_one < 0 || (at_one == 0 && g.terms().rbegin()->second < 0);
  return flip ? -g : g;
}

bool equal_up_to_units(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.size() != g.size()) return false;
  const LaurentPoly aligned = g.shifted(f.min_exponent() - g.min_exponent());
  return aligned == f || -aligned == f;
}

namespace {

Rational rational_power(const Rational& base, std::int64_t exponent) {
  const unsigned long k = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  BigInt num = pow_ui(base.get_num(), k);
  BigInt den = pow_ui(base.get_den(), k);
  Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Rational evaluate(const LaurentPoly& f, const Rational& x) {
  if (x == 0) throw Error(Errc::DivisionByZero, "Laurent polynomials are undefined at t = 0");
  // With y^2 = x the value is sum c * y^{doubled exponent}.
  Rational y;
  std::int64_t divisor = 1;
  if (f.has_half_exponents()) {
    const BigInt& num = x.get_num();
    const BigInt& den = x.get_den();
    if (x < 0 || mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
      throw Error(Errc::HalfExponentAtNonSquare,
                  "t^(1/2) is not rational at t = " + twobridge::to_string(x));
    y = Rational(BigInt(sqrt(num)), BigInt(sqrt(den)));
  } else {
    y = x;
    divisor = 2;
  }
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) total += Rational(c) * rational_power(y, e / divisor);
  total.canonicalize();
  return total;
}

LaurentPoly substitute_neg(const LaurentPoly& f) {
  if (f.has_half_exponents())
    throw Error(Errc::HalfExponentPresent, "t -> -t needs integer exponents: " + f.to_string());
  LaurentPoly::Terms terms;
  for (const auto& [e, c] : f.terms()) terms.emplace(e, (e / 2) % 2 != 0 ? BigInt(-c) : c);
  return LaurentPoly(std::move(terms));
}

}  // namespace twobridge
