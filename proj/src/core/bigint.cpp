#include "core/bigint.hpp"

#include <limits>

#include "core/common.hpp"

namespace twobridge {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::OddLengthWord: return "OddLengthWord";
    case Errc::DegenerateP: return "DegenerateP";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::EvenP: return "EvenP";
    case Errc::EvenQ: return "EvenQ";
    case Errc::NotSymmetrizable: return "NotSymmetrizable";
    case Errc::HalfExponentAtNonSquare: return "HalfExponentAtNonSquare";
    case Errc::HalfExponentPresent: return "HalfExponentPresent";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::PTooLarge: return "PTooLarge";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::BaseBudgetExceeded: return "BaseBudgetExceeded";
    case Errc::TraceMismatch: return "TraceMismatch";
    case Errc::SizeTooSmall: return "SizeTooSmall";
    case Errc::TooLarge: return "TooLarge";
    case Errc::UnequalP: return "UnequalP";
    case Errc::ExpansionFailure: return "ExpansionFailure";
  }
  return "Unknown";
}

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size())
    throw Error(Errc::ParseError, "expected digits at position " + std::to_string(pos));
  for (std::size_t k = pos; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9')
      throw Error(Errc::ParseError, "unexpected character '" + std::string(1, text[k]) +
                                        "' at position " + std::to_string(k));
  }
  BigInt value(std::string(text.substr(pos)), 10);
  return negative ? BigInt(-value) : value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

std::string to_string(const Rational& x) { return x.get_str(10); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::optional<std::int64_t> to_int64(const BigInt& x) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  if (x < lo || x > hi) return std::nullopt;
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return std::stoll(x.get_str());
}

BigInt pow_ui(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

}  // namespace twobridge
