#include "core/bridge.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "core/common.hpp"

namespace twobridge {

BridgeWord::BridgeWord(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (entries_[k] == 0)
      throw Error(Errc::InvalidArgument, "word entry " + std::to_string(k + 1) + " is zero");
}

BridgeWord BridgeWord::parse(std::string_view text) {
  std::vector<std::int64_t> entries;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw Error(Errc::ParseError, what + " at position " + std::to_string(pos));
  };
  skip_space();
  if (pos == text.size()) fail("empty word");
  while (true) {
    skip_space();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) {
      pos = digits;
      fail(pos < text.size() ? "unexpected '" + std::string(1, text[pos]) + "'" : "expected an integer");
    }
    std::int64_t value = 0;
    try {
      value = std::stoll(std::string(text.substr(start, pos - start)));
    } catch (const std::out_of_range&) {
      pos = start;
      fail("entry out of range");
    }
    if (value == 0) {
      pos = start;
      fail("zero entry");
    }
    entries.push_back(value);
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != ',') fail("expected ','");
    ++pos;
  }
  return BridgeWord(std::move(entries));
}

BridgeWord BridgeWord::negated() const {
  std::vector<std::int64_t> e = entries_;
  for (auto& x : e) x = -x;
  return BridgeWord(std::move(e));
}

BridgeWord BridgeWord::reversed() const {
  return BridgeWord(std::vector<std::int64_t>(entries_.rbegin(), entries_.rend()));
}

std::string BridgeWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(entries_[k]);
  }
  return out;
}

TwoBridge TwoBridge::parse(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  std::size_t offset = text.size() - body.size();
  if (body.size() >= 2 && body.substr(0, 2) == "b(") {
    if (body.back() != ')')
      throw Error(Errc::ParseError, "missing ')' at position " + std::to_string(text.size()));
    body = body.substr(2, body.size() - 3);
    offset += 2;
  }
  const auto comma = body.find(',');
  if (comma == std::string_view::npos)
    throw Error(Errc::ParseError, "expected 'p,q' at position " + std::to_string(offset));
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  BigInt p, q;
  try {
    p = parse_bigint(trim(body.substr(0, comma)));
  } catch (const Error& e) {
    throw Error(Errc::ParseError, "bad p (" + std::string(e.what()) + ") at position " + std::to_string(offset));
  }
  try {
    q = parse_bigint(trim(body.substr(comma + 1)));
  } catch (const Error& e) {
    throw Error(Errc::ParseError,
                "bad q (" + std::string(e.what()) + ") at position " + std::to_string(offset + comma + 1));
  }
  return normalize(p, q);
}

std::string TwoBridge::to_string() const { return "b(" + p_.get_str() + "," + q_.get_str() + ")"; }

WordEvaluation evaluate_word(const BridgeWord& w) {
  if (!w.has_even_length())
    throw Error(Errc::OddLengthWord, "word " + w.to_string() + " has odd length " + std::to_string(w.size()) +
                                         " and names a two-component link");
  Mat2 m;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const BigInt twice = BigInt(2) * BigInt(static_cast<long>(w[k]));
    if (k % 2 == 0) {
      // right-multiply by (1 0; 2a 1)
      m.a += twice * m.b;
      m.c += twice * m.d;
    } else {
      // right-multiply by (1 -2a; 0 1)
      m.b -= twice * m.a;
      m.d -= twice * m.c;
    }
  }
  if (m.d < 0) {
    m.a = -m.a;
    m.b = -m.b;
    m.c = -m.c;
    m.d = -m.d;
  }
  if (m.d <= 1)
    throw Error(Errc::DegenerateP, "word " + w.to_string() + " gives p = " + m.d.get_str() + ", not a nontrivial 2-bridge knot");
  WordEvaluation out{m, m.d, m.b, normalize(m.d, m.b)};
  return out;
}

TwoBridge normalize(const BigInt& p, const BigInt& q) {
  if (p <= 1) throw Error(Errc::DegenerateP, "p = " + p.get_str() + " must be an odd integer >= 3");
  if (!is_odd(p)) throw Error(Errc::EvenP, "p = " + p.get_str() + " is even");
  BigInt g = gcd(p, q);
  if (g != 1) throw Error(Errc::NotCoprime, "gcd(" + p.get_str() + ", " + q.get_str() + ") = " + g.get_str());
  const BigInt two_p = 2 * p;
  BigInt r = mod_floor(q, two_p);
  if (r >= p) r -= two_p;
  if (!is_odd(r)) r += (r > 0 ? BigInt(-p) : p);
  return TwoBridge(p, std::move(r));
}

bool equivalent(const TwoBridge& k1, const TwoBridge& k2) {
  if (k1.p() != k2.p()) return false;
  const BigInt& p = k1.p();
  return mod_floor(k1.q() - k2.q(), p) == 0 || mod_floor(k1.q() * k2.q() - 1, p) == 0;
}

TwoBridge mirror(const TwoBridge& k) { return normalize(k.p(), -k.q()); }

bool is_fibered(const BridgeWord& w) {
  if (!w.has_even_length())
    throw Error(Errc::OddLengthWord, "fiberedness needs an even-length word, got " + w.to_string());
  return std::all_of(w.entries().begin(), w.entries().end(), [](std::int64_t a) { return a == 1 || a == -1; });
}

bool word_equivalent(const BridgeWord& w1, const BridgeWord& w2) {
  return w1.size() == w2.size() && (w1 == w2 || w1 == w2.reversed());
}

namespace {

// The unique a with |value - 2*a*by| < |by|. value and by have opposite
// parity, so the remainder never equals |by|.
std::int64_t even_quotient(const BigInt& value, const BigInt& by) {
  const BigInt twice = 2 * by;
  BigInt a = floor_div(value, twice);
  if (abs(value - a * twice) > abs(by)) a += 1;
  auto small = to_int64(a);
  if (!small) throw Error(Errc::ExpansionFailure, "partial quotient " + a.get_str() + " exceeds 64 bits");
  return *small;
}

}  // namespace

BridgeWord even_cf_expansion(const TwoBridge& k) {
  // Column (x, y) = (q_even, p) of the word matrix. Peeling a1 undoes a
  // lower-triangular factor (y -= 2 a x), peeling a2 an upper-triangular one
  // (x += 2 a y); x is even and y odd throughout, and x reaches 0 after an
  // even number of steps.
  BigInt x = k.q() > 0 ? BigInt(k.q() - k.p()) : BigInt(k.q() + k.p());
  BigInt y = k.p();
  std::vector<std::int64_t> entries;
  while (x != 0) {
    const std::int64_t a_odd = even_quotient(y, x);
    y -= 2 * BigInt(static_cast<long>(a_odd)) * x;
    entries.push_back(a_odd);
    const std::int64_t a_even = -even_quotient(x, y);
    x += 2 * BigInt(static_cast<long>(a_even)) * y;
    entries.push_back(a_even);
    if (a_odd == 0 || a_even == 0)
      throw Error(Errc::ExpansionFailure, "zero partial quotient expanding " + k.to_string());
  }
  BridgeWord w(std::move(entries));
  if (!(evaluate_word(w).knot == k))
    throw Error(Errc::ExpansionFailure, "even expansion " + w.to_string() + " does not evaluate to " + k.to_string());
  return w;
}

}  // namespace twobridge
