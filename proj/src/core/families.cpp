#include "core/families.hpp"

#include <set>

namespace twobridge {

FamilyIndex::FamilyIndex(unsigned n, std::uint64_t i) : n_(n), i_(i) {
  if (n > 62) throw Error(Errc::InvalidArgument, "family level " + std::to_string(n) + " is beyond 62");
  if (i >> n != 0)
    throw Error(Errc::InvalidArgument,
                "member " + std::to_string(i) + " is out of range for level " + std::to_string(n));
}

std::vector<int> FamilyIndex::bits() const {
  std::vector<int> out(n_);
  for (unsigned j = 0; j < n_; ++j) out[j] = bit(j);
  return out;
}

FamilyIndex FamilyIndex::parent() const {
  if (n_ == 0) throw Error(Errc::InvalidArgument, "level 0 has no parent");
  return FamilyIndex(n_ - 1, i_ & ((std::uint64_t{1} << (n_ - 1)) - 1));
}

namespace {

void require_sign(int sign) {
  if (sign != 1 && sign != -1) throw Error(Errc::InvalidArgument, "sign must be +1 or -1");
}

void require_positive(unsigned n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "torus family starts at n = 1");
}

}  // namespace

BridgeWord kn_word(unsigned n) {
  require_positive(n);
  return BridgeWord(std::vector<std::int64_t>(2 * n, 1));
}

BridgeWord kn_pm_word(unsigned n, int sign) {
  require_positive(n);
  require_sign(sign);
  std::vector<std::int64_t> e;
  e.reserve(6 * n + 2);
  e.insert(e.end(), 2 * n, 1);
  e.push_back(sign);
  e.insert(e.end(), 2 * n, -1);
  e.push_back(sign);
  e.insert(e.end(), 2 * n, 1);
  return BridgeWord(std::move(e));
}

TorusClosedForm kn_pm_closed_form_raw(unsigned n, int sign) {
  require_positive(n);
  require_sign(sign);
  const BigInt m(static_cast<unsigned long>(n));
  const BigInt a = 2 * m + 1, b = 4 * m + 1, c = 4 * m + 3;
  return {a * b * c, 2 * m * b * c + 2 * sign * a, -b * c + 2 * sign * a};
}

TwoBridge kn_pm_closed_form(unsigned n, int sign) {
  const TorusClosedForm f = kn_pm_closed_form_raw(n, sign);
  TwoBridge first = normalize(f.p, f.q_first);
  if (!(first == normalize(f.p, f.q_second)))
    throw Error(Errc::ExpansionFailure, "closed forms of K_" + std::to_string(n) + " disagree");
  return first;
}

RecursionTrace kn_pm_trace(unsigned n, int sign) {
  require_positive(n);
  require_sign(sign);
  return RecursionTrace{BigInt(2 * static_cast<unsigned long>(n) + 1), 1, {-sign}, true};
}

BridgeWord w_word(const FamilyIndex& index) {
  std::vector<std::int64_t> word{1, 1};
  for (unsigned level = 0; level < index.n(); ++level) {
    const int s = step_sign(index.bit(level));
    std::vector<std::int64_t> next;
    next.reserve(3 * word.size() + 2);
    next.insert(next.end(), word.begin(), word.end());
    next.push_back(s);
    for (auto a : word) next.push_back(-a);
    next.push_back(s);
    next.insert(next.end(), word.begin(), word.end());
    word = std::move(next);
  }
  return BridgeWord(std::move(word));
}

BigInt family_p(unsigned n) {
  BigInt p = 3;
  for (unsigned k = 0; k < n; ++k) p *= 4 * p * p - 1;
  return p;
}

namespace {

BigInt run_q_recursion(const FamilyIndex& index, BigInt q) {
  BigInt p = 3;
  for (unsigned j = 0; j < index.n(); ++j) {
    const BigInt factor = 4 * p * p - 1;
    q = q * factor + 2 * step_sign(index.bit(j)) * p;
    p *= factor;
  }
  return q;
}

}  // namespace

FamilyPQ pq_recursion(const FamilyIndex& index) { return {family_p(index.n()), run_q_recursion(index, 2)}; }

BigInt q_prime(const FamilyIndex& index) { return run_q_recursion(index, -1); }

Rational q_closed_form(const FamilyIndex& index) {
  const BigInt pn = family_p(index.n());
  Rational q = Rational(2 * pn, 3);
  BigInt pj = 3;
  for (unsigned j = 0; j < index.n(); ++j) {
    const BigInt factor = 4 * pj * pj - 1;
    q += Rational(2 * step_sign(index.bit(j)) * pn, factor);
    pj *= factor;
  }
  q.canonicalize();
  return q;
}

RecursionTrace tree_trace(const FamilyIndex& index) {
  RecursionTrace t{3, -1, {}, false};
  for (unsigned j = 0; j < index.n(); ++j) t.signs.push_back(step_sign(index.bit(j)));
  return t;
}

BridgeWord kanenobu_compose(const BridgeWord& a, int sign) {
  require_sign(sign);
  if (!a.has_even_length())
    throw Error(Errc::OddLengthWord, "Kanenobu composition needs an even-length word, got " + a.to_string());
  std::vector<std::int64_t> e(a.entries());
  e.push_back(sign);
  const auto back = a.reversed().negated();
  e.insert(e.end(), back.entries().begin(), back.entries().end());
  e.push_back(sign);
  e.insert(e.end(), a.entries().begin(), a.entries().end());
  return BridgeWord(std::move(e));
}

DiagFamilySet diag_family_set(unsigned n, const Budgets& budgets) {
  if (n > 62) throw Error(Errc::InvalidArgument, "family level " + std::to_string(n) + " is beyond 62");
  DiagFamilySet out;
  const BigInt p = family_p(n);
  std::set<std::int64_t> abs_values;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    const FamilyIndex idx(n, i);
    const std::int64_t d = diagonal_recursive(p, q_prime(idx), tree_trace(idx), budgets.direct);
    out.values.push_back(d);
    ++out.multiset[d];
    abs_values.insert(d < 0 ? -d : d);
  }
  out.distinct_abs = abs_values.size();
  return out;
}

}  // namespace twobridge
