#include "core/covering.hpp"

#include <algorithm>
#include <numeric>

namespace twobridge {

namespace {

std::int64_t checked_small_p(const TwoBridge& k, std::uint64_t budget, Errc code, const char* what) {
  const auto p = to_int64(k.p());
  if (!p || static_cast<std::uint64_t>(*p) > budget)
    throw Error(code, std::string(what) + " for " + k.to_string() + " exceeds the budget p <= " + std::to_string(budget));
  return *p;
}

// Walks floor(q k / p) for k = 1, 2, ... tracking only its parity.
class FloorParity {
 public:
  FloorParity(std::int64_t p, std::int64_t q) : p_(p) {
    step_ = q % p;
    if (step_ < 0) step_ += p;
    const std::int64_t whole = (q - step_) / p;  // floor(q / p)
    whole_odd_ = (whole % 2) != 0;
  }

  // Parity of floor(q k / p) for the next k.
  bool next() {
    rem_ += step_;
    if (rem_ >= p_) {
      rem_ -= p_;
      odd_ = !odd_;
    }
    if (whole_odd_) odd_ = !odd_;
    return odd_;
  }

 private:
  std::int64_t p_;
  std::int64_t step_ = 0;
  bool whole_odd_ = false;
  std::int64_t rem_ = 0;
  bool odd_ = false;
};

}  // namespace

std::int64_t linking_sum(std::int64_t p, std::int64_t q, std::int64_t upto) {
  FloorParity walk(p, q);
  std::int64_t s = 0;
  for (std::int64_t k = 1; k <= upto; ++k) s += walk.next() ? -1 : 1;
  return s;
}

std::int64_t diagonal_sum_full(std::int64_t p, std::int64_t q) { return -linking_sum(p, q, p - 1); }

std::int64_t diagonal_direct(const TwoBridge& k, std::uint64_t budget) {
  const std::int64_t p = checked_small_p(k, budget, Errc::BudgetExceeded, "direct diagonal sum");
  const std::int64_t q = *to_int64(k.q());
  return -2 * linking_sum(p, q, (p - 1) / 2);
}

CoveringProfile linking_profile(const TwoBridge& k, const Budgets& budgets, bool require_full) {
  CoveringProfile profile{k.p(), k.q(), {}, 0};
  const auto p = to_int64(k.p());
  const bool fits = p && static_cast<std::uint64_t>(*p) <= budgets.profile;
  if (!fits) {
    if (require_full)
      throw Error(Errc::BudgetExceeded, "linking sequence of " + k.to_string() + " exceeds the profile budget p <= " +
                                            std::to_string(budgets.profile));
    profile.d = diagonal_direct(k, budgets.direct);
    return profile;
  }
  FloorParity walk(*p, *to_int64(k.q()));
  profile.offdiag.resize(static_cast<std::size_t>(*p - 1));
  std::int64_t s = 0;
  for (auto& l : profile.offdiag) {
    l = walk.next() ? -1 : 1;
    s += l;
  }
  profile.d = -s;
  return profile;
}

std::vector<TraceStep> expand_trace(const RecursionTrace& trace) {
  std::vector<TraceStep> steps{{trace.base_p, trace.base_q}};
  for (int s : trace.signs) {
    if (s != 1 && s != -1) throw Error(Errc::InvalidArgument, "trace signs must be +1 or -1, got " + std::to_string(s));
    const TraceStep& cur = steps.back();
    const BigInt factor = 4 * cur.p * cur.p - 1;
    steps.push_back({cur.p * factor, factor * cur.q + 2 * s * cur.p});
  }
  return steps;
}

std::int64_t diagonal_recursive(const BigInt& p, const BigInt& q, const RecursionTrace& trace,
                                std::uint64_t base_budget) {
  if (!is_odd(trace.base_q))
    throw Error(Errc::InvalidArgument, "trace base q = " + trace.base_q.get_str() + " must be odd");
  const TwoBridge base = normalize(trace.base_p, trace.base_q);
  const auto steps = expand_trace(trace);
  const TwoBridge target = trace.mirrored ? normalize(p, -q) : normalize(p, q);
  const TraceStep& last = steps.back();
  if (last.p != target.p() || !(normalize(last.p, last.q) == target))
    throw Error(Errc::TraceMismatch, "trace from b(" + trace.base_p.get_str() + "," + trace.base_q.get_str() +
                                         ") reaches b(" + last.p.get_str() + "," + last.q.get_str() + "), not " +
                                         target.to_string() + (trace.mirrored ? " (mirror of target)" : ""));
  const auto base_p = to_int64(base.p());
  if (!base_p || static_cast<std::uint64_t>(*base_p) > base_budget)
    throw Error(Errc::BaseBudgetExceeded,
                "trace base " + base.to_string() + " exceeds the direct budget p <= " + std::to_string(base_budget));
  std::int64_t d = diagonal_direct(base, base_budget);
  for (int s : trace.signs) d += 2 * s;
  return trace.mirrored ? -d : d;
}

WeightMatrix::WeightMatrix(std::size_t m, const std::vector<std::int64_t>& row_major) : m_(m), w_(row_major) {
  if (w_.size() != m * m)
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(m * m) + " weights, got " + std::to_string(w_.size()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (w_[i * m + j] != w_[j * m + i])
        throw Error(Errc::InvalidArgument,
                    "weights not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

WeightMatrix covering_weights(const CoveringProfile& profile, std::size_t m) {
  if (!profile.materialized())
    throw Error(Errc::BudgetExceeded, "covering weights need a materialized linking profile");
  if (m > profile.offdiag.size() + 1)
    throw Error(Errc::InvalidArgument, "sublink of " + std::to_string(m) + " components exceeds p");
  WeightMatrix w(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = r + 1; s < m; ++s) w.set(r, s, profile.offdiag[s - r - 1]);
  return w;
}

BigInt laplacian_cofactor(const WeightMatrix& weights) {
  const std::size_t m = weights.size();
  if (m < 2) throw Error(Errc::SizeTooSmall, "cofactor needs at least 2 vertices, got " + std::to_string(m));
  // Minor obtained by deleting row 1 and column 1.
  const std::size_t n = m - 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t row_sum = 0;
    for (std::size_t k = 0; k < m; ++k)
      if (k != i + 1) row_sum += weights(i + 1, k);
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = i == j ? BigInt(static_cast<long>(-row_sum)) : BigInt(static_cast<long>(weights(i + 1, j + 1)));
  }
  // Bareiss: every intermediate quotient is exact.
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

BigInt tree_sum_bruteforce(const WeightMatrix& weights) {
  const std::size_t m = weights.size();
  if (m > 8) throw Error(Errc::TooLarge, "Prüfer enumeration is limited to 8 vertices, got " + std::to_string(m));
  if (m == 0) throw Error(Errc::SizeTooSmall, "no vertices");
  if (m == 1) return 1;
  if (m == 2) return weights(0, 1);

  const std::size_t len = m - 2;
  std::vector<std::size_t> seq(len, 0);
  std::vector<std::size_t> degree(m);
  BigInt total = 0;
  while (true) {
    // Decode the Prüfer sequence.
    std::fill(degree.begin(), degree.end(), 1);
    for (auto v : seq) ++degree[v];
    BigInt product = 1;
    for (auto v : seq) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      product *= static_cast<long>(weights(leaf, v));
      --degree[leaf];
      --degree[v];
    }
    std::size_t u = m, w = m;
    for (std::size_t x = 0; x < m; ++x)
      if (degree[x] == 1) (u == m ? u : w) = x;
    product *= static_cast<long>(weights(u, w));
    total += product;

    std::size_t pos = 0;
    while (pos < len && ++seq[pos] == m) seq[pos++] = 0;
    if (pos == len) break;
  }
  return total;
}

const char* verdict_name(Verdict v) noexcept {
  return v == Verdict::Distinguished ? "Distinguished" : "Inconclusive";
}

namespace {

CoveringSide make_side(const TwoBridge& k, const Budgets& budgets, const RecursionTrace* trace) {
  CoveringSide side{k, 0, false, 0, {}};
  if (trace) {
    side.d_raw = diagonal_recursive(k.p(), k.q(), *trace, budgets.direct);
    side.source = "diagonal_recursive";
  } else {
    side.d_raw = diagonal_direct(k, budgets.direct);
    side.source = "diagonal_direct";
  }
  side.mirrored = side.d_raw < 0;
  side.d = side.mirrored ? -side.d_raw : side.d_raw;
  return side;
}

}  // namespace

Certificate distinguish_certificate(const TwoBridge& k1, const TwoBridge& k2, const Budgets& budgets,
                                    const RecursionTrace* trace1, const RecursionTrace* trace2) {
  if (k1.p() != k2.p())
    throw Error(Errc::UnequalP, "certificates compare knots with equal p, got " + k1.to_string() + " and " + k2.to_string());
  Certificate cert{make_side(k1, budgets, trace1), make_side(k2, budgets, trace2), {}, {}, Verdict::Inconclusive};
  const BigInt& p = k1.p();
  auto& hyp = cert.hypotheses;

  hyp.push_back({"p_odd", is_odd(p), "p = " + p.get_str()});
  hyp.push_back({"inequivalent", !equivalent(k1, k2),
                 k1.to_string() + (equivalent(k1, k2) ? " ~ " : " !~ ") + k2.to_string()});

  const auto small_p = to_int64(p);
  const bool materialize = small_p && static_cast<std::uint64_t>(*small_p) <= budgets.profile;
  std::optional<CoveringProfile> larger_profile;
  if (materialize) {
    bool ok = true;
    std::string detail = "circulant +-1 sequences checked";
    for (const CoveringSide* side : {&cert.left, &cert.right}) {
      CoveringProfile prof = linking_profile(side->knot, budgets, true);
      const std::size_t n = prof.offdiag.size();
      for (std::size_t k = 0; k < n; ++k) {
        if ((prof.offdiag[k] != 1 && prof.offdiag[k] != -1) || prof.offdiag[k] != prof.offdiag[n - 1 - k]) ok = false;
      }
      if (prof.d != side->d_raw) {
        ok = false;
        detail = "profile diagonal " + std::to_string(prof.d) + " disagrees with " + side->source;
      }
      if (side == (cert.left.d >= cert.right.d ? &cert.left : &cert.right)) larger_profile = std::move(prof);
    }
    hyp.push_back({"offdiagonal_unit", ok, detail});
  } else {
    hyp.push_back({"offdiagonal_unit", true, "structural: entries are (-1)^floor(qk/p)"});
  }

  hyp.push_back({"diagonal_even", cert.left.d % 2 == 0 && cert.right.d % 2 == 0,
                 "d = " + std::to_string(cert.left.d_raw) + ", " + std::to_string(cert.right.d_raw)});
  hyp.push_back({"diagonal_nonnegative", cert.left.d >= 0 && cert.right.d >= 0,
                 "after orientation switch: " + std::to_string(cert.left.d) + ", " + std::to_string(cert.right.d)});

  // The sublink with p - d_min components has an odd number of spanning
  // trees, each contributing ±1, so its H(1) is odd.
  const std::int64_t d_min = std::min(cert.left.d, cert.right.d);
  cert.witness.components = p - d_min;
  cert.witness.cayley_count_odd = is_odd(cert.witness.components);
  bool witness_ok = cert.witness.cayley_count_odd;
  std::string witness_detail = "p - d = " + cert.witness.components.get_str();
  if (larger_profile && cert.witness.components >= 2 &&
      cert.witness.components <= BigInt(static_cast<unsigned long>(budgets.determinant_size))) {
    const auto m = static_cast<std::size_t>(cert.witness.components.get_ui());
    BigInt h1 = laplacian_cofactor(covering_weights(*larger_profile, m));
    witness_ok = witness_ok && is_odd(h1);
    witness_detail += ", H(1) = " + h1.get_str();
    cert.witness.cofactor = std::move(h1);
  }
  hyp.push_back({"parity_witness", witness_ok, witness_detail});

  if (cert.left.d != cert.right.d && all_passed(hyp)) cert.verdict = Verdict::Distinguished;
  return cert;
}

}  // namespace twobridge
