#include "report/commands.hpp"

#include <map>
#include <set>

#include "core/alexpoly.hpp"
#include "core/families.hpp"
#include "core/swinv.hpp"

namespace twobridge {

namespace {

const char* const kClassification = "2-bridge classification: p equal and q' = q or q q' = 1 mod p";
const char* const kFibered = "D(a1..a2k) is fibered iff every entry is +-1";
const char* const kAlexanderGate = "Alexander polynomial consistency: f(1) = +-1, |f(-1)| = p, palindromic";
const char* const kCertificate = "distinct covering-link diagonals force distinct multivariable Alexander polynomials";
const char* const kSameSW = "covering SW invariant Delta(tau) Delta(-tau) depends only on Delta";

void require_single_input(const KnotInput& in) {
  if (in.word.has_value() == in.pq.has_value())
    throw Error(Errc::InvalidArgument, "give exactly one of a word or a p,q pair");
}

std::size_t expected_classes(unsigned n) { return (n + 1) / 2 + 1; }

std::optional<std::int64_t> direct_if_affordable(const TwoBridge& k, const Budgets& budgets) {
  const auto p = to_int64(k.p());
  if (p && static_cast<std::uint64_t>(*p) <= budgets.direct) return diagonal_direct(k, budgets.direct);
  return std::nullopt;
}

}  // namespace

Report cmd_classify(const KnotInput& input, const Budgets&) {
  require_single_input(input);
  Report rep("classify");
  if (input.word) {
    const BridgeWord w = BridgeWord::parse(*input.word);
    rep.inputs()["word"] = w.to_string();
    const WordEvaluation ev = evaluate_word(w);
    rep.result("matrix", "evaluate_word", matrix_to_json(ev.matrix));
    rep.result("raw_pq", "evaluate_word", {{"p", ev.raw_p.get_str()}, {"q", ev.raw_q.get_str()}});
    rep.result("knot", "normalize", knot_to_json(ev.knot));
    rep.result("fibered", "is_fibered", is_fibered(w));
    rep.result("mirror", "mirror", knot_to_json(mirror(ev.knot)));
    const BridgeWord canonical = even_cf_expansion(ev.knot);
    rep.result("even_expansion", "even_cf_expansion", word_to_json(canonical));
    rep.check("determinant_one", "SL(2,Z) braid representation", ev.matrix.det() == 1,
              "det = " + ev.matrix.det().get_str());
    rep.check("expansion_fibered_agrees", kFibered, is_fibered(canonical) == is_fibered(w),
              "even expansion " + canonical.to_string());
  } else {
    const TwoBridge k = TwoBridge::parse(*input.pq);
    rep.inputs()["pq"] = *input.pq;
    rep.result("knot", "normalize", knot_to_json(k));
    const BridgeWord canonical = even_cf_expansion(k);
    rep.result("even_expansion", "even_cf_expansion", word_to_json(canonical));
    rep.result("fibered", "is_fibered", is_fibered(canonical));
    rep.result("mirror", "mirror", knot_to_json(mirror(k)));
    rep.check("expansion_round_trip", kClassification, equivalent(evaluate_word(canonical).knot, k),
              canonical.to_string() + " -> " + evaluate_word(canonical).knot.to_string());
  }
  return rep;
}

Report cmd_alex(const KnotInput& input, const Budgets& budgets) {
  require_single_input(input);
  Report rep("alex");
  BridgeWord w;
  LaurentPoly f;
  if (input.word) {
    w = BridgeWord::parse(*input.word);
    rep.inputs()["word"] = w.to_string();
    const WordAlexander wa = alexander_from_word_detailed(w);
    f = wa.poly;
    rep.result("alexander", "alexander_from_word", poly_to_json(f));
    rep.result("mirror_retry", "alexander_from_word", wa.mirror_retry);
    rep.result("knot", "evaluate_word", knot_to_json(evaluate_word(w).knot));
  } else {
    const TwoBridge k = TwoBridge::parse(*input.pq);
    rep.inputs()["pq"] = *input.pq;
    f = alexander_from_pq(k, budgets.alexander_terms);
    rep.result("alexander", "alexander_from_pq", poly_to_json(f));
    rep.result("knot", "normalize", knot_to_json(k));
    w = even_cf_expansion(k);
    rep.result("even_expansion", "even_cf_expansion", word_to_json(w));
    const LaurentPoly other = alexander_from_word(w);
    rep.check("seifert_agreement", "Seifert determinant and closed-form sum agree", equal_up_to_units(f, other),
              "from word: " + other.to_string());
  }
  rep.result("alexander_text", input.word ? "alexander_from_word" : "alexander_from_pq", f.to_string());
  const ValidationReport v = validate_alexander(w, f, budgets.cross_check);
  for (const auto& c : v.checks) rep.check(c.name, kAlexanderGate, c.passed, c.detail);
  return rep;
}

Report cmd_covering(const std::string& pq, bool profile, const Budgets& budgets) {
  Report rep("covering");
  const TwoBridge k = TwoBridge::parse(pq);
  rep.inputs()["pq"] = pq;
  rep.inputs()["profile"] = profile;
  rep.result("knot", "normalize", knot_to_json(k));
  const CoveringProfile prof = linking_profile(k, budgets);
  rep.result("d", "linking_profile", prof.d);
  rep.result("d_mirror", "diagonal_direct", diagonal_direct(mirror(k), budgets.direct));
  if (profile) {
    if (prof.materialized()) {
      Json seq = Json::array();
      for (auto l : prof.offdiag) seq.push_back(static_cast<int>(l));
      rep.result("offdiag", "linking_profile", seq);
    } else {
      rep.result("offdiag", "linking_profile", nullptr);
    }
  }
  if (prof.materialized()) {
    bool symmetric = true;
    const std::size_t n = prof.offdiag.size();
    for (std::size_t i = 0; i < n; ++i) symmetric = symmetric && prof.offdiag[i] == prof.offdiag[n - 1 - i];
    rep.check("circulant_symmetry", "linking matrix of the covering link is symmetric circulant", symmetric,
              "l(k) = l(p-k) for k = 1.." + std::to_string(n));
    const std::int64_t half = diagonal_direct(k, budgets.direct);
    rep.check("half_range_sum", "d = -2 sum_{k <= (p-1)/2} (-1)^floor(qk/p)", half == prof.d,
              "half-range " + std::to_string(half) + ", full " + std::to_string(prof.d));
  }
  rep.check("diagonal_even", "covering diagonal is even", prof.d % 2 == 0, "d = " + std::to_string(prof.d));
  return rep;
}

Report cmd_family(const std::string& construction, unsigned n, std::optional<std::uint64_t> i,
                  const Budgets& budgets) {
  Report rep("family");
  rep.inputs()["construction"] = construction;
  rep.inputs()["n"] = n;
  if (i) rep.inputs()["i"] = *i;
  Json members = Json::array();

  if (construction == "torus") {
    if (n == 0) throw Error(Errc::InvalidArgument, "torus family starts at n = 1");
    const BridgeWord base = kn_word(n);
    const WordEvaluation base_ev = evaluate_word(base);
    Json kn = {{"name", "K_" + std::to_string(n)},
               {"word", word_to_json(base)},
               {"raw_pq", {{"p", base_ev.raw_p.get_str()}, {"q", base_ev.raw_q.get_str()}}},
               {"knot", knot_to_json(base_ev.knot)}};
    if (auto d = direct_if_affordable(base_ev.knot, budgets)) kn["d"] = {{"op", "diagonal_direct"}, {"value", *d}};
    members.push_back(kn);
    for (int sign : {1, -1}) {
      const BridgeWord w = kn_pm_word(n, sign);
      const TwoBridge k = evaluate_word(w).knot;
      const TorusClosedForm cf = kn_pm_closed_form_raw(n, sign);
      const RecursionTrace tr = kn_pm_trace(n, sign);
      const std::int64_t d_rec = diagonal_recursive(k.p(), k.q(), tr, budgets.direct);
      Json m = {{"name", "K_" + std::to_string(n) + (sign > 0 ? "(+1)" : "(-1)")},
                {"word", word_to_json(w)},
                {"knot", knot_to_json(k)},
                {"closed_form", {{"p", cf.p.get_str()}, {"q_first", cf.q_first.get_str()}, {"q_second", cf.q_second.get_str()}}},
                {"trace", trace_to_json(tr)},
                {"d_recursive", {{"op", "diagonal_recursive"}, {"value", d_rec}}}};
      const auto d_dir = direct_if_affordable(k, budgets);
      if (d_dir) m["d_direct"] = {{"op", "diagonal_direct"}, {"value", *d_dir}};
      members.push_back(m);
      const std::string tag = sign > 0 ? "+" : "-";
      rep.check("closed_form" + tag, "K_n(+-1) = b((2n+1)(4n+1)(4n+3), 2n(4n+1)(4n+3) +- 2(2n+1))",
                k == kn_pm_closed_form(n, sign), k.to_string());
      const std::int64_t expected = 2 * static_cast<std::int64_t>(n) + 2 * sign;
      rep.check("diagonal" + tag, "d(K_n(+-1)) = 2n +- 2", d_rec == expected && (!d_dir || *d_dir == expected),
                "d = " + std::to_string(d_rec) + ", expected " + std::to_string(expected));
    }
  } else if (construction == "tree") {
    if (n > budgets.word_nmax)
      throw Error(Errc::BudgetExceeded, "tree family words are limited to n <= " + std::to_string(budgets.word_nmax));
    const BigInt p = family_p(n);
    std::vector<std::uint64_t> which;
    if (i) {
      which.push_back(FamilyIndex(n, *i).i());
    } else {
      for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) which.push_back(k);
    }
    for (std::uint64_t idx_i : which) {
      const FamilyIndex idx(n, idx_i);
      const BridgeWord w = w_word(idx);
      const FamilyPQ pq = pq_recursion(idx);
      const BigInt qp = q_prime(idx);
      const TwoBridge k = normalize(pq.p, pq.q);
      const RecursionTrace tr = tree_trace(idx);
      const std::int64_t d_rec = diagonal_recursive(k.p(), k.q(), tr, budgets.direct);
      Json m = {{"name", "K(" + std::to_string(n) + "," + std::to_string(idx_i) + ")"},
                {"i", idx_i},
                {"bits", idx.bits()},
                {"word", word_to_json(w)},
                {"p", {{"op", "pq_recursion"}, {"value", pq.p.get_str()}}},
                {"q", {{"op", "pq_recursion"}, {"value", pq.q.get_str()}}},
                {"q_prime", {{"op", "q_prime"}, {"value", qp.get_str()}}},
                {"knot", knot_to_json(k)},
                {"trace", trace_to_json(tr)},
                {"d_recursive", {{"op", "diagonal_recursive"}, {"value", d_rec}}}};
      const auto d_dir = direct_if_affordable(k, budgets);
      if (d_dir) m["d_direct"] = {{"op", "diagonal_direct"}, {"value", *d_dir}};
      members.push_back(m);
      const std::string tag = "(" + std::to_string(idx_i) + ")";
      rep.check("word_matches_recursion" + tag, "K(n,i) = b(p(n), q(n,i))", evaluate_word(w).knot == k,
                evaluate_word(w).knot.to_string());
      rep.check("modular_inverse" + tag, "q(n,i) q'(n,i) = 1 mod p(n)", mod_floor(pq.q * qp - 1, p) == 0,
                "q' = " + qp.get_str());
      if (d_dir)
        rep.check("direct_vs_recursive" + tag, "d(K(n+1,i)) = d(K(n,i)) + 2(-1)^(eps_n+1)", *d_dir == d_rec,
                  std::to_string(*d_dir) + " vs " + std::to_string(d_rec));
    }
    if (!i) {
      const DiagFamilySet set = diag_family_set(n, budgets);
      Json multiset = Json::object();
      for (const auto& [d, c] : set.multiset) multiset[std::to_string(d)] = c;
      rep.result("d_multiset", "diag_family_set", multiset);
      rep.result("distinct_abs_d", "diag_family_set", set.distinct_abs);
      std::set<std::int64_t> got, want;
      for (const auto& [d, c] : set.multiset) got.insert(d);
      for (unsigned j = 0; j <= n; ++j) want.insert(2 - 2 * static_cast<std::int64_t>(n) + 4 * static_cast<std::int64_t>(j));
      rep.check("diagonal_set", "{d(K(n,i))} = {2 - 2n + 4j : j = 0..n}", got == want,
                std::to_string(got.size()) + " distinct values");
      rep.check("distinct_abs_count", "|{|d(K(n,i))|}| = floor((n+1)/2) + 1", set.distinct_abs == expected_classes(n),
                std::to_string(set.distinct_abs) + " vs " + std::to_string(expected_classes(n)));
    }
  } else {
    throw Error(Errc::InvalidArgument, "construction must be 'torus' or 'tree', got '" + construction + "'");
  }
  rep.data()["members"] = members;
  return rep;
}

namespace {

struct SwMember {
  std::string name;
  LaurentPoly alex;
  FormalSW surgery;
  FormalSW covering;
};

std::vector<SwMember> sw_members(const std::string& family, unsigned n, const Budgets& budgets) {
  std::vector<std::pair<std::string, BridgeWord>> words;
  if (family == "torus") {
    if (n == 0) throw Error(Errc::InvalidArgument, "torus family starts at n = 1");
    words.emplace_back("K_" + std::to_string(n) + "(+1)", kn_pm_word(n, 1));
    words.emplace_back("K_" + std::to_string(n) + "(-1)", kn_pm_word(n, -1));
  } else if (family == "tree") {
    if (n > budgets.alexander_nmax)
      throw Error(Errc::BudgetExceeded,
                  "tree family Alexander polynomials are limited to n <= " + std::to_string(budgets.alexander_nmax));
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i)
      words.emplace_back("K(" + std::to_string(n) + "," + std::to_string(i) + ")", w_word(FamilyIndex(n, i)));
  } else {
    throw Error(Errc::InvalidArgument, "family must be 'torus' or 'tree', got '" + family + "'");
  }
  std::vector<SwMember> out;
  for (auto& [name, w] : words) {
    LaurentPoly alex = alexander_from_word(w);
    out.push_back({name, alex, sw_knot_surgery(default_sw_base(), alex), sw_covering_base(alex)});
  }
  return out;
}

}  // namespace

Report cmd_sw(const std::string& family, unsigned n, const Budgets& budgets) {
  Report rep("sw");
  rep.inputs()["family"] = family;
  rep.inputs()["n"] = n;
  const auto members = sw_members(family, n, budgets);
  Json list = Json::array();
  bool same_surgery = true, same_covering = true;
  for (const auto& m : members) {
    list.push_back({{"name", m.name},
                    {"alexander", {{"op", "alexander_from_word"}, {"value", poly_to_json(m.alex)}}},
                    {"sw_knot_surgery", {{"op", "sw_knot_surgery"}, {"value", poly_to_json(m.surgery.poly)}}},
                    {"sw_covering_base", {{"op", "sw_covering_base"}, {"value", poly_to_json(m.covering.poly)}}}});
    same_surgery = same_surgery && sw_equal(m.surgery, members.front().surgery);
    same_covering = same_covering && sw_equal(m.covering, members.front().covering);
  }
  rep.data()["members"] = list;
  rep.result("sw_covering_base_text", "sw_covering_base", members.front().covering.poly.to_string("tau"));
  rep.result("sw_equal", "sw_equal", same_covering);
  rep.check("same_knot_surgery_sw", "SW(X_K) = SW(X) * Delta_K(t)", same_surgery,
            std::to_string(members.size()) + " members");
  rep.check("same_covering_sw", kSameSW, same_covering, members.front().covering.poly.to_string("tau"));
  return rep;
}

Report cmd_certify(const std::string& left, const std::string& right, const Budgets& budgets) {
  Report rep("certify");
  rep.inputs()["left"] = left;
  rep.inputs()["right"] = right;
  const Certificate cert = distinguish_certificate(TwoBridge::parse(left), TwoBridge::parse(right), budgets);
  rep.result("certificate", "distinguish_certificate", certificate_to_json(cert));
  rep.result("verdict", "distinguish_certificate", verdict_name(cert.verdict));
  return rep;
}

Report cmd_report(unsigned n, const Budgets& budgets) {
  if (n > budgets.alexander_nmax)
    throw Error(Errc::BudgetExceeded, "report is limited to n <= " + std::to_string(budgets.alexander_nmax));
  Report rep("report");
  rep.inputs()["n"] = n;
  const std::uint64_t count = std::uint64_t{1} << n;
  const BigInt p = family_p(n);
  rep.result("p", "pq_recursion", p.get_str());

  struct Member {
    FamilyIndex idx;
    TwoBridge knot;
    RecursionTrace trace;
    std::int64_t d;
    LaurentPoly alex;
    FormalSW sw;
  };
  std::vector<Member> members;
  for (std::uint64_t i = 0; i < count; ++i) {
    const FamilyIndex idx(n, i);
    const FamilyPQ pq = pq_recursion(idx);
    const TwoBridge k = normalize(pq.p, pq.q);
    RecursionTrace tr = tree_trace(idx);
    const std::int64_t d = diagonal_recursive(k.p(), k.q(), tr, budgets.direct);
    LaurentPoly alex = alexander_from_word(w_word(idx));
    FormalSW sw = sw_covering_base(alex);
    members.push_back({idx, k, std::move(tr), d, std::move(alex), std::move(sw)});
  }

  Json list = Json::array();
  bool same_alex = true, same_sw = true, inequivalent = true, words_match = true;
  std::map<std::int64_t, std::vector<std::size_t>> classes;  // |d| -> members
  for (std::size_t a = 0; a < members.size(); ++a) {
    const Member& m = members[a];
    list.push_back({{"name", "K(" + std::to_string(n) + "," + std::to_string(m.idx.i()) + ")"},
                    {"knot", knot_to_json(m.knot)},
                    {"trace", trace_to_json(m.trace)},
                    {"d", {{"op", "diagonal_recursive"}, {"value", m.d}}}});
    same_alex = same_alex && m.alex == members.front().alex;
    same_sw = same_sw && sw_equal(m.sw, members.front().sw);
    words_match = words_match && evaluate_word(w_word(m.idx)).knot == m.knot;
    for (std::size_t b = 0; b < a; ++b) inequivalent = inequivalent && !equivalent(members[b].knot, m.knot);
    classes[m.d < 0 ? -m.d : m.d].push_back(a);
  }
  rep.data()["members"] = list;
  rep.result("alexander", "alexander_from_word", poly_to_json(members.front().alex));
  rep.result("alexander_text", "alexander_from_word", members.front().alex.to_string());
  rep.result("sw_covering_base", "sw_covering_base", poly_to_json(members.front().sw.poly));
  rep.result("sw_covering_base_text", "sw_covering_base", members.front().sw.poly.to_string("tau"));

  // Pairwise certificates; members sharing |d| stay inconclusive.
  Json certs = Json::array();
  bool certificates_consistent = true;
  std::size_t distinguished_pairs = 0;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const Certificate cert =
          distinguish_certificate(members[a].knot, members[b].knot, budgets, &members[a].trace, &members[b].trace);
      const bool differ = std::abs(members[a].d) != std::abs(members[b].d);
      certificates_consistent = certificates_consistent && (cert.verdict == Verdict::Distinguished) == differ;
      if (cert.verdict == Verdict::Distinguished) ++distinguished_pairs;
      certs.push_back({{"left", members[a].idx.i()}, {"right", members[b].idx.i()}, {"certificate", certificate_to_json(cert)}});
    }
  }
  rep.data()["certificates"] = certs;

  Json class_list = Json::array();
  for (const auto& [absd, idxs] : classes) {
    Json who = Json::array();
    for (auto k : idxs) who.push_back(members[k].idx.i());
    class_list.push_back({{"abs_d", absd}, {"members", who}});
  }
  rep.result("classes", "distinguish_certificate", class_list);
  rep.result("distinguished_classes", "distinguish_certificate", classes.size());
  rep.result("distinguished_pairs", "distinguish_certificate", distinguished_pairs);

  rep.check("words_match_recursion", "K(n,i) = b(p(n), q(n,i))", words_match, std::to_string(count) + " members");
  rep.check("pairwise_inequivalent", kClassification, inequivalent, std::to_string(count) + " members");
  rep.check("same_alexander", "Kanenobu composition preserves the Alexander polynomial", same_alex,
            members.front().alex.to_string());
  rep.check("same_sw", kSameSW, same_sw, members.front().sw.poly.to_string("tau"));
  rep.check("certificates_match_diagonals", kCertificate, certificates_consistent,
            std::to_string(distinguished_pairs) + " distinguished pairs");
  rep.check("class_count", "at least floor((n+1)/2) + 1 pairwise distinguished members",
            certificates_consistent && classes.size() == expected_classes(n),
            std::to_string(classes.size()) + " classes, expected " + std::to_string(expected_classes(n)));
  return rep;
}

}  // namespace twobridge
