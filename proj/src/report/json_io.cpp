#include "report/json_io.hpp"

namespace twobridge {

Json poly_to_json(const LaurentPoly& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json::array({e, c.get_str()}));
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::ParseError, "polynomial JSON must be an array of [exponent, coefficient] pairs");
  LaurentPoly::Terms terms;
  std::int64_t prev = 0;
  bool first = true;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const Json& term = j[k];
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string())
      throw Error(Errc::ParseError, "term " + std::to_string(k) + " is not [integer, \"decimal\"]");
    const auto e = term[0].get<std::int64_t>();
    if (!first && e <= prev)
      throw Error(Errc::ParseError, "term " + std::to_string(k) + " breaks ascending exponent order");
    BigInt c = parse_bigint(term[1].get<std::string>());
    if (c == 0) throw Error(Errc::ParseError, "term " + std::to_string(k) + " has a zero coefficient");
    terms.emplace(e, std::move(c));
    prev = e;
    first = false;
  }
  return LaurentPoly(std::move(terms));
}

Json knot_to_json(const TwoBridge& k) {
  return {{"p", k.p().get_str()}, {"q", k.q().get_str()}, {"text", k.to_string()}};
}

Json matrix_to_json(const Mat2& m) {
  return Json::array({Json::array({m.a.get_str(), m.b.get_str()}), Json::array({m.c.get_str(), m.d.get_str()})});
}

Json word_to_json(const BridgeWord& w) { return w.to_string(); }

Json trace_to_json(const RecursionTrace& t) {
  return {{"base_p", t.base_p.get_str()}, {"base_q", t.base_q.get_str()}, {"signs", t.signs}, {"mirrored", t.mirrored}};
}

Json check_to_json(const Check& c) { return {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}}; }

namespace {

Json side_to_json(const CoveringSide& s) {
  return {{"knot", knot_to_json(s.knot)},
          {"d_raw", {{"op", s.source}, {"value", s.d_raw}}},
          {"mirrored", s.mirrored},
          {"d", s.d}};
}

}  // namespace

Json certificate_to_json(const Certificate& cert) {
  Json hyp = Json::array();
  for (const auto& c : cert.hypotheses) hyp.push_back(check_to_json(c));
  Json witness = {{"components", cert.witness.components.get_str()},
                  {"cayley_count_odd", cert.witness.cayley_count_odd}};
  if (cert.witness.cofactor)
    witness["cofactor"] = {{"op", "laplacian_cofactor"}, {"value", cert.witness.cofactor->get_str()}};
  return {{"left", side_to_json(cert.left)},
          {"right", side_to_json(cert.right)},
          {"hypotheses", hyp},
          {"witness", witness},
          {"verdict", verdict_name(cert.verdict)}};
}

Json validation_to_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_to_json(c));
  return {{"p", r.p.get_str()}, {"checks", checks}, {"passed", r.passed()}};
}

void Report::result(const std::string& key, const std::string& op, Json value) {
  results_[key] = {{"op", op}, {"value", std::move(value)}};
}

void Report::check(const std::string& name, const std::string& provenance, bool passed, const std::string& detail) {
  checks_.push_back({{"name", name}, {"provenance", provenance}, {"passed", passed}, {"detail", detail}});
}

void Report::merge_checks(const std::string& prefix, const Report& other) {
  for (const auto& c : other.checks_) {
    Json copy = c;
    copy["name"] = prefix + c["name"].get<std::string>();
    checks_.push_back(std::move(copy));
  }
}

std::size_t Report::failed() const {
  std::size_t n = 0;
  for (const auto& c : checks_)
    if (!c["passed"].get<bool>()) ++n;
  return n;
}

bool Report::passed() const { return failed() == 0; }

Json Report::to_json() const {
  Json out = {{"command", command_},
              {"inputs", inputs_},
              {"results", results_},
              {"checks", checks_},
              {"summary", {{"checks", checks_.size()}, {"failed", failed()}, {"passed", passed()}}}};
  if (!data_.empty()) out["data"] = data_;
  return out;
}

}  // namespace twobridge
