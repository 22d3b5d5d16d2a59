#pragma once

#include <string>

#include <json.hpp>

#include "core/alexpoly.hpp"
#include "core/covering.hpp"
#include "core/laurent.hpp"
#include "core/swinv.hpp"

namespace twobridge {

using Json = nlohmann::json;

// [[doubled exponent, "coefficient"], ...] in ascending exponent order.
Json poly_to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const Json& j);

Json knot_to_json(const TwoBridge& k);
Json matrix_to_json(const Mat2& m);
Json word_to_json(const BridgeWord& w);
Json trace_to_json(const RecursionTrace& t);
Json check_to_json(const Check& c);
Json certificate_to_json(const Certificate& cert);
Json validation_to_json(const ValidationReport& r);

// Output of one subcommand. Every numeric result records the operation that
// produced it; checks record the statement they instantiate.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Json& inputs() { return inputs_; }
  void result(const std::string& key, const std::string& op, Json value);
  // Free-form structured data (lists of members and so on).
  Json& data() { return data_; }
  void check(const std::string& name, const std::string& provenance, bool passed, const std::string& detail);
  void merge_checks(const std::string& prefix, const Report& other);

  bool passed() const;
  std::size_t failed() const;
  Json to_json() const;

 private:
  std::string command_;
  Json inputs_ = Json::object();
  Json results_ = Json::object();
  Json data_ = Json::object();
  Json checks_ = Json::array();
};

}  // namespace twobridge
