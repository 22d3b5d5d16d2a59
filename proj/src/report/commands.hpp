#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "core/common.hpp"
#include "report/json_io.hpp"

namespace twobridge {

// Exactly one of word / pq is set.
struct KnotInput {
  std::optional<std::string> word;
  std::optional<std::string> pq;
};

Report cmd_classify(const KnotInput& input, const Budgets& budgets = {});
Report cmd_alex(const KnotInput& input, const Budgets& budgets = {});
Report cmd_covering(const std::string& pq, bool profile, const Budgets& budgets = {});
// construction is "torus" or "tree".
Report cmd_family(const std::string& construction, unsigned n, std::optional<std::uint64_t> i,
                  const Budgets& budgets = {});
Report cmd_sw(const std::string& family, unsigned n, const Budgets& budgets = {});
Report cmd_certify(const std::string& left, const std::string& right, const Budgets& budgets = {});
Report cmd_report(unsigned n, const Budgets& budgets = {});

struct VerifyOptions {
  std::optional<unsigned> pmax;
  std::optional<unsigned> nmax;
  std::optional<unsigned> n;
  Budgets budgets;
};

inline constexpr const char* kVerifySuites[] = {"const1",  "qprime",   "diagonal-theorem", "diag-torus", "diag-tree",
                                                "kanenobu", "same-sw", "certificates"};

// suite is one of kVerifySuites or "all".
Report cmd_verify(const std::string& suite, const VerifyOptions& options = {});

}  // namespace twobridge
