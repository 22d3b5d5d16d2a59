// Command-line front end. Talks to the library only through the C API and
// renders its JSON reports.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "twobridge/twobridge.h"

namespace {

using Json = nlohmann::json;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct Options {
  bool json = false;
  bool quiet = false;
  tb_budgets budgets = tb_budgets_default();
};

std::string render_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_text(const Json& report, bool quiet) {
  if (!quiet) {
    std::cout << report["command"].get<std::string>() << "\n";
    for (const auto& [key, r] : report["results"].items())
      std::cout << "  " << key << " = " << render_value(r["value"]) << "   [" << r["op"].get<std::string>() << "]\n";
    if (report.contains("data")) {
      for (const auto& [key, v] : report["data"].items()) {
        if (!v.is_array()) continue;
        std::cout << "  " << key << ":\n";
        for (const auto& item : v) std::cout << "    " << item.dump() << "\n";
      }
    }
    for (const auto& c : report["checks"]) {
      std::cout << "  " << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>();
      const auto detail = c["detail"].get<std::string>();
      if (!detail.empty()) std::cout << "  (" << detail << ")";
      std::cout << "\n";
    }
  }
  const auto& s = report["summary"];
  std::cout << (s["passed"].get<bool>() ? "OK" : "FAILED") << ": " << s["checks"].get<std::size_t>() << " checks, "
            << s["failed"].get<std::size_t>() << " failed\n";
}

// Runs one C API call that yields a JSON report and maps it to an exit code.
template <class F>
int run(const Options& opt, F&& call) {
  char* out = nullptr;
  const tb_status st = call(&out);
  if (st != TB_OK) {
    std::cerr << "error: " << tb_status_name(st) << ": " << tb_last_error() << "\n";
    return kUsage;
  }
  const Json report = Json::parse(out);
  tb_string_free(out);
  if (opt.json)
    std::cout << report.dump(2) << "\n";
  else
    print_text(report, opt.quiet);
  return report["summary"]["passed"].get<bool>() ? kOk : kFailed;
}

const char* opt_cstr(const std::optional<std::string>& s) { return s ? s->c_str() : nullptr; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-bridge knot invariants, covering-link diagonals and family certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Print the JSON report");
  app.add_flag("--quiet", opt.quiet, "Print only the summary line");
  app.add_option("--budget-alexander-terms", opt.budgets.alexander_terms, "Max p for the closed-form Alexander sum");
  app.add_option("--budget-cross-check", opt.budgets.cross_check, "Max p for Alexander cross-checks");
  app.add_option("--budget-profile", opt.budgets.profile, "Max p for materialized linking sequences");
  app.add_option("--budget-direct", opt.budgets.direct, "Max p for direct diagonal sums");
  app.add_option("--budget-determinant-size", opt.budgets.determinant_size, "Max size of witness cofactors");
  app.add_option("--budget-word-nmax", opt.budgets.word_nmax, "Max family level for explicit words");
  app.add_option("--budget-alexander-nmax", opt.budgets.alexander_nmax, "Max family level for Alexander polynomials");

  std::optional<std::string> word, pq;
  auto* classify = app.add_subcommand("classify", "Normal form, fiberedness and mirror of a knot");
  auto* alex = app.add_subcommand("alex", "Alexander polynomial with consistency checks");
  for (auto* sub : {classify, alex}) {
    auto* w = sub->add_option("--word", word, "Twist word a1,a2,...");
    auto* k = sub->add_option("--pq", pq, "Pair p,q");
    w->excludes(k);
    k->excludes(w);
  }

  std::string cov_pq;
  bool profile = false;
  auto* covering = app.add_subcommand("covering", "Diagonal of the dihedral covering link");
  covering->add_option("--pq", cov_pq, "Pair p,q")->required();
  covering->add_flag("--profile", profile, "Include the off-diagonal linking sequence");

  std::string construction;
  unsigned fam_n = 0;
  std::optional<std::int64_t> fam_i;
  auto* family = app.add_subcommand("family", "Members of the torus or tree family");
  family->add_option("construction", construction, "torus or tree")->required()->check(CLI::IsMember({"torus", "tree"}));
  family->add_option("--n", fam_n, "Level")->required();
  family->add_option("--i", fam_i, "Member index (tree only)");

  std::string sw_family;
  unsigned sw_n = 0;
  auto* sw = app.add_subcommand("sw", "Formal SW polynomials of a family level");
  sw->add_option("--family", sw_family, "torus or tree")->required()->check(CLI::IsMember({"torus", "tree"}));
  sw->add_option("--n", sw_n, "Level")->required();

  std::string left, right;
  auto* certify = app.add_subcommand("certify", "Covering-link certificate for two knots with equal p");
  certify->add_option("left", left, "First knot p,q or b(p,q)")->required();
  certify->add_option("right", right, "Second knot")->required();

  std::string suite;
  std::optional<std::int64_t> pmax, nmax, vn;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"const1", "qprime", "diagonal-theorem", "diag-torus", "diag-tree", "kanenobu", "same-sw",
                             "certificates", "all"}));
  verify->add_option("--pmax", pmax, "Largest p")->check(CLI::NonNegativeNumber);
  verify->add_option("--nmax", nmax, "Largest level")->check(CLI::NonNegativeNumber);
  verify->add_option("--n", vn, "Single level")->check(CLI::NonNegativeNumber);

  unsigned rep_n = 0;
  auto* report = app.add_subcommand("report", "Full certificate report for a tree family level");
  report->add_option("--n", rep_n, "Level")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const tb_budgets* b = &opt.budgets;
  if (*classify || *alex) {
    if (!word && !pq) {
      std::cerr << "error: give --word or --pq\n";
      return kUsage;
    }
    const bool is_classify = static_cast<bool>(*classify);
    return run(opt, [&](char** out) {
      return is_classify ? tb_cmd_classify(opt_cstr(word), opt_cstr(pq), b, out)
                         : tb_cmd_alex(opt_cstr(word), opt_cstr(pq), b, out);
    });
  }
  if (*covering)
    return run(opt, [&](char** out) { return tb_cmd_covering(cov_pq.c_str(), profile ? 1 : 0, b, out); });
  if (*family)
    return run(opt, [&](char** out) { return tb_cmd_family(construction.c_str(), fam_n, fam_i.value_or(-1), b, out); });
  if (*sw) return run(opt, [&](char** out) { return tb_cmd_sw(sw_family.c_str(), sw_n, b, out); });
  if (*certify) return run(opt, [&](char** out) { return tb_cmd_certify(left.c_str(), right.c_str(), b, out); });
  if (*verify) {
    return run(opt, [&](char** out) {
      int passed = 0;
      return tb_cmd_verify(suite.c_str(), pmax.value_or(-1), nmax.value_or(-1), vn.value_or(-1), b, out, &passed);
    });
  }
  if (*report) return run(opt, [&](char** out) { return tb_cmd_report(rep_n, b, out); });
  return kUsage;
}
