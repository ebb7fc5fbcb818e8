// Acceptance suite: runs every contract check at its stated tolerance and
// prints one pass/fail line per criterion. Usage:
//   defk_acceptance <path-to-defk-cli> <fixtures-dir>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "defk/selftest.hpp"

namespace {

struct Criterion {
  std::string label;
  bool pass;
  std::string detail;
};

std::string run_command(const std::string& command, int& exit_code) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return output;
  }
  char buffer[4096];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
    output.append(buffer, got);
  exit_code = pclose(pipe);
  return output;
}

std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

const defk::CheckResult* find_check(const defk::SelftestReport& report,
                                    const std::string& name) {
  for (const defk::CheckResult& c : report.checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string fact(const defk::CheckResult* c, const std::string& key) {
  if (!c) return "?";
  for (const auto& [k, v] : c->facts)
    if (k == key) return v;
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: defk_acceptance <defk-cli> <fixtures-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string fixtures = argv[2];

  auto start = std::chrono::steady_clock::now();
  defk::SelftestReport report = defk::run_selftest();
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::vector<Criterion> criteria;
  auto from_check = [&](const std::string& label, const std::string& name,
                        const std::string& detail_key) {
    const defk::CheckResult* c = find_check(report, name);
    criteria.push_back(
        {label, c && c->pass, detail_key.empty() ? "" : fact(c, detail_key) + " cases"});
  };

  {
    const defk::CheckResult* c = find_check(report, "oracle_agreement");
    bool in_budget = elapsed < 30.0;
    char detail[128];
    std::snprintf(detail, sizeof detail, "%s monoids, %.1fs of 30s budget",
                  fact(c, "monoids").c_str(), elapsed);
    criteria.push_back({"four-way oracle agreement", c && c->pass && in_budget, detail});
  }
  from_check("telescope identification", "telescope_identification",
             "stably_group_like_pairs");
  from_check("quotient compatibility", "quotient_compatibility", "pairs");
  from_check("smash product laws", "smash_laws", "expressions");
  from_check("bott cokernel degrees", "bott_cokernel_degrees", "modules");
  from_check("suspension degree arithmetic", "suspension_degrees", "smash_pairs");
  from_check("worked example modules", "example_modules", "");
  from_check("finite group pipeline", "finite_group_pipeline", "groups");

  // determinism + pinned CLI outputs
  {
    bool pass = true;
    std::string detail;
    int code1 = 0, code2 = 0;
    std::string run1 = run_command(shell_quote(cli) + " selftest", code1);
    std::string run2 = run_command(shell_quote(cli) + " selftest", code2);
    if (code1 != 0 || code2 != 0) {
      pass = false;
      detail = "selftest exited nonzero";
    } else if (run1 != run2) {
      pass = false;
      detail = "selftest reports differ between runs";
    }

    struct Golden {
      std::string command;
      std::string expected;
    };
    const Golden goldens[] = {
        {shell_quote(cli) + " monoid gr " + shell_quote(fixtures + "/z4.json") +
             " --method pairs",
         "Gr = Z/4\n"},
        {shell_quote(cli) + " ku rdef " + shell_quote("8*ku + S^2(ku)") + " --m 2",
         "R^def_2 = Z\n"},
        {shell_quote(cli) + " ku smash " + shell_quote("ku/2") + " " +
             shell_quote("ku/4"),
         "ku/2 + S(ku/2)\n"},
    };
    for (const Golden& g : goldens) {
      int code = 0;
      std::string got = run_command(g.command, code);
      if (code != 0 || got != g.expected) {
        pass = false;
        detail = "mismatch for: " + g.command;
        break;
      }
    }
    if (pass) detail = "byte-identical reports, pinned outputs match";
    criteria.push_back({"determinism and golden CLI outputs", pass, detail});
  }

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    all = all && c.pass;
    std::printf("criterion %zu %-36s %s%s%s\n", i + 1, c.label.c_str(),
                c.pass ? "PASS" : "FAIL", c.detail.empty() ? "" : "  -- ",
                c.detail.c_str());
  }
  std::printf("acceptance: %zu/%zu passed\n",
              static_cast<std::size_t>(
                  std::count_if(criteria.begin(), criteria.end(),
                                [](const Criterion& c) { return c.pass; })),
              criteria.size());
  return all ? 0 : 1;
}
