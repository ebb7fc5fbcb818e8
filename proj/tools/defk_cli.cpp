// defk: batch front end for the monoid completion and ku-module calculators.
// Reports are plain text, one fact per line, deterministic for golden diffs.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "defk/bar.hpp"
#include "defk/completion.hpp"
#include "defk/corpus.hpp"
#include "defk/error.hpp"
#include "defk/ku.hpp"
#include "defk/monoid_io.hpp"
#include "defk/selftest.hpp"
#include "defk/telescope.hpp"

namespace {

constexpr int kExitDomainError = 1;
constexpr int kExitUsage = 2;

int element_index(const defk::FiniteMonoid& m, const std::string& name) {
  std::optional<int> idx = m.index_of(name);
  if (!idx) defk::raise("UnknownElement", "no element named '" + name + "'");
  return *idx;
}

std::vector<int> element_list(const defk::FiniteMonoid& m, const std::string& csv) {
  std::vector<int> out;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty() && item.front() == ' ') item.erase(0, item.find_first_not_of(' '));
    if (!item.empty() && item.back() == ' ') item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty()) continue;
    out.push_back(element_index(m, item));
  }
  return out;
}

void cmd_monoid_check(const std::string& path) {
  defk::FiniteMonoid m = defk::load_monoid_file(path);
  std::cout << "valid = true\n";
  std::cout << "elements = " << m.size() << "\n";
  std::cout << "identity = " << m.name(m.identity()) << "\n";
  std::cout << "commutative = " << (defk::is_commutative(m) ? "true" : "false") << "\n";
  std::cout << "group = " << (defk::is_group(m) ? "true" : "false") << "\n";
}

void cmd_monoid_gr(const std::string& path, const std::string& method,
                   const std::string& m0_name, bool m0_given) {
  defk::FiniteMonoid m = defk::load_monoid_file(path);
  if (method == "pairs") {
    std::cout << "Gr = " << defk::to_string(defk::gr_pairs(m).group) << "\n";
  } else if (method == "presentation") {
    std::cout << "Gr = " << defk::to_string(defk::gr_presentation(m).group) << "\n";
  } else if (method == "bar-pi1") {
    std::cout << "Gr = " << defk::to_string(defk::pi1_abelianized(m)) << "\n";
  } else if (method == "bar-h1") {
    std::cout << "Gr = " << defk::to_string(defk::h1_bar(m)) << "\n";
  } else {  // telescope; --m0 checked by the caller
    (void)m0_given;
    int m0 = element_index(m, m0_name);
    bool stable = defk::is_stably_group_like(m, m0);
    defk::TelescopeColimit tel = defk::telescope_pi0(m, m0);
    bool group = defk::is_group(tel.carrier);
    std::cout << "stably_group_like = " << (stable ? "true" : "false") << "\n";
    std::cout << "telescope_is_group = " << (group ? "true" : "false") << "\n";
    if (group)
      std::cout << "Gr = " << defk::to_string(defk::structure_of_finite_abelian_group(tel.carrier))
                << "\n";
    else
      std::cout << "Gr = undefined\n";
  }
}

void cmd_monoid_quotient(const std::string& path, const std::string& sub_csv) {
  defk::FiniteMonoid m = defk::load_monoid_file(path);
  defk::Submonoid sub = defk::submonoid(m, element_list(m, sub_csv));
  defk::QuotientMonoid q = defk::quotient_monoid(m, sub);
  std::cout << "classes = " << q.classes.size() << "\n";
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    std::cout << "class " << c << " = {";
    for (std::size_t i = 0; i < q.classes[c].size(); ++i) {
      if (i) std::cout << ", ";
      std::cout << m.name(q.classes[c][i]);
    }
    std::cout << "}\n";
  }
  for (int i = 0; i < q.carrier.size(); ++i) {
    std::cout << "table " << i << " = [";
    for (int j = 0; j < q.carrier.size(); ++j) {
      if (j) std::cout << ", ";
      std::cout << q.carrier.mul(i, j);
    }
    std::cout << "]\n";
  }
  std::cout << "quotient_is_group = " << (defk::is_quotient_group(q) ? "true" : "false")
            << "\n";
  std::cout << "rho = " << defk::to_string(defk::rho(m, sub)) << "\n";
}

void cmd_monoid_conjclasses(const std::string& path) {
  defk::FiniteMonoid m = defk::load_monoid_file(path);
  std::cout << "conjugacy_classes = " << defk::conjugacy_class_count(m) << "\n";
}

void cmd_group_kdef(const std::string& path, std::optional<int> pi_degree,
                    std::optional<int> rdef_degree) {
  defk::FiniteMonoid m = defk::load_monoid_file(path);
  std::size_t classes = defk::conjugacy_class_count(m);
  defk::ElementaryKuModule module = defk::kdef_finite_group(classes);
  std::cout << "conjugacy_classes = " << classes << "\n";
  std::cout << "Kdef = " << defk::to_string(module) << "\n";
  if (pi_degree)
    std::cout << "K^def_" << *pi_degree << " = "
              << defk::to_string(defk::pi(module, *pi_degree)) << "\n";
  if (rdef_degree)
    std::cout << "R^def_" << *rdef_degree << " = "
              << defk::to_string(defk::bott_cokernel(module, *rdef_degree)) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact group completion and connective K-theory module calculus"};
  app.require_subcommand(1);

  // monoid ------------------------------------------------------------------
  CLI::App* monoid = app.add_subcommand("monoid", "finite commutative monoid computations");
  monoid->require_subcommand(1);

  std::string check_path;
  CLI::App* check = monoid->add_subcommand("check", "validate a monoid table");
  check->add_option("file", check_path, "monoid JSON file")->required();

  std::string gr_path, gr_method, gr_m0;
  CLI::App* gr = monoid->add_subcommand("gr", "Grothendieck group of a commutative monoid");
  gr->add_option("file", gr_path, "monoid JSON file")->required();
  gr->add_option("--method", gr_method, "pairs|presentation|bar-pi1|bar-h1|telescope")
      ->required()
      ->check(CLI::IsMember({"pairs", "presentation", "bar-pi1", "bar-h1", "telescope"}));
  CLI::Option* m0_option = gr->add_option("--m0", gr_m0, "telescope base element (by name)");

  std::string quot_path, quot_sub;
  CLI::App* quot = monoid->add_subcommand("quotient", "quotient by a submonoid");
  quot->add_option("file", quot_path, "monoid JSON file")->required();
  quot->add_option("--sub", quot_sub, "comma-separated submonoid elements")->required();

  std::string conj_path;
  CLI::App* conj = monoid->add_subcommand("conjclasses", "conjugacy classes of a group table");
  conj->add_option("file", conj_path, "monoid JSON file")->required();

  // ku ----------------------------------------------------------------------
  CLI::App* ku = app.add_subcommand("ku", "elementary ku-module calculus");
  ku->require_subcommand(1);

  std::string pi_expr;
  int pi_m = 0;
  CLI::App* kpi = ku->add_subcommand("pi", "homotopy group of a module expression");
  kpi->add_option("expr", pi_expr, "module expression")->required();
  kpi->add_option("--m", pi_m, "degree")->required();

  std::string rdef_expr;
  int rdef_m = 0;
  CLI::App* krdef = ku->add_subcommand("rdef", "Bott cokernel R^def_m");
  krdef->add_option("expr", rdef_expr, "module expression")->required();
  krdef->add_option("--m", rdef_m, "degree")->required();

  std::string susp_expr;
  CLI::App* ksusp = ku->add_subcommand("suspdeg", "suspension degree");
  ksusp->add_option("expr", susp_expr, "module expression")->required();

  std::string smash_a, smash_b;
  CLI::App* ksmash = ku->add_subcommand("smash", "smash product over ku");
  ksmash->add_option("e1", smash_a, "module expression")->required();
  ksmash->add_option("e2", smash_b, "module expression")->required();

  std::string free_a, free_b;
  CLI::App* kfree = ku->add_subcommand("free", "free-product pushout");
  kfree->add_option("e1", free_a, "module expression")->required();
  kfree->add_option("e2", free_b, "module expression")->required();

  // group ------------------------------------------------------------------
  CLI::App* group = app.add_subcommand("group", "finite-group deformation K-theory");
  group->require_subcommand(1);

  std::string kdef_path;
  int kdef_pi = 0, kdef_rdef = 0;
  CLI::App* kdef = group->add_subcommand("kdef", "K^def of a finite group table");
  kdef->add_option("file", kdef_path, "group Cayley table (JSON)")->required();
  CLI::Option* kdef_pi_opt = kdef->add_option("--pi", kdef_pi, "also print K^def in this degree");
  CLI::Option* kdef_rdef_opt =
      kdef->add_option("--rdef", kdef_rdef, "also print R^def in this degree");

  // selftest ---------------------------------------------------------------
  std::uint64_t seed = defk::kDefaultSeed;
  CLI::App* selftest = app.add_subcommand("selftest", "run the cross-oracle corpus");
  selftest->add_option("--seed", seed, "corpus seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*check) {
      cmd_monoid_check(check_path);
    } else if (*gr) {
      if (gr_method == "telescope" && m0_option->count() == 0) {
        std::cerr << "error: --method telescope requires --m0\n";
        return kExitUsage;
      }
      cmd_monoid_gr(gr_path, gr_method, gr_m0, m0_option->count() > 0);
    } else if (*quot) {
      cmd_monoid_quotient(quot_path, quot_sub);
    } else if (*conj) {
      cmd_monoid_conjclasses(conj_path);
    } else if (*kpi) {
      std::cout << "pi_" << pi_m << " = "
                << defk::to_string(defk::pi(defk::parse_ku_expression(pi_expr), pi_m))
                << "\n";
    } else if (*krdef) {
      std::cout << "R^def_" << rdef_m << " = "
                << defk::to_string(
                       defk::bott_cokernel(defk::parse_ku_expression(rdef_expr), rdef_m))
                << "\n";
    } else if (*ksusp) {
      std::cout << "suspension_degree = "
                << defk::suspension_degree(defk::parse_ku_expression(susp_expr)) << "\n";
    } else if (*ksmash) {
      std::cout << defk::to_string(defk::smash(defk::parse_ku_expression(smash_a),
                                               defk::parse_ku_expression(smash_b)))
                << "\n";
    } else if (*kfree) {
      std::cout << defk::to_string(defk::free_product(defk::parse_ku_expression(free_a),
                                                      defk::parse_ku_expression(free_b)))
                << "\n";
    } else if (*kdef) {
      cmd_group_kdef(kdef_path,
                     kdef_pi_opt->count() ? std::optional<int>(kdef_pi) : std::nullopt,
                     kdef_rdef_opt->count() ? std::optional<int>(kdef_rdef) : std::nullopt);
    } else if (*selftest) {
      defk::SelftestReport report = defk::run_selftest(seed);
      std::cout << defk::format_report(report);
      return report.all_pass() ? 0 : kExitDomainError;
    }
  } catch (const defk::Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return e.name() == "ParseError" ? kExitUsage : kExitDomainError;
  }
  return 0;
}
