#include <chrono>
#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "unitsig/families.hpp"
#include "unitsig/mqfield.hpp"
#include "unitsig/quadfield.hpp"
#include "unitsig/report.hpp"
#include "unitsig/sweeps.hpp"
#include "unitsig/verify_suite.hpp"

namespace {

using unitsig::Int;
using unitsig::report::json;

Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("not an integer: " + s);
  }
}

std::vector<Int> parse_ints(const std::vector<std::string>& in) {
  std::vector<Int> out;
  for (const auto& s : in) out.push_back(parse_int(s));
  return out;
}

/* "+-+" or "+1,-1,+1" become residue symbols */
std::vector<int> parse_symbols(const std::string& s) {
  std::vector<int> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == ',' || c == '1') continue;
    if (c == '+')
      out.push_back(1);
    else if (c == '-')
      out.push_back(-1);
    else
      throw CLI::ValidationError(std::string("bad symbol character: ") + c);
  }
  return out;
}

struct Output {
  bool as_json = false;
  bool timings = false;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  int emit(json j, int status = 0) const {
    if (timings) {
      std::chrono::duration<double> dt =
          std::chrono::steady_clock::now() - start;
      j["elapsed_seconds"] = dt.count();
    }
    if (as_json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << unitsig::report::render_text(j);
    return status;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unit signatures of real multiquadratic fields"};
  app.require_subcommand(1);

  Output out;
  bool full = false;
  unsigned long max_bits = 0;
  int threads = 0;
  std::uint64_t seed = 20250814;
  app.add_flag("--json", out.as_json, "emit JSON instead of text");
  app.add_flag("--timings", out.timings, "include elapsed wall time");
  app.add_flag("--full", full,
               "print full decimal expansions regardless of size");
  app.add_option("--max-bits", max_bits,
                 "precision cap for exact sign evaluation (>= 128)");
  app.add_option("--threads", threads,
                 "OpenMP team size for batch commands (0 = default)");
  app.add_option("--seed", seed, "seed for the sampled property checks");

  auto* cmd_unit = app.add_subcommand("unit", "fundamental unit of Q(sqrt(d))");
  std::string arg_d;
  cmd_unit->add_option("d", arg_d, "squarefree radicand > 1")->required();

  auto* cmd_m =
      app.add_subcommand("m", "square class data m of the fundamental unit");
  std::string m_d;
  cmd_m->add_option("d", m_d, "squarefree radicand > 1")->required();

  auto* cmd_analyze = app.add_subcommand(
      "analyze", "unit group, signatures and rank of a multiquadratic field");
  std::vector<std::string> analyze_ds;
  cmd_analyze->add_option("d", analyze_ds, "squarefree radicands")
      ->required()
      ->expected(1, 6);

  auto* cmd_classify =
      app.add_subcommand("classify", "Kuroda case of Q(sqrt(d1), sqrt(d2))");
  std::vector<std::string> classify_ds;
  cmd_classify->add_option("d", classify_ds, "two squarefree radicands")
      ->required()
      ->expected(2);

  auto* cmd_pm = app.add_subcommand(
      "possible-m", "candidate m-blocks from a residue symbol table");
  std::vector<std::string> pm_primes;
  std::string pm_symbols;
  unsigned pm_n = 0;
  cmd_pm->add_option("--primes", pm_primes, "comma separated prime tuple")
      ->delimiter(',');
  cmd_pm->add_option("--symbols", pm_symbols,
                     "upper-triangle symbols, e.g. +-+ or +1,-1,+1");
  cmd_pm->add_option("--n", pm_n, "tuple size when using --symbols");

  auto* cmd_search =
      app.add_subcommand("search", "enumerate verified family members");
  std::string search_family_id;
  std::uint64_t search_bound = 0;
  cmd_search->add_option("family", search_family_id,
                         "rank4 | rank3-n2plus1 | q3mod4-pairs | deficiency3")
      ->required();
  cmd_search->add_option("--bound", search_bound, "strict parameter bound")
      ->required();

  auto* cmd_verify = app.add_subcommand(
      "verify", "check one configuration against its family's predictions");
  std::string verify_id;
  std::vector<std::string> verify_params;
  cmd_verify->add_option("family", verify_id,
                         "rank4 | rank3-n2plus1 | q3mod4-pairs | deficiency3 "
                         "| prime-triquad-min | octuple | qmulti | composite")
      ->required();
  cmd_verify->add_option("params", verify_params, "family parameters")
      ->required()
      ->expected(1, 64);

  auto* cmd_density = app.add_subcommand(
      "density", "enclosure of the norm -1 density constant");
  std::uint64_t density_bound = 100000;
  cmd_density->add_option("--prime-bound", density_bound,
                          "use primes up to this bound (>= 1000)");

  auto* cmd_configs = app.add_subcommand(
      "enumerate-configs",
      "count 6-prime residue tables admitting the deficiency-3 construction");

  auto* cmd_cyc = app.add_subcommand(
      "cyclotomic-bound",
      "deficiency lower bound for the n-th cyclotomic real subfield");
  std::string cyc_n;
  cmd_cyc->add_option("n", cyc_n, "modulus n >= 1")->required();

  auto* cmd_paper = app.add_subcommand(
      "verify-paper", "run the bundled verification suite of claim groups");
  int paper_section = 0;
  cmd_paper->add_option("--section", paper_section,
                        "run a single claim group (1..12)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  unitsig::report::BigIntPolicy pol;
  pol.full = full;

  try {
    if (max_bits != 0) unitsig::set_sign_precision_cap(max_bits);

    if (cmd_unit->parsed())
      return out.emit(unitsig::report::unit_report(parse_int(arg_d), pol));

    if (cmd_m->parsed())
      return out.emit(unitsig::report::m_report(parse_int(m_d), pol));

    if (cmd_analyze->parsed())
      return out.emit(
          unitsig::report::analyze_report(parse_ints(analyze_ds), pol));

    if (cmd_classify->parsed())
      return out.emit(unitsig::report::classify_report(
          parse_int(classify_ds[0]), parse_int(classify_ds[1]), pol));

    if (cmd_pm->parsed()) {
      const bool by_primes = !pm_primes.empty();
      const bool by_symbols = !pm_symbols.empty();
      if (by_primes == by_symbols)
        throw CLI::ValidationError(
            "possible-m needs exactly one of --primes and --symbols");
      unitsig::ResidueAssignment a = [&] {
        if (by_primes)
          return unitsig::ResidueAssignment::from_primes(
              parse_ints(pm_primes));
        if (pm_n < 2)
          throw CLI::ValidationError("--symbols requires --n >= 2");
        /* three-prime tables are symmetric, 3 mod 4 tables antisymmetric */
        return unitsig::ResidueAssignment::from_symbols(
            pm_n, parse_symbols(pm_symbols), pm_n != 3);
      }();
      if (a.size() != 3 && a.size() % 2 != 0)
        throw CLI::ValidationError(
            "tuple size must be 3 or even, got " + std::to_string(a.size()));
      return out.emit(unitsig::report::possible_m_report(a));
    }

    if (cmd_search->parsed())
      return out.emit(unitsig::report::search_report(
          unitsig::search_family(search_family_id, search_bound)));

    if (cmd_verify->parsed()) {
      auto v = unitsig::verify_family(verify_id, parse_ints(verify_params));
      return out.emit(unitsig::report::verdict_report(v), v.pass ? 0 : 1);
    }

    if (cmd_density->parsed())
      return out.emit(unitsig::report::density_report(
          unitsig::parallel::density(density_bound, threads)));

    if (cmd_configs->parsed())
      return out.emit(unitsig::report::configs_report(
          unitsig::parallel::residue_configs(threads)));

    if (cmd_cyc->parsed()) {
      Int n = parse_int(cyc_n);
      return out.emit(unitsig::report::cyclotomic_report(
          n, unitsig::cyclotomic_deficiency_bound(n)));
    }

    if (cmd_paper->parsed()) {
      unitsig::VerifyOptions opts;
      opts.threads = threads;
      opts.seed = seed;
      opts.section = paper_section;
      auto groups = unitsig::run_verification(opts);
      return out.emit(unitsig::report::claims_report(groups),
                      unitsig::all_passed(groups) ? 0 : 1);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
