#include "lefgamma/reports.hpp"
#include "lefgamma/version.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

namespace {

lefgamma::Json read_json_input(const std::string& path) {
  if (path == "-") {
    return lefgamma::Json::parse(std::cin);
  }
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open input file: " + path);
  }
  return lefgamma::Json::parse(in);
}

unsigned workers_from_env() {
  const char* env = std::getenv("LEFGAMMA_WORKERS");
  if (env == nullptr) {
    return 1;
  }
  const long value = std::strtol(env, nullptr, 10);
  if (value < 1) return 1;
  if (value > 64) return 64;
  return static_cast<unsigned>(value);
}

void emit(const lefgamma::Json& report, bool human) {
  if (human) {
    std::cout << lefgamma::render_human(report);
  } else {
    std::cout << lefgamma::canonical_dump(report) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lefgamma: exact torsion-growth exponents, exceptional dimension sets and "
      "group-theoretic verification oracles for products of simple abelian-variety factors"};
  app.set_version_flag("--version", lefgamma::kVersion);
  app.require_subcommand(1);

  bool human = false;
  std::uint64_t seed = 1;
  app.add_flag("--human", human, "render a plain-text table instead of JSON");
  app.add_option("--seed", seed, "seed for the randomized oracle batteries");

  std::string input_path = "-";
  bool no_audit = false;
  auto* cmd_gamma = app.add_subcommand("gamma", "compute the torsion exponent of a product");
  cmd_gamma->add_option("--input", input_path, "variety JSON file, or - for stdin");
  cmd_gamma->add_flag("--no-audit", no_audit, "omit the per-subset audit");

  auto* cmd_lef =
      app.add_subcommand("check-lefschetz", "decide the sufficient Lefschetz-type criteria");
  cmd_lef->add_option("--input", input_path, "variety JSON file, or - for stdin");

  std::string set_name = "sigma-prime";
  std::string bound_str, test_str, cache_path;
  bool doubled = false;
  auto* cmd_sets =
      app.add_subcommand("sets", "membership and enumeration of the exceptional sets");
  cmd_sets->add_option("--set", set_name, "sigma | sigma-prime | odd-exclusion");
  cmd_sets->add_option("--bound", bound_str, "enumerate all members up to this bound");
  cmd_sets->add_option("--test", test_str, "test one value for membership");
  cmd_sets->add_flag("--doubled", doubled, "enumerate {2h : h in sigma-prime, 2h <= bound}");
  cmd_sets->add_option("--cache", cache_path,
                       "enumeration cache file (useful for bounds >= 1e5)");

  std::vector<std::string> lookup_args;
  std::string exclusions_bound;
  auto* cmd_min = app.add_subcommand("minuscule", "minuscule tables and exclusion dimensions");
  cmd_min->add_option("--lookup", lookup_args, "TYPE RANK WEIGHT, e.g. D 5 omega_1")
      ->expected(3);
  cmd_min->add_option("--exclusions", exclusions_bound,
                      "enumerate exclusion dimensions up to this bound");

  bool verify_dims = false, point_count = false;
  auto* cmd_stab = app.add_subcommand("stabilizer", "stabilizer dimension and index oracles");
  cmd_stab->add_flag("--verify-dims", verify_dims, "run the dimension oracle battery");
  cmd_stab->add_flag("--point-count", point_count, "run the exhaustive toy point counts");

  std::string max_regime;
  auto* cmd_psi = app.add_subcommand("psi", "rank-maximization function and its closed maxima");
  cmd_psi->add_option("--input", input_path, "psi input JSON, or - for stdin");
  cmd_psi->add_option("--max-regime", max_regime, "isotropic | full: closed maximum instead");

  auto* cmd_prefix = app.add_subcommand("prefix-max", "prefix maximum of a ratio of sums");
  cmd_prefix->add_option("--input", input_path, "JSON {\"a\": [...], \"b\": [...]}");

  std::uint64_t degree_m = 0, omega_bound = 0;
  unsigned degree_h = 1;
  auto* cmd_deg = app.add_subcommand("degree-bound", "degree lower bound for a torsion point");
  cmd_deg->set_help_flag("--help", "print help");  // frees -h for the option below
  cmd_deg->add_option("--m", degree_m, "order of the torsion point");
  cmd_deg->add_option("--h", degree_h, "relative dimension");
  cmd_deg->add_option("--omega-check", omega_bound,
                      "empirical maximum of omega(m)*loglog(m)/log(m) up to the bound");

  bool quick = false;
  auto* cmd_verify = app.add_subcommand("verify", "run the full oracle suite");
  cmd_verify->add_flag("--quick", quick, "smaller grids, a few seconds");

  // let --human and --seed appear after the subcommand as well
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    lefgamma::Json report;
    if (cmd_gamma->parsed()) {
      report = lefgamma::gamma_report(read_json_input(input_path), !no_audit);
    } else if (cmd_lef->parsed()) {
      report = lefgamma::lefschetz_report(read_json_input(input_path));
    } else if (cmd_sets->parsed()) {
      lefgamma::SetsQuery query;
      if (set_name == "sigma") {
        query.set = lefgamma::SetTag::sigma;
      } else if (set_name == "sigma-prime") {
        query.set = lefgamma::SetTag::sigma_prime;
      } else if (set_name == "odd-exclusion") {
        query.set = lefgamma::SetTag::odd_exclusion;
      } else {
        throw std::invalid_argument("unknown set: " + set_name);
      }
      if (!bound_str.empty()) query.bound = lefgamma::Integer(bound_str);
      if (!test_str.empty()) query.test = lefgamma::Integer(test_str);
      query.doubled = doubled;
      if (!cache_path.empty()) query.cache_path = cache_path;
      if (!query.bound && !query.test) {
        throw std::invalid_argument("sets needs --bound and/or --test");
      }
      report = lefgamma::sets_report(query);
    } else if (cmd_min->parsed()) {
      if (!lookup_args.empty()) {
        report = lefgamma::minuscule_lookup_report(
            lookup_args[0], static_cast<unsigned>(std::stoul(lookup_args[1])), lookup_args[2]);
      } else if (!exclusions_bound.empty()) {
        report = lefgamma::minuscule_exclusions_report(lefgamma::Integer(exclusions_bound));
      } else {
        throw std::invalid_argument("minuscule needs --lookup or --exclusions");
      }
    } else if (cmd_stab->parsed()) {
      if (!verify_dims && !point_count) {
        verify_dims = point_count = true;
      }
      report = lefgamma::stabilizer_report(verify_dims, point_count, seed, workers_from_env());
    } else if (cmd_psi->parsed()) {
      std::optional<lefgamma::PsiRegime> regime;
      if (max_regime == "isotropic") {
        regime = lefgamma::PsiRegime::isotropic;
      } else if (max_regime == "full") {
        regime = lefgamma::PsiRegime::full;
      } else if (!max_regime.empty()) {
        throw std::invalid_argument("--max-regime must be isotropic or full");
      }
      report = lefgamma::psi_report(read_json_input(input_path), regime);
    } else if (cmd_prefix->parsed()) {
      report = lefgamma::prefix_max_report(read_json_input(input_path));
    } else if (cmd_deg->parsed()) {
      if (omega_bound > 0) {
        report = lefgamma::omega_check_report(omega_bound);
      } else if (degree_m > 0) {
        report = lefgamma::degree_bound_report(degree_m, degree_h);
      } else {
        throw std::invalid_argument("degree-bound needs --m or --omega-check");
      }
    } else if (cmd_verify->parsed()) {
      lefgamma::VerifyOptions options;
      options.quick = quick;
      options.seed = seed;
      options.workers = workers_from_env();
      report = lefgamma::verify_report(options);
      emit(report, human);
      return report.at("results").at("all_passed").get<bool>() ? 0 : 1;
    }
    emit(report, human);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << lefgamma::canonical_dump(lefgamma::Json{{"error", e.what()}}) << "\n";
    return 1;
  }
}
