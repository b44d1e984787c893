#include "lefgamma/reports.hpp"

#include "lefgamma/fixtures.hpp"
#include "lefgamma/version.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lefgamma {

namespace {

Json make_report(const std::string& command, Json inputs, Json results) {
  return Json{{"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"version", kVersion}};
}

SetTag set_from_string(const std::string& s) {
  if (s == "sigma") return SetTag::sigma;
  if (s == "sigma-prime") return SetTag::sigma_prime;
  if (s == "odd-exclusion") return SetTag::odd_exclusion;
  throw std::invalid_argument("unknown set: " + s);
}

Rational fraction_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Rational(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
      return Rational(Integer(s));
    }
    return make_fraction(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  }
  if (j.is_object() && j.contains("num") && j.contains("den")) {
    return make_fraction(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
  }
  throw std::invalid_argument("expected a fraction (integer, \"p/q\" or {num, den})");
}

Json checks_json(const std::vector<VerificationCheck>& checks) {
  Json out = Json::array();
  for (const VerificationCheck& c : checks) {
    out.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"details", c.details}});
  }
  return out;
}

}  // namespace

Json gamma_report(const Json& variety_input, bool audit) {
  const VarietyProduct v = variety_from_json(variety_input);
  GammaOptions options;
  options.audit = audit;
  const GammaResult result = gamma_product(v, options);
  Json results = gamma_result_json(result);
  results["total_dimension"] = integer_json(total_dimension(v));
  return make_report("gamma", variety_json(v), std::move(results));
}

Json lefschetz_report(const Json& variety_input) {
  const VarietyProduct v = variety_from_json(variety_input);
  Json factors = Json::array();
  for (std::size_t i = 0; i < v.factors.size(); ++i) {
    Json fj = verdict_json(check_factor(v.factors[i]));
    fj["index"] = i;
    factors.push_back(std::move(fj));
  }
  Json results{{"product", verdict_json(check_product(v))}, {"factors", std::move(factors)}};
  return make_report("check-lefschetz", variety_json(v), std::move(results));
}

namespace {

using Members = std::vector<std::pair<Integer, MembershipCertificate>>;

std::string cache_header(const SetsQuery& query) {
  return "# lefgamma sets cache set=" + set_tag_name(query.set) +
         " bound=" + query.bound->str() + " doubled=" + (query.doubled ? "1" : "0");
}

Members load_cache(const SetsQuery& query) {
  std::ifstream in(*query.cache_path);
  if (!in) return {};
  std::string line;
  if (!std::getline(in, line) || line != cache_header(query)) return {};
  Members members;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) return {};
    const Integer value(line.substr(0, tab));
    const Json cj = Json::parse(line.substr(tab + 1));
    MembershipCertificate cert;
    cert.set = set_from_string(cj.at("set").get<std::string>());
    cert.family = cj.at("family").get<std::string>();
    for (const auto& [key, wj] : cj.at("witnesses").items()) {
      cert.witnesses[key] = integer_from_json(wj);
    }
    cert.value = integer_from_json(cj.at("value"));
    if (!members.empty() && members.back().first >= value) return {};  // must be sorted
    members.emplace_back(value, std::move(cert));
  }
  return members;
}

void store_cache(const SetsQuery& query, const Members& members) {
  std::ofstream out(*query.cache_path);
  if (!out) return;
  out << cache_header(query) << '\n';
  for (const auto& [value, cert] : members) {
    out << value.str() << '\t' << canonical_dump(certificate_json(cert)) << '\n';
  }
}

}  // namespace

Json sets_report(const SetsQuery& query) {
  Json inputs{{"set", set_tag_name(query.set)}, {"doubled", query.doubled}};
  Json results;

  if (query.test) {
    inputs["test"] = integer_json(*query.test);
    const auto cert = set_membership(query.set, *query.test);
    results["member"] = cert.has_value();
    if (cert) {
      results["certificate"] = certificate_json(*cert);
    } else {
      results["negative"] = "exhaustive family search found no representation";
    }
  }

  if (query.bound) {
    inputs["bound"] = integer_json(*query.bound);
    if (query.doubled && query.set != SetTag::sigma_prime) {
      throw std::invalid_argument("--doubled applies to sigma-prime only");
    }
    Members members;
    bool from_cache = false;
    if (query.cache_path) {
      members = load_cache(query);
      from_cache = !members.empty();
    }
    if (members.empty()) {
      members = query.doubled ? doubled_sigma_prime(*query.bound)
                              : enumerate_set(query.set, *query.bound);
      if (query.cache_path && !from_cache) {
        store_cache(query, members);
      }
    }
    Json values = Json::array();
    Json certs = Json::array();
    for (const auto& [value, cert] : members) {
      values.push_back(integer_json(value));
      certs.push_back(certificate_json(cert));
    }
    results["count"] = members.size();
    results["values"] = std::move(values);
    results["certificates"] = std::move(certs);
    if (from_cache) {
      results["cache"] = *query.cache_path;
    }

    // Diff against the published reference data for the doubled set.
    if (query.doubled) {
      Json diffs;
      std::set<Integer> ours;
      for (const auto& [value, cert] : members) {
        if (value <= 1000) ours.insert(value);
      }
      Json matched = Json::array(), extra = Json::array(), missing = Json::array();
      std::set<Integer> reference;
      for (std::uint32_t r : fixtures::kReferenceDoubledSigmaPrime1e3) {
        if (Integer(r) <= *query.bound) reference.insert(Integer(r));
      }
      for (const Integer& x : ours) {
        (reference.count(x) ? matched : extra).push_back(integer_json(x));
      }
      for (const Integer& x : reference) {
        if (!ours.count(x)) missing.push_back(integer_json(x));
      }
      diffs["reference_list_1e3"] = Json{{"matched", std::move(matched)},
                                         {"extra", std::move(extra)},
                                         {"missing", std::move(missing)}};
      if (*query.bound >= 1000000) {
        std::size_t below = 0;
        for (const auto& [value, cert] : members) {
          if (value <= 1000000) ++below;
        }
        diffs["reference_count_1e6"] = Json{
            {"published", fixtures::kReferenceDoubledSigmaPrimeCount1e6},
            {"computed", below},
            {"delta", static_cast<long long>(below) -
                          static_cast<long long>(fixtures::kReferenceDoubledSigmaPrimeCount1e6)}};
      }
      Json report = make_report("sets", std::move(inputs), std::move(results));
      report["diffs"] = std::move(diffs);
      return report;
    }
  }

  return make_report("sets", std::move(inputs), std::move(results));
}

namespace {

Weight weight_from_spec(RootSystem type, const std::string& spec, unsigned rank) {
  if (type == RootSystem::A) {
    if (spec.rfind("omega_", 0) == 0) {
      return {WeightKind::fundamental, static_cast<unsigned>(std::stoul(spec.substr(6)))};
    }
    throw std::invalid_argument("type A weights are omega_<r>");
  }
  if (type == RootSystem::B) {
    if (spec == "spin" || spec == "omega_l" || spec == "omega_" + std::to_string(rank)) {
      return {WeightKind::spin};
    }
    throw std::invalid_argument("type B carries only the spin weight");
  }
  if (type == RootSystem::C) {
    if (spec == "omega_1") return {WeightKind::vector};
    throw std::invalid_argument("type C carries only omega_1");
  }
  if (spec == "omega_1") return {WeightKind::vector};
  if (spec == "spin" || spec == "omega_l" || spec == "omega_" + std::to_string(rank) ||
      spec == "omega_" + std::to_string(rank - 1)) {
    return {WeightKind::spin};
  }
  throw std::invalid_argument("type D carries omega_1 or the spin weights");
}

RootSystem root_system_from_string(const std::string& s) {
  if (s == "A") return RootSystem::A;
  if (s == "B") return RootSystem::B;
  if (s == "C") return RootSystem::C;
  if (s == "D") return RootSystem::D;
  throw std::invalid_argument("unknown root system: " + s);
}

}  // namespace

Json minuscule_lookup_report(const std::string& type, unsigned rank,
                             const std::string& weight_spec) {
  const RootSystem rs = root_system_from_string(type);
  const MinusculeEntry entry = table_lookup(rs, rank, weight_from_spec(rs, weight_spec, rank));
  Json inputs{{"type", type}, {"rank", rank}, {"weight", weight_spec}};
  return make_report("minuscule", std::move(inputs),
                     Json{{"entry", minuscule_entry_json(entry)}});
}

Json minuscule_exclusions_report(const Integer& bound) {
  Json inputs{{"exclusions_bound", integer_json(bound)}};
  const auto witnessed = exclusion_dimensions_witnessed(bound);
  Json values = Json::array(), halved = Json::array(), witnesses = Json::array();
  for (const auto& [value, decomp] : witnessed) {
    values.push_back(integer_json(value));
    halved.push_back(integer_json(value / 2));
    witnesses.push_back(decomposition_json(decomp));
  }
  // cross-module consistency with the closed families
  bool matches = true;
  const auto closed = enumerate_set(SetTag::sigma_prime, bound / 2);
  if (closed.size() != witnessed.size()) {
    matches = false;
  } else {
    for (std::size_t i = 0; i < closed.size(); ++i) {
      if (2 * closed[i].first != witnessed[i].first) {
        matches = false;
        break;
      }
    }
  }
  Json results{{"count", witnessed.size()},
               {"dimensions", std::move(values)},
               {"halved", std::move(halved)},
               {"witnesses", std::move(witnesses)},
               {"matches_sigma_prime", matches}};
  return make_report("minuscule", std::move(inputs), std::move(results));
}

Json stabilizer_report(bool verify_dims, bool point_count, std::uint64_t seed, unsigned workers) {
  Json inputs{{"verify_dims", verify_dims},
              {"point_count", point_count},
              {"seed", seed},
              {"workers", workers}};
  std::vector<VerificationCheck> checks;
  if (verify_dims) {
    const std::vector<unsigned> dims{2, 4, 6, 8};
    checks.push_back(check_stabilizer_dims(dims, 50, seed, workers));
  }
  if (point_count) {
    checks.push_back(check_point_counts(true));
  }
  bool all = true;
  for (const auto& c : checks) all = all && c.passed;
  return make_report("stabilizer", std::move(inputs),
                     Json{{"checks", checks_json(checks)}, {"all_passed", all}});
}

Json psi_report(const Json& input, std::optional<PsiRegime> max_regime) {
  const unsigned h = input.at("h").get<unsigned>();
  const auto degrees = input.at("residue_degrees").get<std::vector<unsigned>>();
  Json results;
  if (max_regime) {
    const Rational closed = psi_max(h, degrees, *max_regime);
    const Rational grid = psi_grid_max(h, degrees, *max_regime);
    results["psi_max"] = rational_json(closed);
    results["grid_max"] = rational_json(grid);
    results["agreement"] = closed == grid;
  } else {
    const PsiInput psi_input(h, degrees, input.at("ranks").get<std::vector<unsigned>>(),
                             input.at("delta").get<int>() != 0);
    results["psi"] = rational_json(psi(psi_input));
  }
  return make_report("psi", input, std::move(results));
}

Json prefix_max_report(const Json& input) {
  std::vector<Rational> a, b;
  for (const Json& j : input.at("a")) a.push_back(fraction_from_json(j));
  for (const Json& j : input.at("b")) b.push_back(fraction_from_json(j));
  const PrefixMaxResult result = prefix_max(a, b);
  return make_report(
      "prefix-max", input,
      Json{{"value", rational_json(result.value)}, {"k", result.k}});
}

Json degree_bound_report(std::uint64_t m, unsigned h) {
  const DegreeLowerBound bound = degree_lower_bound(m, h);
  return make_report("degree-bound", Json{{"m", m}, {"h", h}},
                     Json{{"omega", bound.omega}, {"principal", integer_json(bound.principal)}});
}

Json omega_check_report(std::uint64_t bound) {
  const OmegaRatioResult result = omega_asymptotic_check(bound);
  return make_report("degree-bound", Json{{"omega_check_bound", bound}},
                     Json{{"max_ratio", result.max_ratio}, {"argmax", result.argmax}});
}

Json verify_report(const VerifyOptions& options) {
  const VerificationReport report = run_verification(options);
  Json inputs{{"quick", options.quick}, {"seed", options.seed}, {"workers", options.workers}};
  return make_report(
      "verify", std::move(inputs),
      Json{{"checks", checks_json(report.checks)}, {"all_passed", report.all_passed()}});
}

std::string render_human(const Json& report) {
  std::ostringstream out;
  const std::string command = report.value("command", "");
  out << command << " (lefgamma " << report.value("version", "") << ")\n";
  const Json& results = report.at("results");
  if (command == "gamma") {
    out << "  gamma = " << results.at("gamma").at("num").get<std::string>() << "/"
        << results.at("gamma").at("den").get<std::string>() << "\n  argmax subset:";
    for (const Json& i : results.at("argmax")) {
      out << " " << i.get<std::size_t>();
    }
    out << "\n";
    if (results.contains("audit")) {
      for (const Json& entry : results.at("audit")) {
        out << "    subset";
        for (const Json& i : entry.at("subset")) out << " " << i.get<std::size_t>();
        out << ": " << entry.at("value").at("num").get<std::string>() << "/"
            << entry.at("value").at("den").get<std::string>() << "\n";
      }
    }
  } else if (command == "verify" || command == "stabilizer") {
    for (const Json& check : results.at("checks")) {
      out << "  [" << (check.at("passed").get<bool>() ? "pass" : "FAIL") << "] "
          << check.at("name").get<std::string>() << ": "
          << check.at("details").get<std::string>() << "\n";
    }
    out << (results.at("all_passed").get<bool>() ? "  all checks passed\n"
                                                 : "  SOME CHECKS FAILED\n");
  } else if (command == "sets" && results.contains("values")) {
    out << "  " << results.at("count").get<std::size_t>() << " values:";
    for (const Json& v : results.at("values")) out << " " << v.get<std::string>();
    out << "\n";
    if (report.contains("diffs")) {
      out << "  diffs: " << report.at("diffs").dump() << "\n";
    }
  } else {
    out << report.dump(2) << "\n";
  }
  return out.str();
}

}  // namespace lefgamma
