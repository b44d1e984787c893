#pragma once

#include "lefgamma/json_io.hpp"
#include "lefgamma/verification.hpp"

#include <optional>
#include <string>

namespace lefgamma {

/// Every CLI subcommand produces a single JSON report document:
///   {"command": ..., "inputs": <canonical echo>, "results": ...,
///    "diffs": ... (optional), "version": ...}
/// Reports are deterministic given inputs and seed.

Json gamma_report(const Json& variety_input, bool audit);
Json lefschetz_report(const Json& variety_input);

struct SetsQuery {
  SetTag set = SetTag::sigma_prime;
  std::optional<Integer> bound;
  std::optional<Integer> test;
  bool doubled = false;
  std::optional<std::string> cache_path;  // enumeration cache, one line per value
};
Json sets_report(const SetsQuery& query);

Json minuscule_lookup_report(const std::string& type, unsigned rank,
                             const std::string& weight_spec);
Json minuscule_exclusions_report(const Integer& bound);

Json stabilizer_report(bool verify_dims, bool point_count, std::uint64_t seed, unsigned workers);

Json psi_report(const Json& input, std::optional<PsiRegime> max_regime);
Json prefix_max_report(const Json& input);
Json degree_bound_report(std::uint64_t m, unsigned h);
Json omega_check_report(std::uint64_t bound);

Json verify_report(const VerifyOptions& options);

/// Plain-text rendering of a report for the --human flag.
std::string render_human(const Json& report);

}  // namespace lefgamma
