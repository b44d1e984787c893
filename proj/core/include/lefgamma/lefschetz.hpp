#pragma once

#include "lefgamma/exceptional_sets.hpp"
#include "lefgamma/variety.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lefgamma {

/// The criteria here are sufficient conditions, so the negative outcome is
/// "unknown", never "disproven".
enum class VerdictStatus { proven, unknown };

struct LefschetzVerdict {
  VerdictStatus status = VerdictStatus::unknown;
  std::optional<int> criterion;  // 1 or 2, the matched clause (lowest wins)
  std::vector<std::string> reasons;
  std::vector<MembershipCertificate> certificates;  // memberships cited in reasons
};

/// Per-factor test of the two sufficient clauses:
///   clause 1: types I/II with h odd or h = 2; type III with h odd and h not
///             an excluded half central binomial.
///   clause 2: e = 1 and h outside sigma (types I/II) or sigma_prime (III).
LefschetzVerdict check_factor(const SimpleFactor& f);

/// Proven iff every factor is proven (a product of factors of these types
/// that are each fully of Lefschetz type is itself fully of Lefschetz type).
LefschetzVerdict check_product(const VarietyProduct& v);

std::string verdict_status_name(VerdictStatus status);

}  // namespace lefgamma
