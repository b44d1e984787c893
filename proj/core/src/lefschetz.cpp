#include "lefgamma/lefschetz.hpp"

#include <stdexcept>

namespace lefgamma {

namespace {

std::string describe(const MembershipCertificate& cert) {
  std::string out = set_tag_name(cert.set) + " via " + cert.family + " (";
  bool first = true;
  for (const auto& [key, val] : cert.witnesses) {
    if (!first) out += ", ";
    out += key + "=" + val.str();
    first = false;
  }
  return out + ")";
}

}  // namespace

std::string verdict_status_name(VerdictStatus status) {
  return status == VerdictStatus::proven ? "proven" : "unknown";
}

LefschetzVerdict check_factor(const SimpleFactor& f) {
  LefschetzVerdict verdict;
  const Integer h(f.h);
  const bool type_iii = f.albert == AlbertType::III;
  std::vector<std::string> failures;

  // Clause 1: conditions on the relative dimension alone.
  if (!type_iii) {
    if (f.h % 2 == 1 || f.h == 2) {
      verdict.status = VerdictStatus::proven;
      verdict.criterion = 1;
      verdict.reasons.push_back("h=" + h.str() +
                                (f.h == 2 ? " equals 2" : " is odd") + " (types I/II)");
      return verdict;
    }
    failures.push_back("clause 1: h=" + h.str() + " is even and not 2");
  } else {
    if (f.h % 2 == 1) {
      if (auto cert = in_odd_exclusion(h)) {
        failures.push_back("clause 1: h=" + h.str() + " is an excluded value, " +
                           describe(*cert));
        verdict.certificates.push_back(*cert);
      } else {
        verdict.status = VerdictStatus::proven;
        verdict.criterion = 1;
        verdict.reasons.push_back("h=" + h.str() +
                                  " is odd and not an excluded half central binomial "
                                  "(exhaustive search negative)");
        return verdict;
      }
    } else {
      failures.push_back("clause 1: h=" + h.str() + " is even");
    }
  }

  // Clause 2: e = 1 and h outside the exceptional set of the type.
  if (f.e == 1) {
    auto cert = type_iii ? in_sigma_prime(h) : in_sigma(h);
    const std::string set_name = type_iii ? "sigma-prime" : "sigma";
    if (!cert) {
      verdict.status = VerdictStatus::proven;
      verdict.criterion = 2;
      verdict.reasons.push_back("e=1 and h=" + h.str() + " is outside " + set_name +
                                " (exhaustive family search negative)");
      return verdict;
    }
    failures.push_back("clause 2: h=" + h.str() + " is in " + describe(*cert));
    verdict.certificates.push_back(*cert);
  } else {
    failures.push_back("clause 2: e=" + std::to_string(f.e) + " is not 1");
  }

  verdict.status = VerdictStatus::unknown;
  verdict.reasons = std::move(failures);
  return verdict;
}

LefschetzVerdict check_product(const VarietyProduct& v) {
  LefschetzVerdict verdict;
  verdict.status = VerdictStatus::proven;
  for (std::size_t i = 0; i < v.factors.size(); ++i) {
    LefschetzVerdict factor_verdict = check_factor(v.factors[i]);
    const std::string prefix = "factor " + std::to_string(i) + ": ";
    verdict.reasons.push_back(prefix + verdict_status_name(factor_verdict.status) +
                              (factor_verdict.criterion
                                   ? " (clause " + std::to_string(*factor_verdict.criterion) + ")"
                                   : ""));
    for (const std::string& reason : factor_verdict.reasons) {
      verdict.reasons.push_back(prefix + reason);
    }
    for (auto& cert : factor_verdict.certificates) {
      verdict.certificates.push_back(std::move(cert));
    }
    if (factor_verdict.status != VerdictStatus::proven) {
      verdict.status = VerdictStatus::unknown;
    }
  }
  return verdict;
}

}  // namespace lefgamma
