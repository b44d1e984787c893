#pragma once

#include "lefgamma/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lefgamma {

/// The three exceptional dimension sets handled by this module.
///
/// sigma:          g = 2^(k-1)*a^k (k >= 3, a >= 1)  or  2g = binom(2k,k) (k >= 3)
/// sigma_prime:    union of the six families F1..F6 below, all with s >= 1
/// odd_exclusion:  h = binom(2^(m+2), 2^(m+1)) / 2 (m >= 0)
///
/// sigma_prime families:
///   F1 = 2^((4k+3)s-1), k >= 0        F4 = 2^(2s-1) * k^(2s), k >= 2
///   F2 = 2^(4ks-1),     k >= 1        F5 = binom(4k+4,2k+2)^s / 2,    k >= 0
///   F3 = 2^(2s(4k+1)-1), k >= 1       F6 = binom(4k+2,2k+1)^(2s) / 2, k >= 0
enum class SetTag { sigma, sigma_prime, odd_exclusion };

std::string set_tag_name(SetTag tag);

/// Proof object for set membership: the family that produced the element and
/// the integer witnesses. Re-evaluating the family formula at the witnesses
/// reproduces value exactly (see evaluate_certificate).
struct MembershipCertificate {
  SetTag set;
  std::string family;  // "F1".."F6" for sigma_prime, "F1"/"F2" for sigma, "F1" for odd_exclusion
  std::map<std::string, Integer> witnesses;  // keys among {k, s, a, m}
  Integer value;
};

/// Human-readable formula of a family, e.g. "2^((4k+3)s-1)".
std::string family_formula(SetTag tag, const std::string& family);

/// Recomputes the element from (set, family, witnesses). Throws on an
/// unknown family or missing witness.
Integer evaluate_certificate(const MembershipCertificate& cert);

/// Membership tests. Searches are complete: every family is strictly
/// increasing in each parameter, so the cutoffs are exact. The certificate
/// returned is the first match in family order, then smallest s, then
/// smallest k (for sigma: family order, then smallest k).
std::optional<MembershipCertificate> in_sigma(const Integer& g);
std::optional<MembershipCertificate> in_sigma_prime(const Integer& h);
std::optional<MembershipCertificate> in_odd_exclusion(const Integer& h);

std::optional<MembershipCertificate> set_membership(SetTag tag, const Integer& x);

/// Sorted, deduplicated list of all members <= bound, one certificate each.
/// Certificates agree with the ones the membership tests return.
std::vector<std::pair<Integer, MembershipCertificate>> enumerate_set(SetTag tag,
                                                                     const Integer& bound);

/// {2h : h in sigma_prime, 2h <= bound}, each paired with the certificate of
/// h. This is the g-style view used to compare against published reference
/// lists, which are stated in terms of g = 2h.
std::vector<std::pair<Integer, MembershipCertificate>> doubled_sigma_prime(const Integer& bound);

/// v2(binom(4k+4, 2k+2)), computed as the binary digit sum of k+1.
unsigned v2_central_binomial(std::uint64_t k);

/// True iff binom(4k+4, 2k+2)/2 is odd, i.e. v2_central_binomial(k) == 1,
/// i.e. k+1 is a power of two.
bool half_central_binomial_is_odd(std::uint64_t k);

}  // namespace lefgamma
