#pragma once

#include <array>
#include <cstdint>

namespace lefgamma::fixtures {

/// Reference values reported in the literature for the doubled set
/// {2h : h in sigma_prime} up to 10^3. The published list is compared by
/// diff, never asserted verbatim: it omits 924 = 2*462 (F5 at k=2, s=1),
/// so the enumeration here legitimately differs from it.
inline constexpr std::array<std::uint32_t, 21> kReferenceDoubledSigmaPrime1e3 = {
    4,   6,   8,   16,  36,  64,  70,  100, 128, 144, 196,
    216, 256, 324, 400, 484, 512, 576, 676, 784, 900};

/// Published count of the same doubled set up to 10^6; reported side by side
/// with the count computed here (which is 515).
inline constexpr std::uint32_t kReferenceDoubledSigmaPrimeCount1e6 = 513;

/// Odd relative dimensions excluded from the odd-h criterion, up to 10^6.
inline constexpr std::array<std::uint32_t, 3> kReferenceOddExclusion1e6 = {3, 35, 6435};

}  // namespace lefgamma::fixtures
