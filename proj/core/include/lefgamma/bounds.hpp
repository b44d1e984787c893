#pragma once

#include "lefgamma/filtration.hpp"
#include "lefgamma/numeric.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace lefgamma {

/// Input of the rank-maximization function psi: relative dimension h, the
/// residue degrees f(lambda) (their sum is e), one rank per place, and the
/// cyclotomic flag delta. delta = 0 is the maximal-isotropic case and
/// requires every rank <= h; ranks never exceed 2h.
struct PsiInput {
  unsigned h;
  std::vector<unsigned> residue_degrees;
  std::vector<unsigned> ranks;
  bool delta;

  PsiInput(unsigned h, std::vector<unsigned> residue_degrees, std::vector<unsigned> ranks,
           bool delta);
};

/// psi = 2 * sum f*r / (delta + sum f * r*(4h-1-r)/2), exact. Throws
/// "trivial subgroup" when the denominator vanishes (delta = 0, all ranks 0).
Rational psi(const PsiInput& input);

enum class PsiRegime { isotropic, full };

/// Closed form of the maximum of psi over the rank grid:
///   isotropic (delta = 0, r <= h):  4/(3h-1), independent of the degrees
///   full      (delta = 1, r <= 2h): 4eh/(1 + e(2h^2 - h)), e = sum f
Rational psi_max(unsigned h, std::span<const unsigned> residue_degrees, PsiRegime regime);

struct PrefixMaxResult {
  Rational value;
  std::size_t k;  // smallest 1-based prefix length attaining the maximum
};

/// max over prefixes k of (a_1+...+a_k)/(b_1+...+b_k). This equals the
/// supremum of (sum a_i m_i)/(sum b_i m_i) over weight sequences
/// m_1 >= ... >= m_t >= 0 not all zero, attained by the 0/1 indicator of
/// the reported prefix. Requires equal lengths and positive b prefix sums.
PrefixMaxResult prefix_max(std::span<const Rational> a, std::span<const Rational> b);

/// Exponent of the cardinality of the torsion subgroup described by the
/// profile: d_albert * f * sum (r_i - r_{i+1}) * m_i, with r_{t+1} = 0.
Integer torsion_card_exponent(const FiltrationProfile& profile, unsigned d_albert);

struct DegreeLowerBound {
  unsigned omega;     // number of distinct prime divisors of m
  Integer principal;  // m^(2h)
};

/// Structural components of the degree lower bound for a torsion point of
/// order m: the multiplicative constant is existential and never invented
/// here. m must fit in 64 bits.
DegreeLowerBound degree_lower_bound(std::uint64_t m, unsigned h);

struct OmegaRatioResult {
  double max_ratio;      // max of omega(m) * log log m / log m over [3, bound]
  std::uint64_t argmax;  // smallest m attaining it
};

/// Empirical check of the classical estimate omega(m) = O(log m / log log m).
/// The one deliberately floating-point operation in the library; excluded
/// from all exactness invariants.
OmegaRatioResult omega_asymptotic_check(std::uint64_t bound);

}  // namespace lefgamma
