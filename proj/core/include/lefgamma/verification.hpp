#pragma once

#include "lefgamma/bounds.hpp"
#include "lefgamma/exceptional_sets.hpp"
#include "lefgamma/numeric.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lefgamma {

/// Outcome of one oracle check. details carries counts, extremal cases or
/// the first counterexample found.
struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string details;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool all_passed() const;
};

struct VerifyOptions {
  bool quick = false;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

/// Runs every oracle the library ships: brute-force equivalences, exhaustive
/// point counts, cross-module set identities and reference-data diffs.
VerificationReport run_verification(const VerifyOptions& options = {});

// Building blocks, sized by the caller. The acceptance suite runs them at
// the grids the contracts demand; `verify --quick` uses smaller ones.

/// Exhaustive maximization of psi over the admissible rank grid.
Rational psi_grid_max(unsigned h, std::span<const unsigned> residue_degrees, PsiRegime regime);

/// Partitions of e into non-increasing positive parts.
std::vector<std::vector<unsigned>> partitions_of(unsigned e);

/// Closed-form identities of the factor dimensions.
VerificationCheck check_variety_identities(unsigned max_e, unsigned max_h);

/// Subset-by-subset agreement of the two gamma closed forms, monotonicity
/// under factor addition, the dimension upper bound and the singleton lower
/// bound, over all products of at most max_factors factors drawn from the
/// pool type x e <= max_e x h <= max_h x n <= max_n.
VerificationCheck check_gamma_grid(unsigned max_factors, unsigned max_e, unsigned max_h,
                                   unsigned max_n);

/// Reported argmax is the lexicographically smallest maximizer of the audit.
VerificationCheck check_gamma_argmax_rule(std::uint64_t seed, unsigned trials);

/// Stabilizer dimension oracle == d(d+-1)/2 over the given ambient
/// dimensions, both form kinds, every codimension, random_trials random
/// subspaces plus the crafted degenerate ones.
VerificationCheck check_stabilizer_dims(std::span<const unsigned> dims, unsigned random_trials,
                                        std::uint64_t seed, unsigned workers);

/// Exhaustive point counts over the toy grid; every index within a factor
/// of 4 of the predicted power, worked cases pinned exactly.
VerificationCheck check_point_counts(bool include_level2);

/// psi_max == psi_grid_max for all h <= max_h, all partitions of e <= max_e,
/// both regimes.
VerificationCheck check_psi_equivalence(unsigned max_h, unsigned max_e);

/// max(isotropic, full) == gamma of a single type III factor, and the full
/// regime dominates, for h <= max_h, e <= max_e.
VerificationCheck check_gamma_reconciliation(unsigned max_h, unsigned max_e);

/// Sampled decreasing weight sequences never beat the prefix maximum and the
/// indicator sequence attains it.
VerificationCheck check_prefix_max(unsigned instances, unsigned samples, std::uint64_t seed);

/// Brute force over small filtrations: the best ratio of torsion-cardinality
/// exponent to delta-augmented index exponent equals gamma of the single
/// type III factor with e = 1.
VerificationCheck check_filtration_reconciliation(unsigned max_h, unsigned max_steps,
                                                  unsigned max_exponent);

VerificationCheck check_set_consistency(SetTag tag, const Integer& bound);
VerificationCheck check_certificate_soundness(SetTag tag, const Integer& bound);

/// half_central_binomial_is_odd(k) iff k+1 is a power of two (k <=
/// max_k_predicate); v2_central_binomial matches the valuation of the
/// exactly computed binomial (k <= max_k_binomial).
VerificationCheck check_v2_lemma(std::uint64_t max_k_predicate, std::uint64_t max_k_binomial);

/// exclusion_dimensions(2B) halved equals enumerate_set(sigma_prime, B).
VerificationCheck check_minuscule_equivalence(const Integer& half_bound);

/// Duality is zero exactly where the table says it is.
VerificationCheck check_minuscule_duality(unsigned max_rank);

VerificationCheck check_odd_exclusion_reference();
VerificationCheck check_doubled_reference();

/// omega additivity on coprime pairs and the record holders of the
/// asymptotic ratio.
VerificationCheck check_degree_bound(std::uint64_t seed);
VerificationCheck check_omega_records();

}  // namespace lefgamma
