#pragma once

#include "lefgamma/numeric.hpp"
#include "lefgamma/variety.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace lefgamma {

struct SubsetFraction {
  std::vector<std::size_t> subset;  // 0-based factor indices, ascending
  Rational value;
};

/// Exact torsion exponent of a product with a maximizing subset as witness.
/// The witness is the lexicographically smallest maximizer, so results are
/// reproducible. audit holds the per-subset fractions when requested.
struct GammaResult {
  Rational value;
  std::vector<std::size_t> argmax;
  std::vector<SubsetFraction> audit;
};

struct GammaOptions {
  bool audit = false;
  std::size_t max_factors = 20;  // cap on exhaustive subset enumeration
};

/// Torsion exponent of a single simple factor (multiplicity ignored):
///   2*d*e*h / (1 + e*(2h^2 + eta*h)).
Rational gamma_simple(const SimpleFactor& f);

/// The fraction attached to one subset of factor indices:
///   2 * sum n_i*d_i*e_i*h_i / (1 + sum e_i*(2h_i^2 + eta_i*h_i)).
Rational subset_fraction(const VarietyProduct& v, std::span<const std::size_t> subset);

/// Same number computed along the conjectural route, through the dimension
/// and Hodge-dimension operations: 2 * sum n_i*dim(A_i) / (1 + hodge_dim).
/// Used to cross-check the two closed forms subset by subset.
Rational gamma_conjectural_form(const VarietyProduct& v, std::span<const std::size_t> subset);

/// Exact maximum of subset_fraction over all nonempty subsets of factor
/// indices. Throws if the product has more than options.max_factors factors.
GammaResult gamma_product(const VarietyProduct& v, const GammaOptions& options = {});

}  // namespace lefgamma
