#pragma once

#include <vector>

namespace lefgamma {

/// One step of a torsion-subgroup filtration: the rank of the saturated
/// submodule W_i, the exponent of the level it is attached to, and whether
/// W_i fails to be contained in a maximal isotropic subspace.
struct FiltrationStep {
  unsigned rank;
  unsigned exponent;
  bool non_isotropic = false;
};

/// Steps ordered from the largest submodule to the smallest: ranks strictly
/// decreasing, exponents strictly increasing (the big module sits at the
/// small level). Non-isotropy propagates to containing modules, so the
/// non_isotropic flags are a prefix of the steps. An empty profile models
/// the trivial subgroup.
struct FiltrationProfile {
  std::vector<FiltrationStep> steps;
  unsigned residue_degree = 1;

  FiltrationProfile() = default;
  FiltrationProfile(std::vector<FiltrationStep> steps, unsigned residue_degree = 1);

  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }
};

}  // namespace lefgamma
