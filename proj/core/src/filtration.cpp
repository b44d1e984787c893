#include "lefgamma/filtration.hpp"

#include <stdexcept>

namespace lefgamma {

FiltrationProfile::FiltrationProfile(std::vector<FiltrationStep> s, unsigned f)
    : steps(std::move(s)), residue_degree(f) {
  if (residue_degree == 0) {
    throw std::invalid_argument("residue degree must be positive");
  }
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].exponent == 0) {
      throw std::invalid_argument("filtration exponents must be positive");
    }
    if (i > 0) {
      if (steps[i].rank >= steps[i - 1].rank) {
        throw std::invalid_argument("filtration ranks must be strictly decreasing");
      }
      if (steps[i].exponent <= steps[i - 1].exponent) {
        throw std::invalid_argument("filtration exponents must be strictly increasing");
      }
      if (steps[i].non_isotropic && !steps[i - 1].non_isotropic) {
        throw std::invalid_argument(
            "a non-isotropic submodule forces all containing modules to be non-isotropic");
      }
    }
  }
}

}  // namespace lefgamma
