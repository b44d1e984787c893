#include "lefgamma/gamma.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefgamma {

namespace {

void check_subset(const VarietyProduct& v, std::span<const std::size_t> subset) {
  if (subset.empty()) {
    throw std::invalid_argument("empty subset");
  }
  for (std::size_t i : subset) {
    if (i >= v.factors.size()) {
      throw std::invalid_argument("factor index out of range");
    }
  }
}

}  // namespace

Rational gamma_simple(const SimpleFactor& f) {
  const Integer h(f.h);
  const Integer num = 2 * Integer(albert_d(f.albert)) * f.e * h;
  const Integer den = 1 + Integer(f.e) * (2 * h * h + albert_eta(f.albert) * h);
  return make_fraction(num, den);
}

Rational subset_fraction(const VarietyProduct& v, std::span<const std::size_t> subset) {
  check_subset(v, subset);
  Integer num = 0;
  Integer den = 1;
  for (std::size_t i : subset) {
    const SimpleFactor& f = v.factors[i];
    const Integer h(f.h);
    num += Integer(f.n) * albert_d(f.albert) * f.e * h;
    den += Integer(f.e) * (2 * h * h + albert_eta(f.albert) * h);
  }
  return make_fraction(2 * num, den);
}

Rational gamma_conjectural_form(const VarietyProduct& v, std::span<const std::size_t> subset) {
  check_subset(v, subset);
  Integer num = 0;
  std::vector<SimpleFactor> chosen;
  chosen.reserve(subset.size());
  for (std::size_t i : subset) {
    const SimpleFactor& f = v.factors[i];
    num += Integer(f.n) * factor_dimension(f);
    chosen.push_back(f);
  }
  return make_fraction(2 * num, 1 + hodge_dimension(chosen));
}

GammaResult gamma_product(const VarietyProduct& v, const GammaOptions& options) {
  const std::size_t d = v.factors.size();
  if (d > options.max_factors) {
    throw std::invalid_argument("too many factors for exhaustive subset search");
  }

  GammaResult result;
  bool have_best = false;
  std::vector<std::size_t> subset;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < d; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        subset.push_back(i);
      }
    }
    Rational value = subset_fraction(v, subset);
    if (options.audit) {
      result.audit.push_back({subset, value});
    }
    // Ties go to the lexicographically smallest index set.
    if (!have_best || value > result.value ||
        (value == result.value &&
         std::lexicographical_compare(subset.begin(), subset.end(), result.argmax.begin(),
                                      result.argmax.end()))) {
      result.value = std::move(value);
      result.argmax = subset;
      have_best = true;
    }
  }
  return result;
}

}  // namespace lefgamma
