#include "lefgamma/variety.hpp"

#include <stdexcept>

namespace lefgamma {

int albert_d(AlbertType type) { return type == AlbertType::I ? 1 : 2; }

int albert_eta(AlbertType type) { return type == AlbertType::III ? -1 : 1; }

std::string albert_name(AlbertType type) {
  switch (type) {
    case AlbertType::I:
      return "I";
    case AlbertType::II:
      return "II";
    case AlbertType::III:
      return "III";
  }
  throw std::logic_error("unreachable");
}

SimpleFactor::SimpleFactor(AlbertType albert, unsigned e, unsigned h, unsigned n)
    : albert(albert), e(e), h(h), n(n) {
  if (e == 0) {
    throw std::invalid_argument("center degree e must be positive");
  }
  if (h == 0) {
    throw std::invalid_argument("relative dimension h must be positive");
  }
  if (n == 0) {
    throw std::invalid_argument("multiplicity n must be positive");
  }
}

VarietyProduct::VarietyProduct(std::vector<SimpleFactor> fs) : factors(std::move(fs)) {
  if (factors.empty()) {
    throw std::invalid_argument("a variety product needs at least one factor");
  }
}

Integer factor_dimension(const SimpleFactor& f) {
  return Integer(albert_d(f.albert)) * f.e * f.h;
}

Integer hodge_dimension(std::span<const SimpleFactor> subset) {
  if (subset.empty()) {
    throw std::invalid_argument("empty subset");
  }
  Integer sum = 0;
  for (const SimpleFactor& f : subset) {
    const Integer h(f.h);
    sum += Integer(f.e) * (2 * h * h + albert_eta(f.albert) * h);
  }
  return sum;
}

Integer total_dimension(const VarietyProduct& v) {
  Integer g = 0;
  for (const SimpleFactor& f : v.factors) {
    g += Integer(f.n) * factor_dimension(f);
  }
  return g;
}

}  // namespace lefgamma
