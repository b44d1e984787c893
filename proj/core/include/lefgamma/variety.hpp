#pragma once

#include "lefgamma/numeric.hpp"

#include <span>
#include <string>
#include <vector>

namespace lefgamma {

/// Albert classification of the endomorphism algebra of a simple abelian
/// variety. Type IV (CM) is out of scope and rejected at parse time.
enum class AlbertType { I, II, III };

/// d = 1 for type I, d = 2 for types II and III.
int albert_d(AlbertType type);

/// eta = +1 for types I and II, -1 for type III.
int albert_eta(AlbertType type);

std::string albert_name(AlbertType type);

/// One simple factor: Albert type, degree e of the center of the
/// endomorphism algebra, relative dimension h, and multiplicity n in the
/// product. Immutable value type; construction validates e, h, n >= 1.
struct SimpleFactor {
  AlbertType albert;
  unsigned e;
  unsigned h;
  unsigned n;

  SimpleFactor(AlbertType albert, unsigned e, unsigned h, unsigned n = 1);
};

/// A product of pairwise non-isogenous simple factors. Non-isogeny is a
/// modeling assumption: identical (albert, e, h) entries are allowed as
/// distinct factors since isogeny is not decidable from these invariants.
struct VarietyProduct {
  std::vector<SimpleFactor> factors;

  explicit VarietyProduct(std::vector<SimpleFactor> factors);
};

/// Dimension of one copy of the factor: d * e * h.
Integer factor_dimension(const SimpleFactor& f);

/// Dimension of the Hodge group of the product over the given factors:
/// sum of e*(2h^2 + eta*h). Multiplicities do not enter (the Hodge group of
/// A^n equals that of A). Throws on an empty subset.
Integer hodge_dimension(std::span<const SimpleFactor> subset);

/// Total dimension g = sum of n*d*e*h over all factors.
Integer total_dimension(const VarietyProduct& v);

}  // namespace lefgamma
