#pragma once

#include "lefgamma/numeric.hpp"

#include <string>
#include <vector>

namespace lefgamma {

enum class RootSystem { A, B, C, D };

std::string root_system_name(RootSystem rs);

/// Which minuscule weight of the root system is meant.
///   fundamental: omega_r of type A (r carried alongside)
///   vector:      omega_1 of types C and D (the standard representation)
///   spin:        omega_l of type B; omega_{l-1} / omega_l of type D
enum class WeightKind { fundamental, vector, spin };

struct Weight {
  WeightKind kind;
  unsigned r = 0;  // only meaningful for WeightKind::fundamental
};

/// One row of the minuscule table: dimension of the representation and its
/// duality (+1 orthogonal, -1 symplectic, 0 not self-dual).
struct MinusculeEntry {
  RootSystem type;
  unsigned rank;
  Weight weight;
  Integer dimension;
  int duality;
};

/// Table row for the given parameters. Domains: A needs rank >= 1 and
/// 1 <= r <= rank; B and C need rank >= 2; D needs rank >= 3. Out-of-domain
/// parameters or a weight the type does not carry raise invalid_argument.
///
///   A_l / omega_r:          dim binom(l+1, r),  duality (-1)^r if r == (l+1)/2, else 0
///   B_l / omega_l (spin):   dim 2^l,            +1 if l == 0,3 mod 4, -1 if l == 1,2 mod 4
///   C_l / omega_1:          dim 2l,             -1
///   D_l / omega_1:          dim 2l,             +1
///   D_l / spin:             dim 2^(l-1),        +1 if l == 0 mod 4, -1 if l == 2 mod 4, 0 if l odd
MinusculeEntry table_lookup(RootSystem type, unsigned rank, Weight weight);

/// A tensor power of s copies of one table entry. All factors share the same
/// type, rank and weight.
struct TensorDecomposition {
  MinusculeEntry entry;
  unsigned s;
  Integer total_dimension;  // dimension^s
};

TensorDecomposition make_decomposition(MinusculeEntry entry, unsigned s);

/// Whether the tensor power carries an orthogonal form: true iff the factor
/// is orthogonal (any s >= 1), or symplectic with s even. Non-self-dual
/// factors (duality 0) never qualify.
bool orthogonal_admissible(const TensorDecomposition& decomp);

/// All dimensions n <= bound admitting an orthogonal-admissible tensor
/// decomposition other than the standard one (type D, weight omega_1), i.e.
/// the dimensions for which the identification with the standard orthogonal
/// group can fail. Sorted, deduplicated. Halved elementwise this set equals
/// the sigma_prime closed families (cross-checked by the verification
/// harness and the acceptance suite).
std::vector<Integer> exclusion_dimensions(const Integer& bound);

/// Same set, each dimension paired with one witnessing decomposition (the
/// first in scan order: A, B, C, D-spin by increasing rank, then s).
std::vector<std::pair<Integer, TensorDecomposition>> exclusion_dimensions_witnessed(
    const Integer& bound);

}  // namespace lefgamma
