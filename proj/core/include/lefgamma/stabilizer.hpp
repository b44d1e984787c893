#pragma once

#include "lefgamma/filtration.hpp"
#include "lefgamma/numeric.hpp"

#include <cstdint>
#include <vector>

namespace lefgamma {

enum class FormKind { symplectic, orthogonal };

/// An even-dimensional space carrying the standard hyperbolic form:
/// symplectic J = [[0, I], [-I, 0]], orthogonal split form with ones on the
/// antidiagonal. Both are invertible; the first n/2 basis vectors span a
/// maximal isotropic subspace.
struct FormSpace {
  unsigned n;
  FormKind kind;

  FormSpace(unsigned n, FormKind kind);
  std::vector<std::vector<int>> gram() const;
};

/// Dimension of the pointwise stabilizer of a codimension-d subspace inside
/// the isometry group: d(d+1)/2 symplectic, d(d-1)/2 orthogonal.
std::uint64_t stabilizer_dim_formula(unsigned d, FormKind kind);

struct OracleField {
  enum class Kind { prime, rational } kind = Kind::prime;
  std::uint64_t p = 10007;  // must be a prime > n; large enough to avoid
                            // small-characteristic rank drops
};

/// Independent check of the stabilizer dimension at the Lie-algebra level:
/// the dimension of {X : X^T*G + G*X = 0 and X*w = 0 for all w in W},
/// computed as the nullspace dimension of the explicit linear system.
/// W must be linearly independent ("basis expected" otherwise).
unsigned stabilizer_dim_oracle(const FormSpace& space,
                               const std::vector<std::vector<std::int64_t>>& w_basis,
                               const OracleField& field = {});

struct IndexExponents {
  Integer plain;            // f * sum d_i * (m_i - m_{i-1}), m_0 = 0
  Integer delta_augmented;  // f * sum (d_i + delta_i) * (m_i - m_{i-1})
};

/// Exponent of the stabilizer index predicted for a filtration inside the
/// rank-2h module, with codimensions d_i = r_i*(4h-1-r_i)/2. Throws when a
/// rank exceeds 2h or the profile is empty.
IndexExponents index_exponent(const FiltrationProfile& profile, unsigned h);

struct PointCountResult {
  std::uint64_t group_order;
  std::uint64_t stabilizer_order;
  std::uint64_t index;
  unsigned predicted_exponent;
  std::uint64_t predicted_index;  // ell^predicted_exponent
};

/// Exhaustive point count in the rank-2 symplectic isometry group over
/// Z/ell^level (the determinant-one 2x2 matrices): compares the exact index
/// of the filtration stabilizer with the predicted power of ell. Supported
/// grid: ell in {2,3,5}, level in {1,2}; profile ranks <= 2, exponents <=
/// level, residue degree 1. Submodules are spans of leading basis vectors.
PointCountResult point_count_index(unsigned ell, unsigned level,
                                   const FiltrationProfile& profile);

}  // namespace lefgamma
