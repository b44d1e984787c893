#include "lefgamma/stabilizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefgamma {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((__uint128_t{a} * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce(std::int64_t x, std::uint64_t p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r);
}

std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] % p == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const std::uint64_t inv = invmod(rows[rank][c] % p, p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::uint64_t factor = mulmod(rows[r][c] % p, inv, p);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        rows[r][j] = (rows[r][j] + p * p - mulmod(factor, rows[rank][j] % p, p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) {
        rows[r][j] -= factor * rows[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

// Rows of the Lie-algebra-plus-stabilizer system in the n^2 unknowns X[a][b].
// Row (i,j) of X^T*G + G*X = 0 and one row per (w, i) of X*w = 0.
std::vector<std::vector<std::int64_t>> oracle_system(
    const FormSpace& space, const std::vector<std::vector<std::int64_t>>& w_basis) {
  const unsigned n = space.n;
  const auto gram = space.gram();
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(static_cast<std::size_t>(n) * n + w_basis.size() * n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      std::vector<std::int64_t> row(static_cast<std::size_t>(n) * n, 0);
      for (unsigned a = 0; a < n; ++a) {
        row[static_cast<std::size_t>(a) * n + i] += gram[a][j];  // (X^T G)_{ij}
        row[static_cast<std::size_t>(a) * n + j] += gram[i][a];  // (G X)_{ij}
      }
      rows.push_back(std::move(row));
    }
  }
  for (const auto& w : w_basis) {
    for (unsigned i = 0; i < n; ++i) {
      std::vector<std::int64_t> row(static_cast<std::size_t>(n) * n, 0);
      for (unsigned j = 0; j < n; ++j) {
        row[static_cast<std::size_t>(i) * n + j] = w[j];
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

FormSpace::FormSpace(unsigned n, FormKind kind) : n(n), kind(kind) {
  if (n == 0 || n % 2 != 0) {
    throw std::invalid_argument("ambient dimension must be even and positive");
  }
}

std::vector<std::vector<int>> FormSpace::gram() const {
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  if (kind == FormKind::orthogonal) {
    for (unsigned i = 0; i < n; ++i) {
      g[i][n - 1 - i] = 1;
    }
  } else {
    const unsigned m = n / 2;
    for (unsigned i = 0; i < m; ++i) {
      g[i][m + i] = 1;
      g[m + i][i] = -1;
    }
  }
  return g;
}

std::uint64_t stabilizer_dim_formula(unsigned d, FormKind kind) {
  const std::uint64_t dd = d;
  return kind == FormKind::symplectic ? dd * (dd + 1) / 2 : dd * (dd - 1) / 2;
}

unsigned stabilizer_dim_oracle(const FormSpace& space,
                               const std::vector<std::vector<std::int64_t>>& w_basis,
                               const OracleField& field) {
  const unsigned n = space.n;
  for (const auto& w : w_basis) {
    if (w.size() != n) {
      throw std::invalid_argument("vector length does not match the ambient dimension");
    }
  }

  const auto system = oracle_system(space, w_basis);
  std::size_t w_rank = 0;
  std::size_t system_rank = 0;

  if (field.kind == OracleField::Kind::prime) {
    if (!is_prime_u64(field.p) || field.p <= n) {
      throw std::invalid_argument("oracle field needs a prime larger than n");
    }
    std::vector<std::vector<std::uint64_t>> wrows;
    for (const auto& w : w_basis) {
      std::vector<std::uint64_t> row(n);
      for (unsigned j = 0; j < n; ++j) row[j] = reduce(w[j], field.p);
      wrows.push_back(std::move(row));
    }
    w_rank = rank_mod_p(std::move(wrows), field.p);
    if (w_rank != w_basis.size()) {
      throw std::invalid_argument("basis expected");
    }
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(system.size());
    for (const auto& srow : system) {
      std::vector<std::uint64_t> row(srow.size());
      for (std::size_t j = 0; j < srow.size(); ++j) row[j] = reduce(srow[j], field.p);
      rows.push_back(std::move(row));
    }
    system_rank = rank_mod_p(std::move(rows), field.p);
  } else {
    std::vector<std::vector<Rational>> wrows;
    for (const auto& w : w_basis) {
      wrows.emplace_back(w.begin(), w.end());
    }
    w_rank = rank_rational(std::move(wrows));
    if (w_rank != w_basis.size()) {
      throw std::invalid_argument("basis expected");
    }
    std::vector<std::vector<Rational>> rows;
    rows.reserve(system.size());
    for (const auto& srow : system) {
      rows.emplace_back(srow.begin(), srow.end());
    }
    system_rank = rank_rational(std::move(rows));
  }

  return static_cast<unsigned>(static_cast<std::size_t>(n) * n - system_rank);
}

IndexExponents index_exponent(const FiltrationProfile& profile, unsigned h) {
  if (h == 0) {
    throw std::invalid_argument("relative dimension h must be positive");
  }
  if (profile.empty()) {
    throw std::invalid_argument("empty filtration");
  }
  Integer plain = 0;
  Integer augmented = 0;
  unsigned prev_exponent = 0;
  for (const FiltrationStep& step : profile.steps) {
    if (step.rank > 2 * h) {
      throw std::invalid_argument("rank exceeds 2h");
    }
    const Integer r(step.rank);
    const Integer codim = r * (Integer(4) * h - 1 - r) / 2;
    const Integer jump = Integer(step.exponent) - prev_exponent;
    plain += codim * jump;
    augmented += (codim + (step.non_isotropic ? 1 : 0)) * jump;
    prev_exponent = step.exponent;
  }
  return {Integer(profile.residue_degree) * plain, Integer(profile.residue_degree) * augmented};
}

PointCountResult point_count_index(unsigned ell, unsigned level,
                                   const FiltrationProfile& profile) {
  if (ell != 2 && ell != 3 && ell != 5) {
    throw std::invalid_argument("point counting supports ell in {2, 3, 5}");
  }
  if (level != 1 && level != 2) {
    throw std::invalid_argument("point counting supports level in {1, 2}");
  }
  if (profile.residue_degree != 1) {
    throw std::invalid_argument("point counting assumes residue degree 1");
  }
  for (const FiltrationStep& step : profile.steps) {
    if (step.rank > 2) {
      throw std::invalid_argument("point counting is restricted to the rank-2 module");
    }
    if (step.exponent > level) {
      throw std::invalid_argument("filtration exponent exceeds the enumeration level");
    }
  }

  std::uint64_t q = 1;
  for (unsigned i = 0; i < level; ++i) q *= ell;

  std::uint64_t group_order = 0;
  std::uint64_t stab_order = 0;
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      for (std::uint64_t c = 0; c < q; ++c) {
        for (std::uint64_t d = 0; d < q; ++d) {
          if ((a * d % q + q - b * c % q) % q != 1) continue;
          ++group_order;
          bool stabilizes = true;
          for (const FiltrationStep& step : profile.steps) {
            std::uint64_t mod = 1;
            for (unsigned i = 0; i < step.exponent; ++i) mod *= ell;
            // Columns of M - I over the leading basis vectors must vanish.
            if (step.rank >= 1 && ((a + q - 1) % mod != 0 || c % mod != 0)) {
              stabilizes = false;
              break;
            }
            if (step.rank >= 2 && (b % mod != 0 || (d + q - 1) % mod != 0)) {
              stabilizes = false;
              break;
            }
          }
          if (stabilizes) ++stab_order;
        }
      }
    }
  }

  unsigned predicted = 0;
  unsigned prev_exponent = 0;
  for (const FiltrationStep& step : profile.steps) {
    const unsigned codim =
        3 - static_cast<unsigned>(stabilizer_dim_formula(2 - step.rank, FormKind::symplectic));
    predicted += codim * (step.exponent - prev_exponent);
    prev_exponent = step.exponent;
  }
  std::uint64_t predicted_index = 1;
  for (unsigned i = 0; i < predicted; ++i) predicted_index *= ell;

  return {group_order, stab_order, group_order / stab_order, predicted, predicted_index};
}

}  // namespace lefgamma
