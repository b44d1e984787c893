#include "lefgamma/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lefgamma {

PsiInput::PsiInput(unsigned h_, std::vector<unsigned> degrees, std::vector<unsigned> rs,
                   bool delta_)
    : h(h_), residue_degrees(std::move(degrees)), ranks(std::move(rs)), delta(delta_) {
  if (h == 0) {
    throw std::invalid_argument("relative dimension h must be positive");
  }
  if (residue_degrees.empty() || residue_degrees.size() != ranks.size()) {
    throw std::invalid_argument("residue degrees and ranks must have equal nonzero length");
  }
  for (unsigned f : residue_degrees) {
    if (f == 0) {
      throw std::invalid_argument("residue degrees must be positive");
    }
  }
  for (unsigned r : ranks) {
    if (r > 2 * h) {
      throw std::invalid_argument("rank exceeds 2h");
    }
    if (!delta && r > h) {
      throw std::invalid_argument("delta = 0 requires every rank <= h");
    }
  }
}

Rational psi(const PsiInput& input) {
  Integer num = 0;
  Integer den = input.delta ? 1 : 0;
  for (std::size_t i = 0; i < input.ranks.size(); ++i) {
    const Integer f(input.residue_degrees[i]);
    const Integer r(input.ranks[i]);
    num += f * r;
    den += f * r * (Integer(4) * input.h - 1 - r) / 2;
  }
  if (den == 0) {
    throw std::invalid_argument("trivial subgroup");
  }
  return make_fraction(2 * num, den);
}

Rational psi_max(unsigned h, std::span<const unsigned> residue_degrees, PsiRegime regime) {
  if (h == 0) {
    throw std::invalid_argument("relative dimension h must be positive");
  }
  if (regime == PsiRegime::isotropic) {
    return make_fraction(4, Integer(3) * h - 1);
  }
  const Integer e = std::accumulate(residue_degrees.begin(), residue_degrees.end(), Integer(0),
                                    [](Integer acc, unsigned f) { return acc + f; });
  if (e == 0) {
    throw std::invalid_argument("residue degrees must sum to a positive e");
  }
  const Integer hh(h);
  return make_fraction(4 * e * hh, 1 + e * (2 * hh * hh - hh));
}

PrefixMaxResult prefix_max(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.empty() || a.size() != b.size()) {
    throw std::invalid_argument("sequences must have equal nonzero length");
  }
  Rational sum_a = 0;
  Rational sum_b = 0;
  PrefixMaxResult best{0, 0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum_a += a[i];
    sum_b += b[i];
    if (sum_b <= 0) {
      throw std::invalid_argument("prefix sums of the denominator sequence must be positive");
    }
    const Rational value = sum_a / sum_b;
    if (best.k == 0 || value > best.value) {
      best = {value, i + 1};
    }
  }
  return best;
}

Integer torsion_card_exponent(const FiltrationProfile& profile, unsigned d_albert) {
  if (d_albert == 0) {
    throw std::invalid_argument("d must be positive");
  }
  Integer sum = 0;
  for (std::size_t i = 0; i < profile.steps.size(); ++i) {
    const unsigned next_rank = i + 1 < profile.steps.size() ? profile.steps[i + 1].rank : 0;
    const unsigned jump = profile.steps[i].rank - next_rank;  // multiplicity of this level
    sum += Integer(jump) * profile.steps[i].exponent;
  }
  return Integer(d_albert) * profile.residue_degree * sum;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>((__uint128_t{a} * b) % n);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  std::uint64_t result = 1;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, n);
    base = mulmod_u64(base, base, n);
    exp >>= 1;
  }
  return result;
}

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto step = [&](std::uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      const std::uint64_t diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

unsigned omega_u64(std::uint64_t m) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= m && p < 10000; ++p) {
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  factor_into(m, primes);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return static_cast<unsigned>(primes.size());
}

}  // namespace

DegreeLowerBound degree_lower_bound(std::uint64_t m, unsigned h) {
  if (m == 0) {
    throw std::invalid_argument("order m must be positive");
  }
  if (h == 0) {
    throw std::invalid_argument("relative dimension h must be positive");
  }
  return {omega_u64(m), ipow(Integer(m), 2ULL * h)};
}

OmegaRatioResult omega_asymptotic_check(std::uint64_t bound) {
  if (bound < 3) {
    throw std::invalid_argument("bound must be at least 3");
  }
  constexpr std::uint64_t kSieveCap = 100'000'000;
  if (bound > kSieveCap) {
    throw std::invalid_argument("bound exceeds the sieve cap");
  }
  // Sieve of distinct-prime-divisor counts. Ratios are computed in double
  // precision (about 1e-15 relative error, far below the gaps between the
  // values that compete for the record).
  std::vector<std::uint8_t> omega_of(bound + 1, 0);
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (omega_of[p] == 0) {
      for (std::uint64_t q = p; q <= bound; q += p) {
        ++omega_of[q];
      }
    }
  }
  OmegaRatioResult best{-1.0, 0};
  for (std::uint64_t m = 3; m <= bound; ++m) {
    const double ratio = omega_of[m] * std::log(std::log(double(m))) / std::log(double(m));
    if (ratio > best.max_ratio) {
      best = {ratio, m};
    }
  }
  return best;
}

}  // namespace lefgamma
