#include "oracles.hpp"

#include <numeric>
#include <stdexcept>

namespace oracles {

namespace {

std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

// base^exp, saturating at cap+1 so comparisons against cap stay valid
std::uint64_t pow_capped(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  if (base == 0) return exp == 0 ? 1 : 0;
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (result > cap / base) return cap + 1;
    result *= base;
  }
  return result;
}

bool better(const Fraction& x, const Fraction& y) {
  return static_cast<__uint128_t>(x.num) * y.den > static_cast<__uint128_t>(y.num) * x.den;
}

}  // namespace

Fraction reduced(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  const std::uint64_t g = std::gcd(num == 0 ? den : num, den);
  return {num / g, den / g};
}

Fraction brute_gamma(const std::vector<lefgamma::SimpleFactor>& factors) {
  const std::size_t d = factors.size();
  Fraction best{0, 1};
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << d); ++mask) {
    std::uint64_t num = 0, den = 1;
    for (std::size_t i = 0; i < d; ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      const lefgamma::SimpleFactor& f = factors[i];
      const std::uint64_t dd = f.albert == lefgamma::AlbertType::I ? 1 : 2;
      const std::uint64_t h = f.h;
      num += f.n * dd * f.e * h;
      if (f.albert == lefgamma::AlbertType::III) {
        den += f.e * (2 * h * h - h);
      } else {
        den += f.e * (2 * h * h + h);
      }
    }
    const Fraction candidate = reduced(2 * num, den);
    if (better(candidate, best)) best = candidate;
  }
  return best;
}

bool naive_sigma(std::uint64_t g) {
  for (std::uint64_t k = 3; k < 64 && (std::uint64_t{1} << (k - 1)) <= g; ++k) {
    const std::uint64_t pw = std::uint64_t{1} << (k - 1);
    for (std::uint64_t a = 1;; ++a) {
      const std::uint64_t ak = pow_capped(a, k, g / pw);
      if (static_cast<__uint128_t>(pw) * ak > g) break;
      if (pw * ak == g) return true;
    }
  }
  for (std::uint64_t k = 3; k <= 33; ++k) {
    const std::uint64_t c = binom_u64(2 * k, k);
    if (c > 2 * g) break;
    if (c == 2 * g) return true;
  }
  return false;
}

bool naive_sigma_prime(std::uint64_t h) {
  // F1..F3: plain scans of the exponent formulas
  for (std::uint64_t s = 1; s <= 21; ++s) {
    for (std::uint64_t k = 0; k <= 16; ++k) {
      const std::uint64_t e1 = (4 * k + 3) * s;
      if (e1 <= 63 && (std::uint64_t{1} << (e1 - 1)) == h) return true;
      if (k >= 1) {
        const std::uint64_t e2 = 4 * k * s;
        if (e2 <= 63 && (std::uint64_t{1} << (e2 - 1)) == h) return true;
        const std::uint64_t e3 = 2 * s * (4 * k + 1);
        if (e3 <= 63 && (std::uint64_t{1} << (e3 - 1)) == h) return true;
      }
    }
  }
  // F4 = 2^(2s-1) * k^(2s)
  for (std::uint64_t s = 1; 2 * s - 1 <= 62; ++s) {
    const std::uint64_t p2 = std::uint64_t{1} << (2 * s - 1);
    if (p2 > h) break;
    for (std::uint64_t k = 2;; ++k) {
      const std::uint64_t kp = pow_capped(k, 2 * s, h / p2);
      if (static_cast<__uint128_t>(p2) * kp > h) break;
      if (p2 * kp == h) return true;
    }
  }
  // F5 and F6: powers of central binomials, halved (valid for h <= ~1e12)
  for (std::uint64_t k = 0; k <= 10; ++k) {
    const std::uint64_t c5 = binom_u64(4 * k + 4, 2 * k + 2);
    if (c5 <= 2 * h) {
      for (std::uint64_t s = 1;; ++s) {
        const std::uint64_t v = pow_capped(c5, s, 2 * h);
        if (v > 2 * h) break;
        if (v == 2 * h) return true;
      }
    }
    const std::uint64_t c6 = binom_u64(4 * k + 2, 2 * k + 1);
    if (static_cast<__uint128_t>(c6) * c6 <= 2 * h) {
      for (std::uint64_t s = 1;; ++s) {
        const std::uint64_t v = pow_capped(c6, 2 * s, 2 * h);
        if (v > 2 * h) break;
        if (v == 2 * h) return true;
      }
    }
    if (c5 > 2 * h && static_cast<__uint128_t>(c6) * c6 > 2 * h) break;
  }
  return false;
}

bool naive_odd_exclusion(std::uint64_t h) {
  for (std::uint64_t m = 0; m <= 5; ++m) {
    const lefgamma::Integer c =
        lefgamma::binomial(std::uint64_t{1} << (m + 2), std::uint64_t{1} << (m + 1)) / 2;
    if (c == h) return true;
    if (c > h) return false;
  }
  return false;
}

unsigned count_twos(lefgamma::Integer x) {
  unsigned count = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++count;
  }
  return count;
}

Fraction naive_psi_max_single_place(unsigned h, unsigned e, bool full_regime) {
  const unsigned cap = full_regime ? 2 * h : h;
  Fraction best{0, 1};
  for (unsigned r = 1; r <= cap; ++r) {
    const std::uint64_t num = 2ULL * e * r;
    const std::uint64_t den =
        (full_regime ? 1 : 0) + std::uint64_t{e} * r * (4ULL * h - 1 - r) / 2;
    const Fraction candidate = reduced(num, den);
    if (better(candidate, best)) best = candidate;
  }
  return best;
}

}  // namespace oracles
