#include "lefgamma/numeric.hpp"

#include <bit>
#include <stdexcept>

namespace lefgamma {

Rational make_fraction(Integer num, Integer den) {
  if (den == 0) {
    throw std::invalid_argument("zero denominator");
  }
  return Rational(std::move(num), std::move(den));
}

Integer binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  Integer result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= Integer(n - k + i);
    result /= Integer(i);  // exact at every step
  }
  return result;
}

Integer ipow(const Integer& base, std::uint64_t exp) {
  Integer result = 1;
  Integer b = base;
  while (exp > 0) {
    if (exp & 1) {
      result *= b;
    }
    exp >>= 1;
    if (exp > 0) {
      b *= b;
    }
  }
  return result;
}

Integer kth_root_floor(const Integer& x, std::uint64_t k) {
  if (x < 0) {
    throw std::invalid_argument("negative radicand");
  }
  if (k == 0) {
    throw std::invalid_argument("zeroth root");
  }
  if (x == 0 || x == 1 || k == 1) {
    return x;
  }
  // Binary search over [1, 2^(ceil(bits/k))].
  const std::uint64_t bits = msb(x) + 1;
  Integer lo = 1;
  Integer hi = Integer(1) << (bits / k + 1);
  while (lo < hi) {
    Integer mid = (lo + hi + 1) / 2;
    if (ipow(mid, k) <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::optional<Integer> exact_kth_root(const Integer& x, std::uint64_t k) {
  Integer r = kth_root_floor(x, k);
  if (ipow(r, k) == x) {
    return r;
  }
  return std::nullopt;
}

unsigned v2(const Integer& x) {
  if (x <= 0) {
    throw std::invalid_argument("v2 requires a positive argument");
  }
  return static_cast<unsigned>(lsb(x));
}

unsigned binary_digit_sum(std::uint64_t n) {
  return static_cast<unsigned>(std::popcount(n));
}

}  // namespace lefgamma
