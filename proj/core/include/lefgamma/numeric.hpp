#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>

namespace lefgamma {

/// Exact arbitrary-precision integers and reduced fractions. All invariants
/// computed by this library are rational numbers, so no floating point is
/// used anywhere except the quarantined asymptotic ratio check in bounds.hpp.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Reduced fraction num/den. Throws std::invalid_argument on den == 0.
Rational make_fraction(Integer num, Integer den);

/// Binomial coefficient C(n, k), exact.
Integer binomial(std::uint64_t n, std::uint64_t k);

/// base^exp, exact. ipow(0, 0) == 1.
Integer ipow(const Integer& base, std::uint64_t exp);

/// Largest r with r^k <= x. Requires x >= 0 and k >= 1.
Integer kth_root_floor(const Integer& x, std::uint64_t k);

/// The exact k-th root of x if x is a perfect k-th power, otherwise empty.
/// Verified by re-exponentiation, so no rounding can misclassify.
std::optional<Integer> exact_kth_root(const Integer& x, std::uint64_t k);

/// 2-adic valuation of x. Requires x > 0.
unsigned v2(const Integer& x);

/// Binary digit sum of n.
unsigned binary_digit_sum(std::uint64_t n);

}  // namespace lefgamma
