#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_int/cpp_int_config.hpp>

namespace permpack {

/// Exact integer of unbounded magnitude. All occurrence counts and
/// binomial products use this type; there is no rounding and no overflow.
using Count = boost::multiprecision::cpp_int;

/// Exact rational, used for Galvin ratios and packing densities.
using Rational = boost::multiprecision::cpp_rational;

/// C(n, k), exact. Zero when k < 0, n < 0 or k > n.
Count binomial(long long n, long long k);

/// Render a rational as a decimal string with `digits` places after the
/// point (round half away from zero). Rendering only; comparisons stay exact.
std::string decimal_string(const Rational& value, int digits = 12);

}  // namespace permpack
