#include "permpack/count.hpp"

#include <sstream>
#include <stdexcept>

namespace permpack {

Count binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) after this step
  }
  return result;
}

std::string decimal_string(const Rational& value, int digits) {
  if (digits < 0) throw std::invalid_argument("decimal_string: digits must be >= 0");
  Count num = boost::multiprecision::numerator(value);
  Count den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;

  Count scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero
  Count scaled = (num * scale * 2 + den) / (den * 2);
  Count whole = scaled / scale;
  Count frac = scaled % scale;

  std::ostringstream out;
  if (negative && (whole != 0 || frac != 0)) out << '-';
  out << whole;
  if (digits > 0) {
    std::string f = frac.str();
    out << '.' << std::string(static_cast<size_t>(digits) - f.size(), '0') << f;
  }
  return out.str();
}

}  // namespace permpack
