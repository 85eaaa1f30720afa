#include "permpack/formulas.hpp"

#include <sstream>
#include <stdexcept>

namespace permpack {

BinomComparison binom_inequality_check(long long k, long long l, long long m,
                                       long long n) {
  std::ostringstream violated;
  if (k < 0) violated << "need k >= 0, got k=" << k;
  else if (!(k < l)) violated << "need k < l, got k=" << k << ", l=" << l;
  else if (!(l <= m)) violated << "need l <= m, got l=" << l << ", m=" << m;
  else if (!(m <= n)) violated << "need m <= n, got m=" << m << ", n=" << n;
  const std::string msg = violated.str();
  if (!msg.empty()) throw std::invalid_argument("binom_inequality_check: " + msg);

  BinomComparison cmp;
  cmp.lhs = binomial(n, k) * binomial(m, l);
  cmp.rhs = binomial(n, l) * binomial(m, k);
  cmp.holds = cmp.lhs <= cmp.rhs;
  return cmp;
}

Count g_formula_alpha_alpha(int total_length, int alpha) {
  if (total_length < 0 || total_length % 2 != 0)
    throw std::invalid_argument(
        "g_formula_alpha_alpha: the closed form covers even lengths only");
  if (alpha == 1)
    throw std::invalid_argument(
        "g_formula_alpha_alpha: alpha = 1 (the pattern 12) is outside the "
        "closed form; its density is 1");
  if (alpha < 2)
    throw std::invalid_argument("g_formula_alpha_alpha: alpha must be >= 2");
  const Count half_choose = binomial(total_length / 2, alpha);
  return half_choose * half_choose;
}

TwoBetaMax g_formula_2beta(int n, int beta) {
  if (beta < 2) throw std::invalid_argument("g_formula_2beta: beta must be >= 2");
  if (n < 0) throw std::invalid_argument("g_formula_2beta: n must be >= 0");

  TwoBetaMax best{0, 0};
  Count antilayer_pairs = 0;          // C(x, 2)
  Count layer_choices = binomial(n, beta);  // C(n - x, beta)
  for (int x = 0; x <= n; ++x) {
    const Count value = antilayer_pairs * layer_choices;
    if (value > best.value) best = {value, x};
    // advance to x + 1
    antilayer_pairs += x;
    const int s = n - x;  // C(s-1, beta) = C(s, beta) * (s - beta) / s
    if (s > 0) {
      layer_choices *= s - beta;
      layer_choices /= s;
      if (layer_choices < 0) layer_choices = 0;
    } else {
      layer_choices = 0;
    }
  }
  return best;
}

namespace {

Count int_pow(long long base, int exp) {
  Count result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

}  // namespace

DensityReport density_alpha_alpha(int alpha, int converge_to, int float_digits) {
  if (alpha == 1)
    throw std::invalid_argument(
        "density_alpha_alpha: alpha = 1 is outside the closed form; the "
        "density of the pattern 12 is 1");
  if (alpha < 2)
    throw std::invalid_argument("density_alpha_alpha: alpha must be >= 2");

  DensityReport report;
  report.pattern = PatternSpec::alpha_alpha(alpha);
  report.num = binomial(2LL * alpha, alpha);
  report.den = int_pow(4, alpha);
  report.density = Rational(report.num, report.den);
  report.density_decimal = decimal_string(report.density, float_digits);
  report.xi = Rational(1, 2);  // the maximizer splits an even length evenly
  if (converge_to > 0) {
    report.convergence =
        galvin_ratios(report.pattern, converge_to, RatioMode::formula);
  }
  return report;
}

DensityReport density_2beta(int beta, int converge_to, int float_digits) {
  if (beta < 2) throw std::invalid_argument("density_2beta: beta must be >= 2");

  DensityReport report;
  report.pattern = PatternSpec::two_beta(beta);
  report.density = Rational(binomial(beta + 2, 2) * 4 * int_pow(beta, beta),
                            int_pow(beta + 2, beta + 2));
  report.density_decimal = decimal_string(report.density, float_digits);
  report.xi = Rational(2, beta + 2);
  if (converge_to > 0) {
    report.convergence =
        galvin_ratios(report.pattern, converge_to, RatioMode::formula);
  }
  return report;
}

}  // namespace permpack
