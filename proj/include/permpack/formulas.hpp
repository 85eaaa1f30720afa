#pragma once

#include <optional>
#include <string>

#include "permpack/count.hpp"
#include "permpack/pattern.hpp"
#include "permpack/search.hpp"

namespace permpack {

/// Both sides of the binomial comparison C(n,k)*C(m,l) <= C(n,l)*C(m,k).
struct BinomComparison {
  bool holds;
  Count lhs;  // C(n,k) * C(m,l)
  Count rhs;  // C(n,l) * C(m,k)
};

/// Checks the comparison above under the chain k < l <= m <= n (bigger sets
/// choose the bigger subsets). Throws std::invalid_argument naming the
/// violated link when the chain does not hold.
BinomComparison binom_inequality_check(long long k, long long l, long long m,
                                       long long n);

/// Maximal number of tau(alpha,alpha) occurrences in a permutation of even
/// size 2n: C(n, alpha)^2, attained by n ascending points followed by a
/// descending block of n. Odd lengths and alpha = 1 are rejected: the
/// closed form covers neither.
Count g_formula_alpha_alpha(int total_length, int alpha);

struct TwoBetaMax {
  Count value;
  int split;  // smallest antilayer size attaining the maximum
};

/// Maximal number of tau(2,beta) occurrences in a permutation of size n:
/// max over x in [0..n] of C(x,2)*C(n-x,beta), scanning every split with
/// incremental binomial updates. Zero (with split 0) when n < beta + 2.
TwoBetaMax g_formula_2beta(int n, int beta);

/// Exact packing density plus the optimal antilayer fraction and an
/// optional formula-mode convergence table. `num`/`den` keep the closed
/// form as written (e.g. 1080/3125), `density` is the same value reduced.
struct DensityReport {
  PatternSpec pattern;
  Count num;
  Count den;
  Rational density;
  std::string density_decimal;  // rendering only
  std::optional<Rational> xi;
  std::optional<RatioTable> convergence;
};

/// rho(tau(alpha,alpha)) = C(2*alpha, alpha) / 4^alpha, alpha >= 2.
/// The maximizer splits evenly, so xi = 1/2.
DensityReport density_alpha_alpha(int alpha, int converge_to = 0,
                                  int float_digits = 12);

/// rho(tau(2,beta)) = C(beta+2,2) * (2/(beta+2))^2 * (beta/(beta+2))^beta,
/// with xi = 2/(beta+2), beta >= 2.
DensityReport density_2beta(int beta, int converge_to = 0, int float_digits = 12);

}  // namespace permpack
