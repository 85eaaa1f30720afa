#pragma once

#include <string>
#include <vector>

#include "permpack/blocks.hpp"
#include "permpack/count.hpp"
#include "permpack/enumerate.hpp"
#include "permpack/pattern.hpp"
#include "permpack/permutation.hpp"

namespace permpack {

enum class Restriction { all, layered, antilayer_then_layers };

std::string to_string(Restriction r);

/// Outcome of a maximization run. Witnesses are the lexicographically least
/// maximizers, capped at `witness_cap`; each is re-verified against
/// count_occurrences on construction. `num_maximal` counts every candidate
/// that attained the maximum, so truncation is visible.
struct SearchResult {
  PatternSpec pattern;
  int n = 0;
  Restriction restriction = Restriction::all;
  int k = 0;  // layer count, for the antilayer_then_layers restriction
  Count max_count;
  std::vector<Permutation> witnesses;
  std::vector<BlockStructure> witness_blocks;  // layered searches only
  Count space_size;
  Count num_maximal;
  int witness_cap = 10;
  // g_k only: every witness begins with an antilayer of size >= 2 and ends
  // with a layer of size >= beta.
  bool lemma_sizes_satisfied = false;
};

/// Exact maximum of count_occurrences over all n! permutations.
/// Refuses n > limits.max_exhaustive_n.
SearchResult max_over_all(const PatternSpec& tau, int n,
                          const SearchLimits& limits = {});

/// Exact maximum over the layered permutations of size n (all 2^(n-1)
/// layer compositions), counted with the layered dynamic program. Requires
/// layered tau; refuses n > limits.max_composition_n.
SearchResult max_over_layered(const PatternSpec& tau, int n,
                              const SearchLimits& limits = {});

/// Exact maximum of tau(2,beta) occurrences over structures consisting of a
/// leading antilayer (size >= 0) followed by exactly k layers of size >= 2
/// whose last layer is at least the antilayer. Infeasible constraints give
/// max 0 with no witnesses.
SearchResult g_k_max(const PatternSpec& tau, int n, int k,
                     const SearchLimits& limits = {});

enum class RatioMode { exhaustive, layered, formula };

std::string to_string(RatioMode m);
RatioMode ratio_mode_from_string(const std::string& name);

struct RatioRow {
  int n;
  Count g;
  Count binom;
  Rational ratio;
};

/// Adjacent pair of table rows where the ratio increased (a Galvin
/// monotonicity violation).
struct RatioFailure {
  int n_prev;
  int n;
  Rational prev;
  Rational cur;
};

struct RatioTable {
  PatternSpec pattern;
  RatioMode mode = RatioMode::formula;
  std::vector<RatioRow> rows;
  std::vector<RatioFailure> failures;
};

/// Galvin ratio table g(tau,n)/C(n,m) for n = m..n_max. Formula mode is
/// available for the tau(2,beta) shape (every n) and for tau(alpha,alpha)
/// (even n only, where the closed form applies). Any adjacent increase is
/// recorded as a failure.
RatioTable galvin_ratios(const PatternSpec& tau, int n_max, RatioMode mode,
                         const SearchLimits& limits = {});

}  // namespace permpack
