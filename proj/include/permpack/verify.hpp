#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "permpack/enumerate.hpp"

namespace permpack {

struct VerifyReport {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
};

/// Receives one JSON record per checked case; `failure` marks counterexamples.
using RecordSink = std::function<void(const std::string& json_line, bool failure)>;

/// Binomial comparison C(n,k)C(m,l) <= C(n,l)C(m,k) over every chain
/// 0 <= k < l <= m <= n <= n_max.
VerifyReport verify_tech(int n_max, const RecordSink& sink);

/// Count monotonicity of one structural rewrite ("isolated", "push" or
/// "sort") over every composition of every n <= n_max (sort runs on the
/// normal forms, its domain), for each beta.
VerifyReport verify_rewrite_monotone(const std::string& lemma, int n_max,
                                     const std::vector<int>& betas,
                                     const RecordSink& sink);

/// Point-move bookkeeping over every sorted normal form with antilayer >= 2
/// and >= 1 layer, n <= n_max: the symbolic net must equal the recount
/// exactly, and be strictly positive whenever |A1| > |Lk| >= beta >= 3.
VerifyReport verify_move(int n_max, const std::vector<int>& betas,
                         const RecordSink& sink);

/// Merge bookkeeping over every sorted normal form with >= 2 layers and
/// |Lk| >= |A1|, n <= n_max: the symbolic difference must equal the recount
/// exactly and be nonnegative.
VerifyReport verify_merge(int n_max, const std::vector<int>& betas,
                          const RecordSink& sink);

/// Layered-restriction exactness: for every layered pattern of length
/// m <= m_max and every m <= n <= n_max, the layered maximum equals the
/// unrestricted maximum.
VerifyReport verify_restriction(int n_max, int m_max, const SearchLimits& limits,
                                const RecordSink& sink);

/// Galvin monotonicity: formula-mode ratio table for tau(2,beta) up to
/// n_formula, and exhaustive-mode tables for tau(2,beta) and 1243 up to
/// n_exhaustive.
VerifyReport verify_galvin(int beta, int n_formula, int n_exhaustive,
                           const SearchLimits& limits, const RecordSink& sink);

/// Sorted leading-antilayer normal forms (1^a, L1 <= ... <= Lk), all layers
/// >= 2, visited in a deterministic order. Exposed for the sweeps and tests.
void for_each_sorted_normal_form(
    int n, int min_antilayer, int min_layer_count,
    const std::function<void(int antilayer, const std::vector<int>& layers)>& fn);

}  // namespace permpack
