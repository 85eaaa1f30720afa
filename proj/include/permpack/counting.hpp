#pragma once

#include <span>

#include "permpack/count.hpp"
#include "permpack/permutation.hpp"

namespace permpack {

/// Exact number of |tau|-subsets of positions of sigma whose induced
/// subsequence is order-isomorphic to tau. Works for any tau (layered or
/// not). Counts the empty pattern once; returns 0 when |tau| > |sigma|.
///
/// Counting runs by extending partial embeddings left to right, pruning a
/// branch as soon as the relative order breaks or too few positions remain.
Count count_occurrences(const Permutation& tau, const Permutation& sigma);

/// Same, on raw one-line values (assumed valid); the hot path for searches.
Count count_occurrences(std::span<const int> tau, std::span<const int> sigma);

/// Same count for layered tau inside layered sigma, both given by their
/// layer-size compositions. Dynamic program over
///   f(i,j) = f(i-1,j) + f(i-1,j-1) * C(sigma_i, tau_j),   f(0,0) = 1,
/// valid because each tau layer (singletons included) must sit inside a
/// single sigma layer and distinct tau layers occupy distinct sigma layers
/// in order.
Count count_occurrences_layered(std::span<const int> tau_layers,
                                std::span<const int> sigma_layers);

}  // namespace permpack
