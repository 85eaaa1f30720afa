#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "permpack/blocks.hpp"
#include "permpack/count.hpp"
#include "permpack/permutation.hpp"

namespace permpack {

/// Enumeration budgets and search knobs. Bounds are configuration, not
/// hard-coded: callers may raise them knowingly.
struct SearchLimits {
  int max_exhaustive_n = 11;   // refuse S_n enumeration beyond this
  int max_composition_n = 24;  // refuse composition enumeration beyond this
  int witness_cap = 10;        // lexicographically least witnesses kept
  unsigned workers = 0;        // 0 = machine parallelism (capped)
};

/// All compositions of n (layer-size tuples of layered permutations) in
/// descending lexicographic order: n=3 gives (3),(2,1),(1,2),(1,1,1).
/// Indexable, so enumeration can be split into deterministic chunks.
class CompositionRange {
 public:
  /// n in [0, 63]; the index space is 2^(n-1) (one composition for n = 0).
  explicit CompositionRange(int n);

  int n() const { return n_; }
  std::uint64_t size() const { return size_; }

  std::vector<int> at(std::uint64_t index) const;

  /// Visit indices [lo, hi) in order, reusing one parts buffer.
  void for_each(std::uint64_t lo, std::uint64_t hi,
                const std::function<void(const std::vector<int>&)>& fn) const;

 private:
  int n_;
  std::uint64_t size_;
};

/// All n! permutations of {1..n} in lexicographic order, indexable by rank
/// for deterministic chunking. Requires n <= 20 so that n! fits in 64 bits.
class PermutationRange {
 public:
  explicit PermutationRange(int n);

  int n() const { return n_; }
  std::uint64_t size() const { return size_; }

  /// Lexicographic unranking via the factorial number system.
  Permutation at(std::uint64_t rank) const;

  /// Visit ranks [lo, hi) in order (unrank once, then step).
  void for_each(std::uint64_t lo, std::uint64_t hi,
                const std::function<void(const Permutation&)>& fn) const;

 private:
  int n_;
  std::uint64_t size_;
};

/// Stream every layered block structure of size n exactly once, in the
/// CompositionRange order. Total count 2^(n-1); n = 0 yields the empty
/// structure only. Refuses n > limits.max_composition_n.
void enumerate_layered(int n, const std::function<void(const BlockStructure&)>& fn,
                       const SearchLimits& limits = {});

/// Stream all n! permutations in lexicographic order. Refuses
/// n > limits.max_exhaustive_n with guidance to use the layered search.
void enumerate_all(int n, const std::function<void(const Permutation&)>& fn,
                   const SearchLimits& limits = {});

}  // namespace permpack
