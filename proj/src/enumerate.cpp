#include "permpack/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace permpack {

CompositionRange::CompositionRange(int n) : n_(n) {
  if (n < 0 || n > 63)
    throw std::invalid_argument("composition enumeration supports 0 <= n <= 63");
  size_ = n == 0 ? 1 : (std::uint64_t{1} << (n - 1));
}

std::vector<int> CompositionRange::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("composition index out of range");
  // Bit i of the index (most significant of n-1 first) marks a break after
  // position i+1; index 0 is (n), index 2^(n-1)-1 is (1,...,1).
  std::vector<int> parts;
  if (n_ == 0) return parts;
  int run = 1;
  for (int i = 1; i < n_; ++i) {
    const int bit = n_ - 1 - i;
    if ((index >> bit) & 1u) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
  return parts;
}

void CompositionRange::for_each(
    std::uint64_t lo, std::uint64_t hi,
    const std::function<void(const std::vector<int>&)>& fn) const {
  hi = std::min(hi, size_);
  for (std::uint64_t idx = lo; idx < hi; ++idx) fn(at(idx));
}

namespace {

constexpr int kMaxFactorialN = 20;  // 20! < 2^63

std::uint64_t factorial64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

PermutationRange::PermutationRange(int n) : n_(n) {
  if (n < 0 || n > kMaxFactorialN)
    throw std::invalid_argument("permutation ranking supports 0 <= n <= 20");
  size_ = factorial64(n);
}

Permutation PermutationRange::at(std::uint64_t rank) const {
  if (rank >= size_) throw std::out_of_range("permutation rank out of range");
  std::vector<int> pool(static_cast<size_t>(n_));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> values;
  values.reserve(pool.size());
  std::uint64_t radix = size_;
  for (int i = n_; i >= 1; --i) {
    radix /= static_cast<std::uint64_t>(i);
    const auto digit = static_cast<size_t>(rank / radix);
    rank %= radix;
    values.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(values));
}

void PermutationRange::for_each(
    std::uint64_t lo, std::uint64_t hi,
    const std::function<void(const Permutation&)>& fn) const {
  hi = std::min(hi, size_);
  if (lo >= hi) return;
  std::vector<int> values = at(lo).values();
  for (std::uint64_t rank = lo; rank < hi; ++rank) {
    fn(Permutation(std::vector<int>(values)));
    std::next_permutation(values.begin(), values.end());
  }
}

void enumerate_layered(int n, const std::function<void(const BlockStructure&)>& fn,
                       const SearchLimits& limits) {
  if (n < 0) throw std::invalid_argument("enumerate_layered: n must be >= 0");
  if (n > limits.max_composition_n) {
    std::ostringstream msg;
    msg << "refusing to enumerate 2^" << (n - 1) << " layered structures of size "
        << n << " (bound " << limits.max_composition_n
        << "; raise max_composition_n knowingly to proceed)";
    throw std::domain_error(msg.str());
  }
  const CompositionRange range(n);
  range.for_each(0, range.size(), [&fn](const std::vector<int>& parts) {
    fn(BlockStructure::from_composition(parts));
  });
}

void enumerate_all(int n, const std::function<void(const Permutation&)>& fn,
                   const SearchLimits& limits) {
  if (n < 0) throw std::invalid_argument("enumerate_all: n must be >= 0");
  if (n > limits.max_exhaustive_n) {
    std::ostringstream msg;
    msg << "refusing to enumerate " << n << "! permutations (bound "
        << limits.max_exhaustive_n
        << "; use the layered restriction or raise max_exhaustive_n knowingly)";
    throw std::domain_error(msg.str());
  }
  const PermutationRange range(n);
  range.for_each(0, range.size(), fn);
}

}  // namespace permpack
