#include "permpack/counting.hpp"

#include <cstdint>
#include <vector>

namespace permpack {

namespace {

// Extends the partial embedding tau[0..j) -> chosen values; sums over all
// ways to place tau[j] at position >= pos. Acc is uint64 when the total
// cannot overflow (count <= C(n,m) <= C(64,32)), cpp_int otherwise.
template <class Acc>
class EmbeddingCounter {
 public:
  EmbeddingCounter(std::span<const int> tau, std::span<const int> sigma)
      : tau_(tau), sigma_(sigma) {
    chosen_.reserve(tau_.size());
  }

  Acc count() { return extend(0); }

 private:
  Acc extend(int pos) {
    const int j = static_cast<int>(chosen_.size());
    const int m = static_cast<int>(tau_.size());
    const int n = static_cast<int>(sigma_.size());
    if (j == m) return Acc(1);
    Acc total(0);
    const int last = n - (m - j);  // leave room for the remaining entries
    for (int p = pos; p <= last; ++p) {
      const int v = sigma_[static_cast<size_t>(p)];
      bool consistent = true;
      for (int i = 0; i < j; ++i) {
        if ((tau_[static_cast<size_t>(i)] < tau_[static_cast<size_t>(j)]) !=
            (chosen_[static_cast<size_t>(i)] < v)) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      chosen_.push_back(v);
      total += extend(p + 1);
      chosen_.pop_back();
    }
    return total;
  }

  std::span<const int> tau_;
  std::span<const int> sigma_;
  std::vector<int> chosen_;
};

}  // namespace

Count count_occurrences(std::span<const int> tau, std::span<const int> sigma) {
  if (tau.size() > sigma.size()) return 0;
  if (tau.empty()) return 1;
  if (sigma.size() <= 64) {
    // C(64,32) < 2^63, so the subset count fits.
    return Count(EmbeddingCounter<std::uint64_t>(tau, sigma).count());
  }
  return EmbeddingCounter<Count>(tau, sigma).count();
}

Count count_occurrences(const Permutation& tau, const Permutation& sigma) {
  return count_occurrences(std::span<const int>(tau.values()),
                           std::span<const int>(sigma.values()));
}

Count count_occurrences_layered(std::span<const int> tau_layers,
                                std::span<const int> sigma_layers) {
  const size_t p = tau_layers.size();
  const size_t k = sigma_layers.size();
  // f[j] = ways to embed the first j tau layers into the sigma layers seen so far
  std::vector<Count> f(p + 1);
  f[0] = 1;
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = std::min(p, i + 1); j >= 1; --j) {
      if (f[j - 1] == 0) continue;
      f[j] += f[j - 1] * binomial(sigma_layers[i], tau_layers[j - 1]);
    }
  }
  return f[p];
}

}  // namespace permpack
