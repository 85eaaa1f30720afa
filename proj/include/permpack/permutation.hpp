#pragma once

#include <compare>
#include <string>
#include <vector>

namespace permpack {

/// A permutation in one-line notation: a bijection on {1..n}, n >= 0.
/// Value semantics; ordering is lexicographic on the one-line values.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `one_line` is a bijection on {1..n}; throws
  /// std::invalid_argument listing repeated and missing values otherwise.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// Value at 0-based position i.
  int operator[](int i) const { return values_[static_cast<size_t>(i)]; }
  const std::vector<int>& values() const { return values_; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation& other) const {
    return values_ <=> other.values_;
  }

  /// One-line text form, e.g. "3 2 1 5 4 9 8 7 6".
  std::string to_string() const;

 private:
  std::vector<int> values_;
};

/// Parse a permutation from text. Accepts whitespace-separated integers
/// ("3 2 1 5 4") and, as a convenience for short patterns, a compact digit
/// string ("1243", n <= 9). Throws std::invalid_argument on malformed input
/// or when the values are not a bijection on {1..n}.
Permutation parse_permutation(const std::string& text);

}  // namespace permpack
