#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permpack/permutation.hpp"

namespace permpack {

enum class BlockKind { layer, antilayer };

/// One block of a layered permutation: a layer (decreasing run of
/// consecutive integers) or an antilayer (increasing run, i.e. a run of
/// singleton layers).
struct Block {
  BlockKind kind;
  int size;

  bool operator==(const Block&) const = default;
  auto operator<=>(const Block&) const = default;
};

/// Annotated composition describing a layered permutation as an ordered
/// list of blocks. Canonical form: antilayers have size >= 2, never touch
/// another antilayer or a singleton layer, and every maximal run of >= 2
/// singleton layers is written as one antilayer (a lone singleton stays a
/// layer of size 1). Non-canonical structures are accepted wherever noted;
/// `canonical()` normalizes.
class BlockStructure {
 public:
  BlockStructure() = default;

  /// Validates every size >= 1; throws std::invalid_argument otherwise.
  explicit BlockStructure(std::vector<Block> blocks);

  /// Canonical structure for the given layer sizes.
  static BlockStructure from_composition(const std::vector<int>& parts);

  const std::vector<Block>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }

  /// Sum of block sizes (the length n of the described permutation).
  int total() const;

  /// Expanded layer sizes: an antilayer of size s contributes s ones.
  std::vector<int> composition() const;

  BlockStructure canonical() const;
  bool is_canonical() const;

  bool operator==(const BlockStructure&) const = default;
  auto operator<=>(const BlockStructure& other) const {
    return blocks_ <=> other.blocks_;
  }

  /// Text form: comma-separated "L<size>" / "A<size>" tokens, e.g. "L3,L2,L4".
  std::string to_string() const;

 private:
  std::vector<Block> blocks_;
};

/// Parse the "L3,L2,L4" text form. Throws std::invalid_argument on
/// malformed tokens or nonpositive sizes.
BlockStructure parse_blocks(const std::string& text);

/// Canonical block decomposition of p, or nullopt when p is not layered.
/// Not-layered is a normal outcome, not an error.
std::optional<BlockStructure> decompose_blocks(const Permutation& p);

/// The unique layered permutation with the given (possibly non-canonical)
/// block structure. Empty structure yields the empty permutation.
Permutation build_from_blocks(const BlockStructure& b);

}  // namespace permpack
