#include "permpack/blocks.hpp"

#include <sstream>
#include <stdexcept>

namespace permpack {

BlockStructure::BlockStructure(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  for (const Block& b : blocks_) {
    if (b.size < 1)
      throw std::invalid_argument("block sizes must be >= 1, got " +
                                  std::to_string(b.size));
  }
}

BlockStructure BlockStructure::from_composition(const std::vector<int>& parts) {
  for (int p : parts) {
    if (p < 1)
      throw std::invalid_argument("composition parts must be >= 1, got " +
                                  std::to_string(p));
  }
  std::vector<Block> blocks;
  size_t i = 0;
  while (i < parts.size()) {
    if (parts[i] >= 2) {
      blocks.push_back({BlockKind::layer, parts[i]});
      ++i;
      continue;
    }
    size_t j = i;
    while (j < parts.size() && parts[j] == 1) ++j;
    const int run = static_cast<int>(j - i);
    blocks.push_back(run >= 2 ? Block{BlockKind::antilayer, run}
                              : Block{BlockKind::layer, 1});
    i = j;
  }
  BlockStructure result;
  result.blocks_ = std::move(blocks);
  return result;
}

int BlockStructure::total() const {
  int sum = 0;
  for (const Block& b : blocks_) sum += b.size;
  return sum;
}

std::vector<int> BlockStructure::composition() const {
  std::vector<int> parts;
  for (const Block& b : blocks_) {
    if (b.kind == BlockKind::layer) {
      parts.push_back(b.size);
    } else {
      parts.insert(parts.end(), static_cast<size_t>(b.size), 1);
    }
  }
  return parts;
}

BlockStructure BlockStructure::canonical() const {
  return from_composition(composition());
}

bool BlockStructure::is_canonical() const {
  return *this == canonical();
}

std::string BlockStructure::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out << ',';
    out << (blocks_[i].kind == BlockKind::layer ? 'L' : 'A') << blocks_[i].size;
  }
  return out.str();
}

BlockStructure parse_blocks(const std::string& text) {
  std::vector<Block> blocks;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    // trim surrounding whitespace
    const auto first = tok.find_first_not_of(" \t");
    if (first == std::string::npos)
      throw std::invalid_argument("empty block token");
    const auto last = tok.find_last_not_of(" \t");
    tok = tok.substr(first, last - first + 1);

    if (tok.size() < 2 || (tok[0] != 'L' && tok[0] != 'A' && tok[0] != 'l' && tok[0] != 'a'))
      throw std::invalid_argument("invalid block token '" + tok +
                                  "' (expected L<size> or A<size>)");
    size_t used = 0;
    int size = 0;
    try {
      size = std::stoi(tok.substr(1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid block token '" + tok + "'");
    }
    if (used + 1 != tok.size() || size < 1)
      throw std::invalid_argument("invalid block token '" + tok + "'");
    const BlockKind kind =
        (tok[0] == 'L' || tok[0] == 'l') ? BlockKind::layer : BlockKind::antilayer;
    blocks.push_back({kind, size});
  }
  return BlockStructure(std::move(blocks));
}

std::optional<BlockStructure> decompose_blocks(const Permutation& p) {
  const int n = p.size();
  std::vector<int> parts;
  int pos = 0;
  while (pos < n) {
    // The layer starting here must run down to pos+1 (values 1..pos are used).
    const int top = p[pos];
    const int size = top - pos;
    if (size < 1 || pos + size > n) return std::nullopt;
    for (int i = 0; i < size; ++i) {
      if (p[pos + i] != top - i) return std::nullopt;
    }
    parts.push_back(size);
    pos += size;
  }
  return BlockStructure::from_composition(parts);
}

Permutation build_from_blocks(const BlockStructure& b) {
  std::vector<int> values;
  values.reserve(static_cast<size_t>(b.total()));
  int base = 1;
  for (int size : b.composition()) {
    for (int i = 0; i < size; ++i) values.push_back(base + size - 1 - i);
    base += size;
  }
  return Permutation(std::move(values));
}

}  // namespace permpack
