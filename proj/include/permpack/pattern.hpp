#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permpack/blocks.hpp"
#include "permpack/permutation.hpp"

namespace permpack {

enum class PatternFamily { explicit_perm, tau_alpha_alpha, tau_2_beta, tau_a_b };

/// A pattern to pack: either an explicit permutation or a member of the
/// layered families with layer sizes (1^alpha, beta). Family members resolve
/// to both their layer composition and their one-line permutation.
class PatternSpec {
 public:
  /// Any permutation; need not be layered.
  static PatternSpec explicit_pattern(Permutation p);

  /// Layers (1^alpha, alpha); alpha >= 2.
  static PatternSpec alpha_alpha(int alpha);

  /// Layers (1, 1, beta); beta >= 2.
  static PatternSpec two_beta(int beta);

  /// Layers (1^alpha, beta); alpha >= 0, beta >= 1.
  static PatternSpec general(int alpha, int beta);

  PatternFamily family() const { return family_; }
  const Permutation& perm() const { return perm_; }
  int length() const { return perm_.size(); }

  bool is_layered() const { return layers_.has_value(); }
  /// Layer sizes; throws std::domain_error when the pattern is not layered.
  const std::vector<int>& layers() const;

  /// Family parameters; meaningful for the tau families only.
  int alpha() const { return alpha_; }
  int beta() const { return beta_; }

  /// True when the resolved layer composition is (1, 1, beta).
  bool is_two_beta_shape() const;

  std::string describe() const;

  bool operator==(const PatternSpec&) const = default;

 private:
  PatternFamily family_ = PatternFamily::explicit_perm;
  Permutation perm_;
  std::optional<std::vector<int>> layers_;
  int alpha_ = 0;
  int beta_ = 0;
};

}  // namespace permpack
