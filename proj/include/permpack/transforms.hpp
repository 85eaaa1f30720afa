#pragma once

#include <optional>
#include <string>

#include "permpack/blocks.hpp"
#include "permpack/count.hpp"

namespace permpack {

/// Result of one structural rewrite on a block structure, with the
/// occurrence counts of tau(2,beta) recomputed on both sides. When the
/// rewrite carries closed-form bookkeeping (the point move and the merge),
/// `loss`, `gain` and `formula_delta` hold the symbolic values; the rewrite
/// itself asserts formula_delta == count_after - count_before, so a
/// surviving outcome always satisfies that identity.
///
/// `hypothesis_satisfied` reports whether the input meets the size
/// hypotheses under which the rewrite is guaranteed not to lose occurrences
/// (strictly gain, for the point move). Inputs that fail the hypotheses are
/// still rewritten and may show a negative delta; that is evidence the
/// hypothesis is needed, not an error.
struct RewriteOutcome {
  std::string op;  // "isolated" | "push" | "sort" | "move" | "merge"
  BlockStructure before;
  BlockStructure after;
  Count count_before;
  Count count_after;
  std::optional<Count> loss;
  std::optional<Count> gain;
  std::optional<Count> formula_delta;
  bool hypothesis_satisfied = true;

  Count recount_delta() const { return count_after - count_before; }
};

/// Repeatedly swap each isolated point (a layer of size 1 between two layers
/// of size >= 2) with the layer on its left until none remain; the points
/// end up merged into antilayers or at the leading position.
RewriteOutcome absorb_isolated_points(const BlockStructure& b, int beta);

/// Repeatedly swap antilayer mass with the layer to its left until the
/// structure is a single leading antilayer followed by layers only.
RewriteOutcome push_antilayers_left(const BlockStructure& b, int beta);

/// Reorder the layers of a leading-antilayer normal form to nondecreasing
/// size. Throws std::domain_error when the input is not in normal form
/// (apply push_antilayers_left first).
RewriteOutcome sort_layers(const BlockStructure& b, int beta);

/// Remove the last element of the leading antilayer and enlarge the last
/// layer by one, with the symbolic loss/gain breakdown. Requires sorted
/// normal form, an antilayer of size >= 2 and at least one layer.
/// Hypotheses for a guaranteed strict gain: |A1| > |Lk| >= beta >= 3.
RewriteOutcome move_point_to_last_layer(const BlockStructure& b, int beta);

/// Replace the leading antilayer and the first layer by a single antilayer
/// of their combined size, reporting the full loss (Lambda), gain (Gamma)
/// and their simplified difference. Requires sorted normal form and a
/// nonempty remainder after the first layer. Hypotheses for a guaranteed
/// nonnegative delta: |Lk| >= |A1| and beta >= 3.
RewriteOutcome merge_first_layer_into_antilayer(const BlockStructure& b, int beta);

}  // namespace permpack
