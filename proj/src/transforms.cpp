#include "permpack/transforms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "permpack/counting.hpp"

namespace permpack {

namespace {

Count count_two_beta(const std::vector<int>& composition, int beta) {
  const int tau[] = {1, 1, beta};
  return count_occurrences_layered(tau, composition);
}

void require_beta(int beta) {
  if (beta < 2) throw std::invalid_argument("rewrites require beta >= 2");
}

// Leading antilayer mass followed by layers of size >= 2 only.
struct NormalForm {
  int antilayer = 0;
  std::vector<int> layers;
};

std::optional<NormalForm> to_normal_form(const std::vector<int>& composition) {
  NormalForm form;
  size_t i = 0;
  while (i < composition.size() && composition[i] == 1) {
    ++form.antilayer;
    ++i;
  }
  for (; i < composition.size(); ++i) {
    if (composition[i] == 1) return std::nullopt;
    form.layers.push_back(composition[i]);
  }
  return form;
}

NormalForm require_sorted_normal_form(const BlockStructure& b, const char* op) {
  auto form = to_normal_form(b.composition());
  if (!form) {
    std::ostringstream msg;
    msg << op << ": input " << b.to_string()
        << " is not in leading-antilayer normal form; apply push_antilayers_left first";
    throw std::domain_error(msg.str());
  }
  if (!std::is_sorted(form->layers.begin(), form->layers.end())) {
    std::ostringstream msg;
    msg << op << ": layers of " << b.to_string()
        << " are not nondecreasing; apply sort_layers first";
    throw std::domain_error(msg.str());
  }
  return *std::move(form);
}

std::vector<int> to_composition(const NormalForm& form) {
  std::vector<int> parts(static_cast<size_t>(form.antilayer), 1);
  parts.insert(parts.end(), form.layers.begin(), form.layers.end());
  return parts;
}

RewriteOutcome make_outcome(std::string op, const BlockStructure& before,
                            std::vector<int> after_composition, int beta) {
  RewriteOutcome out;
  out.op = std::move(op);
  out.before = before.canonical();
  out.after = BlockStructure::from_composition(after_composition);
  out.count_before = count_two_beta(before.composition(), beta);
  out.count_after = count_two_beta(after_composition, beta);
  return out;
}

void assert_formula_matches_recount(const RewriteOutcome& out) {
  if (*out.formula_delta != out.recount_delta()) {
    std::ostringstream msg;
    msg << out.op << ": formula delta " << *out.formula_delta
        << " does not match recount " << out.recount_delta() << " on "
        << out.before.to_string();
    throw std::logic_error(msg.str());
  }
}

}  // namespace

RewriteOutcome absorb_isolated_points(const BlockStructure& b, int beta) {
  require_beta(beta);
  std::vector<int> parts = b.composition();
  // Swap the leftmost isolated point with the layer on its left; repeat.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 1; i + 1 < parts.size(); ++i) {
      if (parts[i] == 1 && parts[i - 1] >= 2 && parts[i + 1] >= 2) {
        std::swap(parts[i - 1], parts[i]);
        changed = true;
        break;
      }
    }
  }
  return make_outcome("isolated", b, std::move(parts), beta);
}

RewriteOutcome push_antilayers_left(const BlockStructure& b, int beta) {
  require_beta(beta);
  // Repeated antilayer/left-layer swaps amount to a stable partition:
  // singleton mass in front, layers in their original order.
  std::vector<int> parts = b.composition();
  std::stable_partition(parts.begin(), parts.end(),
                        [](int p) { return p == 1; });
  return make_outcome("push", b, std::move(parts), beta);
}

RewriteOutcome sort_layers(const BlockStructure& b, int beta) {
  require_beta(beta);
  auto form = to_normal_form(b.composition());
  if (!form) {
    std::ostringstream msg;
    msg << "sort_layers: input " << b.to_string()
        << " is not in leading-antilayer normal form; apply push_antilayers_left first";
    throw std::domain_error(msg.str());
  }
  std::stable_sort(form->layers.begin(), form->layers.end());
  return make_outcome("sort", b, to_composition(*form), beta);
}

RewriteOutcome move_point_to_last_layer(const BlockStructure& b, int beta) {
  require_beta(beta);
  NormalForm form = require_sorted_normal_form(b, "move_point_to_last_layer");
  const int a = form.antilayer;
  const int k = static_cast<int>(form.layers.size());
  if (k == 0)
    throw std::domain_error("move_point_to_last_layer: no layer to receive the point");
  if (a <= 1)
    throw std::domain_error(
        "move_point_to_last_layer: antilayer must have size >= 2 (moving would "
        "empty it)");

  const std::vector<int>& layers = form.layers;
  const int last = layers.back();

  // Loss: occurrences through the removed point, split by whether the
  // beta-layer of the occurrence sits in the last layer.
  Count sum_binom_prefix = 0;   // sum of C(|Li|, beta), i < k
  Count sum_sizes_prefix = 0;   // sum of |Li|, i < k
  Count pair_terms = 0;         // sum over i<j<k of |Li| * C(|Lj|, beta)
  Count pair_products = 0;      // sum over i<j<k of |Li| * |Lj|
  Count prefix_sizes_running = 0;
  for (int j = 0; j + 1 < k; ++j) {
    pair_terms += prefix_sizes_running * binomial(layers[static_cast<size_t>(j)], beta);
    pair_products += prefix_sizes_running * layers[static_cast<size_t>(j)];
    prefix_sizes_running += layers[static_cast<size_t>(j)];
    sum_binom_prefix += binomial(layers[static_cast<size_t>(j)], beta);
    sum_sizes_prefix += layers[static_cast<size_t>(j)];
  }
  const Count binom_last = binomial(last, beta);
  const Count binom_last_minus = binomial(last, beta - 1);

  const Count loss = Count(a - 1) * sum_binom_prefix + Count(a - 1) * binom_last +
                     pair_terms + sum_sizes_prefix * binom_last;
  const Count gain = Count(a - 1) * sum_sizes_prefix * binom_last_minus +
                     binomial(a - 1, 2) * binom_last_minus +
                     pair_products * binom_last_minus;

  NormalForm moved{a - 1, layers};
  moved.layers.back() += 1;

  RewriteOutcome out = make_outcome("move", b, to_composition(moved), beta);
  out.loss = loss;
  out.gain = gain;
  out.formula_delta = gain - loss;
  out.hypothesis_satisfied = a > last && last >= beta && beta >= 3;
  assert_formula_matches_recount(out);
  if (out.hypothesis_satisfied && out.recount_delta() <= 0) {
    throw std::logic_error(
        "move_point_to_last_layer: hypotheses hold but the net gain is not "
        "strictly positive on " + b.to_string());
  }
  return out;
}

RewriteOutcome merge_first_layer_into_antilayer(const BlockStructure& b, int beta) {
  require_beta(beta);
  NormalForm form = require_sorted_normal_form(b, "merge_first_layer_into_antilayer");
  const int a = form.antilayer;
  const int k = static_cast<int>(form.layers.size());
  if (k < 2)
    throw std::domain_error(
        "merge_first_layer_into_antilayer: the remainder after the first layer "
        "must be nonempty");

  const int first = form.layers.front();
  const int last = form.layers.back();
  const std::vector<int> rest(form.layers.begin() + 1, form.layers.end());

  // Counts of the one-layer and singleton+layer subpatterns in the remainder.
  const int layer_only[] = {beta};
  const int point_then_layer[] = {1, beta};
  const Count g0 = count_occurrences_layered(layer_only, rest);
  const Count g1 = count_occurrences_layered(point_then_layer, rest);

  const Count pairs_a = binomial(a, 2);
  const Count lost = pairs_a * binomial(first, beta) +
                     g0 * (pairs_a + Count(a) * first) + g1 * Count(a + first);
  const Count gained = g0 * binomial(a + first, 2) + g1 * Count(a + first);
  const Count simplified = g0 * binomial(first, 2) - pairs_a * binomial(first, beta);

  // The g1 terms must cancel: full Gamma - Lambda equals the simplified form.
  if (gained - lost != simplified) {
    throw std::logic_error(
        "merge_first_layer_into_antilayer: full loss/gain difference does not "
        "reduce to the simplified form on " + b.to_string());
  }

  std::vector<int> merged(static_cast<size_t>(a + first), 1);
  merged.insert(merged.end(), rest.begin(), rest.end());

  RewriteOutcome out = make_outcome("merge", b, std::move(merged), beta);
  out.loss = lost;
  out.gain = gained;
  out.formula_delta = simplified;
  out.hypothesis_satisfied = last >= a && beta >= 3;
  assert_formula_matches_recount(out);
  return out;
}

}  // namespace permpack
