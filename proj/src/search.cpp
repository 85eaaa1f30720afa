#include "permpack/search.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "permpack/counting.hpp"
#include "permpack/formulas.hpp"
#include "permpack/parallel.hpp"

namespace permpack {

std::string to_string(Restriction r) {
  switch (r) {
    case Restriction::all: return "all";
    case Restriction::layered: return "layered";
    case Restriction::antilayer_then_layers: return "antilayer_then_layers";
  }
  return "?";
}

std::string to_string(RatioMode m) {
  switch (m) {
    case RatioMode::exhaustive: return "exhaustive";
    case RatioMode::layered: return "layered";
    case RatioMode::formula: return "formula";
  }
  return "?";
}

RatioMode ratio_mode_from_string(const std::string& name) {
  if (name == "exhaustive") return RatioMode::exhaustive;
  if (name == "layered") return RatioMode::layered;
  if (name == "formula") return RatioMode::formula;
  throw std::invalid_argument("unknown ratio mode '" + name +
                              "' (expected exhaustive|layered|formula)");
}

namespace {

// Partial maximum plus the lexicographically least maximizers seen so far,
// keyed by one-line values (or layer compositions, whose lexicographic
// order agrees with the built permutations'). Merging two of these is
// associative and commutative, so chunk scheduling cannot affect results.
struct BestSet {
  Count max = -1;  // -1: no candidate seen
  std::set<std::vector<int>> keys;
  Count ties = 0;
  int cap = 10;

  void offer(const Count& count, const std::vector<int>& key) {
    if (count > max) {
      max = count;
      keys.clear();
      keys.insert(key);
      ties = 1;
      return;
    }
    if (count == max) {
      ties += 1;
      keys.insert(key);
      while (static_cast<int>(keys.size()) > cap) keys.erase(std::prev(keys.end()));
    }
  }

  static BestSet merged(BestSet a, BestSet b) {
    if (a.max != b.max) return a.max > b.max ? std::move(a) : std::move(b);
    a.ties += b.ties;
    a.keys.merge(b.keys);
    while (static_cast<int>(a.keys.size()) > a.cap) a.keys.erase(std::prev(a.keys.end()));
    return a;
  }
};

void verify_witnesses(const SearchResult& result) {
  for (const Permutation& w : result.witnesses) {
    if (count_occurrences(result.pattern.perm(), w) != result.max_count) {
      throw std::logic_error("witness " + w.to_string() +
                             " does not recount to the reported maximum");
    }
  }
}

std::optional<int> two_beta_of(const PatternSpec& tau) {
  if (!tau.is_two_beta_shape()) return std::nullopt;
  return tau.layers().back();
}

bool is_alpha_alpha_shape(const PatternSpec& tau, int& alpha_out) {
  if (!tau.is_layered()) return false;
  const auto& l = tau.layers();
  if (l.size() < 3) return false;
  const int alpha = static_cast<int>(l.size()) - 1;
  for (int i = 0; i < alpha; ++i)
    if (l[static_cast<size_t>(i)] != 1) return false;
  if (l.back() != alpha || alpha < 2) return false;
  alpha_out = alpha;
  return true;
}

}  // namespace

SearchResult max_over_all(const PatternSpec& tau, int n, const SearchLimits& limits) {
  if (n < 0) throw std::invalid_argument("max_over_all: n must be >= 0");
  if (n > limits.max_exhaustive_n) {
    std::ostringstream msg;
    msg << "refusing exhaustive search over " << n << "! permutations (bound "
        << limits.max_exhaustive_n
        << "); use restriction=layered for layered patterns or raise "
           "max_exhaustive_n knowingly";
    throw std::domain_error(msg.str());
  }

  const PermutationRange range(n);
  const std::vector<int>& pattern = tau.perm().values();
  const int cap = limits.witness_cap;

  auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
    BestSet best;
    best.cap = cap;
    std::vector<int> values = range.at(lo).values();
    for (std::uint64_t rank = lo; rank < hi; ++rank) {
      best.offer(count_occurrences(pattern, values), values);
      std::next_permutation(values.begin(), values.end());
    }
    return best;
  };
  BestSet best = chunked_reduce<BestSet>(range.size(), limits.workers, chunk,
                                         BestSet::merged);

  SearchResult result;
  result.pattern = tau;
  result.n = n;
  result.restriction = Restriction::all;
  result.max_count = best.max < 0 ? Count(0) : best.max;
  result.space_size = range.size();
  result.num_maximal = best.ties;
  result.witness_cap = cap;
  for (const auto& key : best.keys) result.witnesses.emplace_back(key);
  verify_witnesses(result);
  return result;
}

SearchResult max_over_layered(const PatternSpec& tau, int n,
                              const SearchLimits& limits) {
  if (n < 0) throw std::invalid_argument("max_over_layered: n must be >= 0");
  if (!tau.is_layered())
    throw std::domain_error(
        "max_over_layered requires a layered pattern (the layered restriction "
        "is only exact for layered patterns)");
  if (n > limits.max_composition_n) {
    std::ostringstream msg;
    msg << "refusing to enumerate 2^" << (n - 1) << " layered structures (bound "
        << limits.max_composition_n << "); raise max_composition_n knowingly";
    throw std::domain_error(msg.str());
  }

  const CompositionRange range(n);
  const std::vector<int>& pattern_layers = tau.layers();
  const int cap = limits.witness_cap;

  auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
    BestSet best;
    best.cap = cap;
    range.for_each(lo, hi, [&](const std::vector<int>& parts) {
      best.offer(count_occurrences_layered(pattern_layers, parts), parts);
    });
    return best;
  };
  BestSet best = chunked_reduce<BestSet>(range.size(), limits.workers, chunk,
                                         BestSet::merged);

  SearchResult result;
  result.pattern = tau;
  result.n = n;
  result.restriction = Restriction::layered;
  result.max_count = best.max < 0 ? Count(0) : best.max;
  result.space_size = range.size();
  result.num_maximal = best.ties;
  result.witness_cap = cap;
  for (const auto& parts : best.keys) {
    result.witness_blocks.push_back(BlockStructure::from_composition(parts));
    result.witnesses.push_back(build_from_blocks(result.witness_blocks.back()));
  }
  verify_witnesses(result);
  return result;
}

SearchResult g_k_max(const PatternSpec& tau, int n, int k,
                     const SearchLimits& limits) {
  const auto beta = two_beta_of(tau);
  if (!beta)
    throw std::domain_error(
        "g_k maximization is defined for patterns with layers (1,1,beta)");
  if (k < 1) throw std::invalid_argument("g_k: k must be >= 1");
  if (n < 0) throw std::invalid_argument("g_k: n must be >= 0");

  const int pattern_layers[] = {1, 1, *beta};
  BestSet best;
  best.cap = limits.witness_cap;
  Count space = 0;

  // Structures (1^a, L1..Lk): all layers >= 2 and the last layer at least
  // the antilayer. Enumerated in ascending lexicographic composition order.
  std::vector<int> layers(static_cast<size_t>(k));
  auto place = [&](auto&& self, int index, int remaining, int a) -> void {
    if (index == k - 1) {
      if (remaining >= 2 && remaining >= a) {
        layers.back() = remaining;
        std::vector<int> parts(static_cast<size_t>(a), 1);
        parts.insert(parts.end(), layers.begin(), layers.end());
        space += 1;
        best.offer(count_occurrences_layered(pattern_layers, parts), parts);
      }
      return;
    }
    // leave at least 2 per remaining layer
    for (int size = 2; remaining - size >= 2 * (k - 1 - index); ++size) {
      layers[static_cast<size_t>(index)] = size;
      self(self, index + 1, remaining - size, a);
    }
  };
  for (int a = 0; a + 2 * k <= n; ++a) place(place, 0, n - a, a);

  SearchResult result;
  result.pattern = tau;
  result.n = n;
  result.restriction = Restriction::antilayer_then_layers;
  result.k = k;
  result.max_count = best.max < 0 ? Count(0) : best.max;
  result.space_size = space;
  result.num_maximal = best.max < 0 ? Count(0) : best.ties;
  result.witness_cap = limits.witness_cap;
  result.lemma_sizes_satisfied = !best.keys.empty();
  for (const auto& parts : best.keys) {
    result.witness_blocks.push_back(BlockStructure::from_composition(parts));
    result.witnesses.push_back(build_from_blocks(result.witness_blocks.back()));
    const int a = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
    if (a < 2 || parts.back() < *beta) result.lemma_sizes_satisfied = false;
  }
  verify_witnesses(result);
  return result;
}

RatioTable galvin_ratios(const PatternSpec& tau, int n_max, RatioMode mode,
                         const SearchLimits& limits) {
  const int m = tau.length();
  if (m < 1) throw std::invalid_argument("galvin_ratios: pattern must be nonempty");
  RatioTable table;
  table.pattern = tau;
  table.mode = mode;

  int alpha = 0;
  const auto beta = two_beta_of(tau);
  const bool aa_shape = is_alpha_alpha_shape(tau, alpha);
  if (mode == RatioMode::formula && !beta && !aa_shape) {
    throw std::domain_error(
        "formula mode needs a closed form: available for layers (1,1,beta) and "
        "(1^alpha,alpha) patterns");
  }

  for (int n = m; n <= n_max; ++n) {
    Count g;
    switch (mode) {
      case RatioMode::exhaustive:
        g = max_over_all(tau, n, limits).max_count;
        break;
      case RatioMode::layered:
        g = max_over_layered(tau, n, limits).max_count;
        break;
      case RatioMode::formula:
        if (beta) {
          g = g_formula_2beta(n, *beta).value;
        } else {
          if (n % 2 != 0) continue;  // closed form covers even lengths only
          g = g_formula_alpha_alpha(n, alpha);
        }
        break;
    }
    const Count binom_nm = binomial(n, m);
    table.rows.push_back({n, g, binom_nm, Rational(g, binom_nm)});
    const size_t r = table.rows.size();
    if (r >= 2 && table.rows[r - 1].ratio > table.rows[r - 2].ratio) {
      table.failures.push_back({table.rows[r - 2].n, n, table.rows[r - 2].ratio,
                                table.rows[r - 1].ratio});
    }
  }
  return table;
}

}  // namespace permpack
