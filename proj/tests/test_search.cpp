#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "permpack/counting.hpp"
#include "permpack/formulas.hpp"
#include "permpack/search.hpp"

using namespace permpack;

namespace {

bool has_witness(const SearchResult& result, const Permutation& w) {
  return std::find(result.witnesses.begin(), result.witnesses.end(), w) !=
         result.witnesses.end();
}

}  // namespace

TEST_CASE("exhaustive maximization over all permutations") {
  const auto r1243 = max_over_all(
      PatternSpec::explicit_pattern(Permutation({1, 2, 4, 3})), 8);
  CHECK(r1243.max_count == 36);
  CHECK(has_witness(r1243, Permutation({1, 2, 3, 4, 8, 7, 6, 5})));
  CHECK(r1243.space_size == Count(40320));

  const auto ascents = max_over_all(
      PatternSpec::explicit_pattern(Permutation({1, 2})), 3);
  CHECK(ascents.max_count == 3);
  CHECK(has_witness(ascents, Permutation({1, 2, 3})));

  const auto t23 = max_over_all(PatternSpec::two_beta(3), 8);
  CHECK(t23.max_count == 30);
  CHECK(t23.max_count == g_formula_2beta(8, 3).value);
}

TEST_CASE("bound refusal points to the layered restriction") {
  CHECK_THROWS_WITH_AS(max_over_all(PatternSpec::two_beta(3), 12),
                       doctest::Contains("layered"), std::domain_error);
}

TEST_CASE("layered maximization over compositions") {
  const auto t23 = max_over_layered(PatternSpec::two_beta(3), 8);
  CHECK(t23.max_count == 30);
  REQUIRE(!t23.witness_blocks.empty());
  CHECK(t23.witness_blocks.front().to_string() == "A3,L5");

  const auto r1243 = max_over_layered(PatternSpec::alpha_alpha(2), 8);
  CHECK(r1243.max_count == 36);
  CHECK(r1243.witness_blocks.front().to_string() == "A4,L4");
  CHECK(has_witness(r1243, Permutation({1, 2, 3, 4, 8, 7, 6, 5})));

  const auto desc = max_over_layered(
      PatternSpec::explicit_pattern(Permutation({3, 2, 1})), 5);
  CHECK(desc.max_count == 10);  // C(5,3) in the fully decreasing permutation
  CHECK(desc.witness_blocks.front().to_string() == "L5");

  CHECK_THROWS_AS(
      max_over_layered(PatternSpec::explicit_pattern(Permutation({2, 3, 1})), 6),
      std::domain_error);
}

TEST_CASE("layered restriction is exact for small layered patterns") {
  // spot checks here; the acceptance suite sweeps every pattern with m <= 5
  for (const auto& tau :
       {PatternSpec::two_beta(2), PatternSpec::two_beta(3),
        PatternSpec::explicit_pattern(Permutation({2, 1})),
        PatternSpec::explicit_pattern(Permutation({1, 3, 2}))}) {
    for (int n = tau.length(); n <= 7; ++n) {
      CHECK(max_over_all(tau, n).max_count == max_over_layered(tau, n).max_count);
    }
  }
}

TEST_CASE("antilayer-then-k-layers maximization") {
  const auto g1 = g_k_max(PatternSpec::two_beta(3), 10, 1);
  CHECK(g1.max_count == 120);
  CHECK(g1.witness_blocks.front().to_string() == "A4,L6");
  CHECK(g1.max_count == g_formula_2beta(10, 3).value);
  CHECK(g1.lemma_sizes_satisfied);

  const auto g2 = g_k_max(PatternSpec::two_beta(3), 10, 2);
  CHECK(g2.max_count == 100);  // [A2,L2,L6]
  CHECK(g2.max_count <= g1.max_count);
  CHECK(g2.witness_blocks.front().to_string() == "A2,L2,L6");

  // a single candidate structure checked directly against the DP
  const std::vector<int> tau{1, 1, 3};
  const std::vector<int> candidate{1, 1, 3, 5};
  CHECK(count_occurrences_layered(tau, candidate) == 71);

  // infeasible: no room for k layers of size >= 2
  const auto infeasible = g_k_max(PatternSpec::two_beta(3), 3, 2);
  CHECK(infeasible.max_count == 0);
  CHECK(infeasible.witnesses.empty());
  CHECK(infeasible.space_size == 0);

  CHECK_THROWS_AS(
      g_k_max(PatternSpec::explicit_pattern(Permutation({1, 3, 2})), 8, 1),
      std::domain_error);
}

TEST_CASE("g_k never beats g_1") {
  for (int beta : {3, 4}) {
    const PatternSpec tau = PatternSpec::two_beta(beta);
    for (int n = beta + 2; n <= 16; ++n) {
      const Count g1 = g_k_max(tau, n, 1).max_count;
      for (int k = 2; 2 * k <= n; ++k) {
        CHECK(g_k_max(tau, n, k).max_count <= g1);
      }
    }
  }
}

TEST_CASE("every witness recounts to the maximum") {
  for (const auto& result :
       {max_over_all(PatternSpec::two_beta(2), 7),
        max_over_layered(PatternSpec::two_beta(3), 12),
        g_k_max(PatternSpec::two_beta(3), 12, 2)}) {
    REQUIRE(!result.witnesses.empty());
    for (const auto& w : result.witnesses) {
      CHECK(count_occurrences(result.pattern.perm(), w) == result.max_count);
    }
    CHECK(std::is_sorted(result.witnesses.begin(), result.witnesses.end()));
  }
}

TEST_CASE("results do not depend on the worker count") {
  for (unsigned workers : {1u, 2u, 4u, 7u}) {
    SearchLimits limits;
    limits.workers = workers;
    const auto all = max_over_all(PatternSpec::two_beta(2), 7, limits);
    CHECK(all.max_count == max_over_all(PatternSpec::two_beta(2), 7).max_count);
    CHECK(all.witnesses == max_over_all(PatternSpec::two_beta(2), 7).witnesses);
    CHECK(all.num_maximal == max_over_all(PatternSpec::two_beta(2), 7).num_maximal);

    const auto layered = max_over_layered(PatternSpec::two_beta(3), 13, limits);
    CHECK(layered.witnesses ==
          max_over_layered(PatternSpec::two_beta(3), 13).witnesses);
  }
}

TEST_CASE("galvin ratio tables") {
  const auto ones = galvin_ratios(
      PatternSpec::explicit_pattern(Permutation({1, 2})), 6, RatioMode::exhaustive);
  REQUIRE(ones.rows.size() == 5);
  for (const auto& row : ones.rows) CHECK(row.ratio == Rational(1));
  CHECK(ones.failures.empty());

  const auto r1243 = galvin_ratios(PatternSpec::alpha_alpha(2), 8,
                                   RatioMode::exhaustive);
  CHECK(r1243.rows.back().n == 8);
  CHECK(r1243.rows.back().ratio == Rational(36, 70));
  CHECK(r1243.failures.empty());

  const auto formula = galvin_ratios(PatternSpec::two_beta(3), 400,
                                     RatioMode::formula);
  CHECK(formula.failures.empty());
  const Rational density(1080, 3125);
  for (const auto& row : formula.rows) CHECK(row.ratio >= density);

  // alpha-alpha formula tables cover even sizes only
  const auto aa = galvin_ratios(PatternSpec::alpha_alpha(3), 20, RatioMode::formula);
  for (const auto& row : aa.rows) CHECK(row.n % 2 == 0);
  CHECK(aa.failures.empty());

  CHECK_THROWS_AS(galvin_ratios(PatternSpec::explicit_pattern(Permutation({2, 3, 1})),
                                10, RatioMode::formula),
                  std::domain_error);
  CHECK_THROWS_AS(galvin_ratios(PatternSpec::two_beta(2), 15, RatioMode::exhaustive),
                  std::domain_error);
}
