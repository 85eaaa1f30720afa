#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "permpack/blocks.hpp"
#include "permpack/counting.hpp"
#include "permpack/enumerate.hpp"

using namespace permpack;
using permpack::testing::naive_count;
using permpack::testing::random_permutation;

TEST_CASE("occurrence counts on known permutations") {
  CHECK(count_occurrences(Permutation({1, 2}), Permutation({1, 2, 3, 4, 5})) == 10);
  CHECK(count_occurrences(Permutation({1, 2, 4, 3}),
                          Permutation({1, 2, 3, 4, 8, 7, 6, 5})) == 36);

  // climbing example: the antilayer of 12543 spreads across layers
  const Permutation climb_host({2, 1, 4, 3, 6, 5, 10, 9, 8, 7});
  const Permutation tau12543({1, 2, 5, 4, 3});
  CHECK(naive_count(tau12543, climb_host) == 48);
  CHECK(count_occurrences(tau12543, climb_host) == 48);

  const Permutation fig1({3, 2, 1, 5, 4, 9, 8, 7, 6});
  CHECK(naive_count(Permutation({3, 2, 1}), fig1) == 5);
  CHECK(count_occurrences(Permutation({3, 2, 1}), fig1) == 5);
}

TEST_CASE("layered dynamic program on known compositions") {
  const std::vector<int> t112{1, 1, 2};
  const std::vector<int> s11114{1, 1, 1, 1, 4};
  CHECK(count_occurrences_layered(t112, s11114) == 36);

  const std::vector<int> t113{1, 1, 3};
  const std::vector<int> s2224{2, 2, 2, 4};
  CHECK(count_occurrences_layered(t113, s2224) == 48);

  const std::vector<int> t3{3};
  const std::vector<int> s324{3, 2, 4};
  CHECK(count_occurrences_layered(t3, s324) == 5);  // C(3,3)+C(2,3)+C(4,3)
}

TEST_CASE("edge cases: empty pattern, oversized pattern") {
  CHECK(count_occurrences(Permutation(), Permutation({2, 1})) == 1);
  CHECK(count_occurrences(Permutation({1, 2, 3}), Permutation({2, 1})) == 0);
  CHECK(count_occurrences_layered(std::vector<int>{}, std::vector<int>{3, 2}) == 1);
  CHECK(count_occurrences_layered(std::vector<int>{1}, std::vector<int>{}) == 0);
}

TEST_CASE("self-count is one and counts never exceed C(n,m)") {
  std::mt19937_64 rng(20240318);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Permutation p = random_permutation(n, rng);
    CHECK(count_occurrences(p, p) == 1);
    const int m = 1 + static_cast<int>(rng() % n);
    const Permutation tau = random_permutation(m, rng);
    CHECK(count_occurrences(tau, p) <= binomial(n, m));
  }
}

TEST_CASE("general counter agrees with the subset oracle on random input") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);  // 4..9
    const int m = 1 + static_cast<int>(rng() % 4);  // 1..4
    const Permutation sigma = random_permutation(n, rng);
    const Permutation tau = random_permutation(m, rng);
    CHECK(count_occurrences(tau, sigma) == naive_count(tau, sigma));
  }
}

TEST_CASE("layered DP agrees with the general counter over all compositions") {
  // unit-scale sweep; the acceptance suite runs the full m<=5, n<=10 version
  for (int m = 1; m <= 4; ++m) {
    std::vector<std::vector<int>> patterns;
    enumerate_layered(m, [&](const BlockStructure& b) {
      patterns.push_back(b.composition());
    });
    for (int n = m; n <= 8; ++n) {
      enumerate_layered(n, [&](const BlockStructure& sigma_blocks) {
        const Permutation sigma = build_from_blocks(sigma_blocks);
        const std::vector<int> sigma_comp = sigma_blocks.composition();
        for (const auto& tau_layers : patterns) {
          const Permutation tau =
              build_from_blocks(BlockStructure::from_composition(tau_layers));
          CHECK(count_occurrences_layered(tau_layers, sigma_comp) ==
                count_occurrences(tau, sigma));
        }
      });
    }
  }
}

TEST_CASE("binomials are exact beyond 64-bit range") {
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(52, 5) == 2598960);
  CHECK(binomial(64, 32) == Count("1832624140942590534"));
  CHECK(binomial(100, 50) == Count("100891344545564193334812497256"));
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(7, 0) == 1);
}
