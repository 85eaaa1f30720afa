#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "permpack/blocks.hpp"
#include "permpack/enumerate.hpp"
#include "permpack/pattern.hpp"
#include "permpack/permutation.hpp"

using namespace permpack;

TEST_CASE("permutation validation lists offending values") {
  CHECK_NOTHROW(Permutation({3, 2, 1, 5, 4, 9, 8, 7, 6}));
  CHECK_NOTHROW(Permutation(std::vector<int>{}));
  CHECK_THROWS_WITH_AS(Permutation({1, 3}),
                       doctest::Contains("not a bijection on 1..2"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Permutation({2, 2, 3}), doctest::Contains("repeated: 2"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Permutation({2, 2, 3}), doctest::Contains("missing: 1"),
                       std::invalid_argument);
}

TEST_CASE("permutation parsing: whitespace, compact, errors") {
  CHECK(parse_permutation("3 2 1 5 4 9 8 7 6") ==
        Permutation({3, 2, 1, 5, 4, 9, 8, 7, 6}));
  CHECK(parse_permutation("1243") == Permutation({1, 2, 4, 3}));
  CHECK(parse_permutation("1") == Permutation({1}));
  CHECK(parse_permutation("") == Permutation());
  CHECK_THROWS_AS(parse_permutation("1 3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1 2 x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("12 43"), std::invalid_argument);
  // round-trip
  const Permutation p({2, 1, 4, 3, 6, 5, 10, 9, 8, 7});
  CHECK(parse_permutation(p.to_string()) == p);
}

TEST_CASE("block decomposition of layered permutations") {
  auto fig = decompose_blocks(Permutation({3, 2, 1, 5, 4, 9, 8, 7, 6}));
  REQUIRE(fig.has_value());
  CHECK(fig->to_string() == "L3,L2,L4");
  CHECK(fig->composition() == std::vector<int>{3, 2, 4});

  auto identity = decompose_blocks(Permutation({1, 2, 3}));
  REQUIRE(identity.has_value());
  CHECK(identity->to_string() == "A3");

  CHECK_FALSE(decompose_blocks(Permutation({2, 3, 1})).has_value());
  CHECK_FALSE(decompose_blocks(Permutation({2, 4, 1, 3})).has_value());
  CHECK(decompose_blocks(Permutation())->empty());
}

TEST_CASE("building layered permutations from blocks") {
  CHECK(build_from_blocks(parse_blocks("A2,L3")) == Permutation({1, 2, 5, 4, 3}));
  CHECK(build_from_blocks(parse_blocks("L3,L2,L4")) ==
        Permutation({3, 2, 1, 5, 4, 9, 8, 7, 6}));
  CHECK(build_from_blocks(parse_blocks("A3")) == Permutation({1, 2, 3}));
  CHECK(build_from_blocks(BlockStructure()) == Permutation());
  // non-canonical input is accepted and expanded
  CHECK(build_from_blocks(parse_blocks("A1,L2")) ==
        build_from_blocks(parse_blocks("L1,L2")));
  CHECK(build_from_blocks(parse_blocks("A2,A2")) ==
        build_from_blocks(parse_blocks("A4")));
}

TEST_CASE("canonical form groups singleton runs") {
  CHECK(BlockStructure::from_composition({1, 1, 2, 1, 3}).to_string() ==
        "A2,L2,L1,L3");
  CHECK(BlockStructure::from_composition({1, 2, 2}).to_string() == "L1,L2,L2");
  CHECK(parse_blocks("A1,L2").canonical().to_string() == "L1,L2");
  CHECK(parse_blocks("A2,A3,L2,L1").canonical().to_string() == "A5,L2,L1");
  CHECK(parse_blocks("L1,L1,L1").canonical().to_string() == "A3");
  CHECK_FALSE(parse_blocks("A1,L2").is_canonical());
  CHECK(parse_blocks("L3,L2,L4").is_canonical());
  CHECK_THROWS_AS(parse_blocks("L0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_blocks("B3"), std::invalid_argument);
  CHECK_THROWS_AS(BlockStructure({{BlockKind::layer, 0}}), std::invalid_argument);
}

TEST_CASE("block text round-trips") {
  for (const char* text : {"L3,L2,L4", "A2,L3", "A5,L2,L1,L3", "L1,L2,L2"}) {
    CHECK(parse_blocks(text).to_string() == text);
  }
}

TEST_CASE("decompose and build are mutually inverse over all compositions") {
  for (int n = 0; n <= 12; ++n) {
    enumerate_layered(n, [&](const BlockStructure& b) {
      const Permutation p = build_from_blocks(b);
      auto back = decompose_blocks(p);
      REQUIRE(back.has_value());
      CHECK(*back == b);
      CHECK(build_from_blocks(*back) == p);
      // non-canonical route: expanding to singleton layers and rebuilding
      std::vector<Block> expanded;
      for (int part : b.composition()) expanded.push_back({BlockKind::layer, part});
      CHECK(build_from_blocks(BlockStructure(expanded)) == p);
    });
  }
}

TEST_CASE("layered enumeration: order, count, edge cases") {
  std::vector<std::string> seen;
  enumerate_layered(3, [&](const BlockStructure& b) { seen.push_back(b.to_string()); });
  CHECK(seen == std::vector<std::string>{"L3", "L2,L1", "L1,L2", "A3"});

  int count = 0;
  enumerate_layered(1, [&](const BlockStructure& b) {
    ++count;
    CHECK(b.to_string() == "L1");
  });
  CHECK(count == 1);

  count = 0;
  enumerate_layered(5, [&](const BlockStructure&) { ++count; });
  CHECK(count == 16);

  count = 0;
  enumerate_layered(0, [&](const BlockStructure& b) {
    ++count;
    CHECK(b.empty());
  });
  CHECK(count == 1);

  std::set<std::vector<int>> distinct;
  enumerate_layered(9, [&](const BlockStructure& b) {
    distinct.insert(b.composition());
  });
  CHECK(distinct.size() == 256);
}

TEST_CASE("full enumeration: order, count, refusal above bound") {
  std::vector<Permutation> perms;
  enumerate_all(3, [&](const Permutation& p) { perms.push_back(p); });
  REQUIRE(perms.size() == 6);
  CHECK(perms.front() == Permutation({1, 2, 3}));
  CHECK(perms.back() == Permutation({3, 2, 1}));
  CHECK(std::is_sorted(perms.begin(), perms.end()));

  int count = 0;
  enumerate_all(1, [&](const Permutation& p) {
    ++count;
    CHECK(p == Permutation({1}));
  });
  CHECK(count == 1);

  CHECK_THROWS_WITH_AS(enumerate_all(12, [](const Permutation&) {}),
                       doctest::Contains("refusing"), std::domain_error);

  SearchLimits raised;
  raised.max_exhaustive_n = 12;
  CHECK_THROWS_AS(enumerate_all(13, [](const Permutation&) {}, raised),
                  std::domain_error);
}

TEST_CASE("permutation range unranks lexicographically") {
  const PermutationRange range(4);
  CHECK(range.size() == 24);
  CHECK(range.at(0) == Permutation({1, 2, 3, 4}));
  CHECK(range.at(23) == Permutation({4, 3, 2, 1}));
  // chunked iteration agrees with unranking
  range.for_each(5, 9, [&, rank = std::uint64_t{5}](const Permutation& p) mutable {
    CHECK(p == range.at(rank));
    ++rank;
  });
}

TEST_CASE("pattern specs resolve families to layers") {
  const PatternSpec t23 = PatternSpec::two_beta(3);
  CHECK(t23.perm() == Permutation({1, 2, 5, 4, 3}));
  CHECK(t23.layers() == std::vector<int>{1, 1, 3});
  CHECK(t23.is_two_beta_shape());
  CHECK(t23.length() == 5);

  const PatternSpec aa = PatternSpec::alpha_alpha(2);
  CHECK(aa.perm() == Permutation({1, 2, 4, 3}));
  CHECK(aa.is_two_beta_shape());  // (1,1,2)

  const PatternSpec ab = PatternSpec::general(3, 2);
  CHECK(ab.perm() == Permutation({1, 2, 3, 5, 4}));
  CHECK_FALSE(ab.is_two_beta_shape());

  const PatternSpec expl = PatternSpec::explicit_pattern(Permutation({2, 3, 1}));
  CHECK_FALSE(expl.is_layered());
  CHECK_THROWS_AS(expl.layers(), std::domain_error);

  CHECK_THROWS_AS(PatternSpec::alpha_alpha(1), std::invalid_argument);
  CHECK_THROWS_AS(PatternSpec::two_beta(1), std::invalid_argument);
}
