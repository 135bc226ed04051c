#include "gptri/subtrie.hpp"

#include <stdexcept>
#include <string>

#include "doctest.h"
#include "gptri/wordbinom.hpp"
#include "test_helpers.hpp"

using namespace gptri;

namespace {

Word bin(const std::string& s) { return Word::from_string(s, 2); }

std::uint64_t naive_count(const NumerationSystem& system, const std::string& w) {
  std::uint64_t count = 0;
  for (const auto& sub : testing::naive_distinct_subwords(w)) {
    if (system.in_language(sub)) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("explicit trie construction") {
  const auto base2 = NumerationSystem::base(2);
  const auto fib = NumerationSystem::fibonacci();

  CHECK(build_trie(bin("11001110"), base2).node_count() == 39);
  CHECK(build_trie(bin("1"), base2).node_count() == 2);
  CHECK(build_trie(Word(2), base2).node_count() == 1);

  SUBCASE("restricted Fibonacci trie matches the closed form") {
    const Word w = bin("101000100");
    CHECK(build_trie(w, fib).node_count() == 32);
    CHECK(fibonacci_support_formula(w) == 32);
  }

  SUBCASE("children are ordered and labels are the subwords") {
    const SubwordTrie trie = build_trie(bin("110"), base2);
    const auto* root = &trie.root();
    CHECK(root->label.empty());
    CHECK(root->child(0) == nullptr);
    REQUIRE(root->child(1) != nullptr);
    CHECK(root->child(1)->label.str() == "1");
    REQUIRE(trie.find(bin("11")) != nullptr);
    CHECK(trie.find(bin("111")) == nullptr);
  }

  SUBCASE("the cap refuses oversized words") {
    const Word big = Word::from_string(std::string(25, '1'), 2);
    CHECK_THROWS_AS((void)build_trie(big, base2), std::length_error);
  }

  SUBCASE("words outside the language are rejected") {
    CHECK_THROWS_AS((void)build_trie(bin("011"), base2), std::domain_error);
    CHECK_THROWS_AS((void)build_trie(bin("110"), fib), std::domain_error);
  }
}

TEST_CASE("block factorization") {
  const auto blocks = block_factorization(bin("11001110"));
  REQUIRE(blocks.size() == 4);
  CHECK(blocks[0].letter == 1);
  CHECK(blocks[0].run == 2);
  CHECK(blocks[1].letter == 0);
  CHECK(blocks[1].run == 2);
  CHECK(blocks[2].letter == 1);
  CHECK(blocks[2].run == 3);
  CHECK(blocks[3].letter == 0);
  CHECK(blocks[3].run == 1);
  CHECK(block_factorization(Word(2)).empty());
}

TEST_CASE("alternation subtree counts drive the fast node count") {
  const auto base2 = NumerationSystem::base(2);
  const auto base3 = NumerationSystem::base(3);

  SUBCASE("worked binary example") {
    const auto t = block_subtree_counts(bin("11001110"), base2);
    REQUIRE(t.size() == 4);
    CHECK(t[3] == 1);
    CHECK(t[2] == 6);
    CHECK(t[1] == 15);
    CHECK(t[0] == 38);
    CHECK(count_nodes_fast(bin("11001110"), base2) == 39);
  }

  SUBCASE("ternary example against the brute-force oracle") {
    const Word w = Word::from_string("22000112", 3);
    CHECK(count_nodes_fast(w, base3) == 52);
    CHECK(count_nodes_fast(w, base3) == build_trie(w, base3).node_count());
  }

  SUBCASE("a one followed by zeroes gives a linear trie") {
    for (std::size_t j = 0; j <= 20; ++j) {
      const Word w = Word::from_string("1" + std::string(j, '0'), 2);
      REQUIRE(count_nodes_fast(w, base2) == j + 2);
    }
  }

  SUBCASE("every short language word agrees with the explicit trie") {
    for (const auto& s : testing::all_strings(3, 7)) {
      if (!s.empty() && s[0] == '0') continue;
      const Word w = Word::from_string(s, 3);
      REQUIRE(count_nodes_fast(w, base3) == build_trie(w, base3).node_count());
    }
  }
}

TEST_CASE("unrestricted subword totals") {
  CHECK(count_all_subwords(bin("11001110")) == 54);
  CHECK(count_all_subwords(Word(2)) == 1);
  CHECK(count_all_subwords(bin("10")) == 4);
  CHECK_THROWS_AS((void)count_all_subwords(bin("01")), std::domain_error);

  SUBCASE("bitmask cross-check") {
    for (const auto& s : testing::all_strings(2, 10)) {
      if (s.empty() || s[0] != '1') continue;
      REQUIRE(count_all_subwords(Word::from_string(s, 2)) ==
              testing::naive_distinct_subwords(s).size());
    }
  }
}

TEST_CASE("Fibonacci closed form") {
  const auto fib = NumerationSystem::fibonacci();
  CHECK(fibonacci_support_formula(bin("10001")) == 8);
  CHECK(fibonacci_support_formula(bin("10101")) == 8);
  CHECK(fibonacci_support_formula(bin("1")) == 2);
  CHECK_THROWS_AS((void)fibonacci_support_formula(Word(2)), std::domain_error);
  CHECK_THROWS_AS((void)fibonacci_support_formula(bin("110")), std::domain_error);

  SUBCASE("equals the brute-force count on every short word") {
    for (const auto& s : testing::all_strings(2, 12)) {
      if (s.empty() || s[0] != '1' || s.find("11") != std::string::npos) continue;
      REQUIRE(fibonacci_support_formula(Word::from_string(s, 2)) == naive_count(fib, s));
    }
  }
}

TEST_CASE("automaton count agrees with the bitmask oracle on every system") {
  const NumerationSystem systems[] = {
      NumerationSystem::base(2), NumerationSystem::base(3),
      NumerationSystem::fibonacci(), NumerationSystem::mbonacci(3)};
  for (const auto& system : systems) {
    CAPTURE(system.name());
    for (const auto& s : testing::all_strings(system.alphabet_size(), 7)) {
      if (!system.in_language(s)) continue;
      const Word w = Word::from_string(s, system.alphabet_size());
      REQUIRE(detail::automaton_subword_count(w, system) == naive_count(system, s));
      REQUIRE(count_nodes_fast(w, system) == naive_count(system, s));
    }
  }
}

TEST_CASE("trie levels count subwords by length") {
  const auto base2 = NumerationSystem::base(2);
  const SubwordTrie trie = build_trie(bin("11001110"), base2);
  const auto levels = trie.level_counts();
  std::size_t total = 0;
  for (std::size_t c : levels) total += c;
  CHECK(total == trie.node_count());
  CHECK(levels[0] == 1);
  CHECK(levels[1] == 1);  // only the subword 1 at depth 1 in this language
}

TEST_CASE("dot output walks the trie deterministically") {
  const auto base2 = NumerationSystem::base(2);
  const std::string dot = trie_to_dot(build_trie(bin("10"), base2));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"e\" -> \"1\"") != std::string::npos);
  CHECK(dot.find("\"1\" -> \"10\" [label=\"0\", color=gray]") != std::string::npos);
  CHECK(trie_to_dot(build_trie(bin("10"), base2)) == dot);
}
