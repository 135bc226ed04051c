#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gptri/numeration.hpp"
#include "gptri/word.hpp"

namespace gptri {

/// Trie of the distinct subwords of a source word restricted to the
/// language of a numeration system. Nodes are the subwords themselves
/// (the root is the empty word); the child of u under letter a is ua.
/// Children are kept in letter order, immutable once built.
class SubwordTrie {
 public:
  struct Node {
    Word label;
    std::vector<std::unique_ptr<Node>> children;  // indexed by letter

    const Node* child(unsigned letter) const {
      return letter < children.size() ? children[letter].get() : nullptr;
    }
  };

  const Node& root() const { return *root_; }
  std::size_t node_count() const { return node_count_; }

  /// Node with the given label, or nullptr.
  const Node* find(const Word& label) const;

  /// Number of nodes per depth; entry l counts the distinct subwords
  /// of length l in the restriction language.
  std::vector<std::size_t> level_counts() const;

 private:
  friend SubwordTrie build_trie(const Word&, const NumerationSystem&, std::size_t);
  std::unique_ptr<Node> root_;
  std::size_t node_count_ = 0;
};

/// Source words longer than this refuse to materialize (their subword
/// sets grow exponentially in the number of letter alternations).
inline constexpr std::size_t kExplicitBuildCap = 24;

/// Builds the trie of subwords of w lying in the language of `system`.
/// Throws std::length_error when |w| exceeds the cap; use
/// count_nodes_fast for long words. Throws std::domain_error when w is
/// not itself in the language.
SubwordTrie build_trie(const Word& w, const NumerationSystem& system,
                       std::size_t max_word_length = kExplicitBuildCap);

/// Shape equality ignoring labels: child letters and subtree shapes match.
bool same_shape(const SubwordTrie::Node& a, const SubwordTrie::Node& b);

/// Maximal-run factorization w = a_1^{n_1} ... a_M^{n_M} with adjacent
/// letters distinct and all runs nonempty.
struct Block {
  unsigned letter;
  std::size_t run;
};
std::vector<Block> block_factorization(const Word& w);

/// Node counts #T_0 .. #T_{M-1} of the alternation subtrees of the
/// subword trie over a base-k language, computed by the descending
/// block recurrence (no tree is materialized). T_j is rooted at the
/// first node that deviates from w after j blocks.
std::vector<std::uint64_t> block_subtree_counts(const Word& w,
                                                const NumerationSystem& system);

/// Node count of the subword trie, without materializing it.
///   base(k):     1 + #T_0 plus the extra root branches for k > 2
///   fibonacci:   the closed-form run-length product
///   mbonacci(m): exact distinct-subword DP over the word's
///                subsequence automaton
/// Requires w in the language (std::domain_error otherwise).
std::uint64_t count_nodes_fast(const Word& w, const NumerationSystem& system);

/// Distinct subwords of a binary word over {0,1} with no language
/// restriction: 1 + #T_0 + #T_1. Requires w empty or starting with 1.
std::uint64_t count_all_subwords(const Word& w);

/// Closed-form support count for nonempty w in the Fibonacci language,
/// written as 1 0^{n_k} 1 0^{n_{k-1}} ... 1 0^{n_1}:
///   (n_1 + 2) * prod_{j >= 2} (n_j + 1).
std::uint64_t fibonacci_support_formula(const Word& w);

/// Graphviz rendering; edges consuming letter 0 are drawn gray.
std::string trie_to_dot(const SubwordTrie& trie);

namespace detail {
/// Distinct subwords of w lying in the language, counted by walking the
/// product of w's subsequence automaton with the language's digit
/// automaton. Exact for every system; used as the fast path for
/// m-bonacci restrictions and as a cross-check elsewhere.
std::uint64_t automaton_subword_count(const Word& w, const NumerationSystem& system);
}  // namespace detail

}  // namespace gptri
