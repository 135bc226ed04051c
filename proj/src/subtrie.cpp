#include "gptri/subtrie.hpp"

#include <algorithm>
#include <stdexcept>

#include "gptri/checked.hpp"

namespace gptri {

namespace {

// next_at(p, a) = smallest position >= p where letter a occurs in w,
// or |w| when absent: the subsequence automaton of w. Each distinct
// subword corresponds to exactly one leftmost-embedding path.
struct NextOccurrence {
  std::size_t len;
  unsigned alphabet;
  std::vector<std::size_t> table;  // (len + 1) * alphabet

  explicit NextOccurrence(const Word& w)
      : len(w.size()), alphabet(w.alphabet_size()), table((len + 1) * alphabet, len) {
    for (std::size_t p = len; p-- > 0;) {
      for (unsigned a = 0; a < alphabet; ++a) at(p, a) = at(p + 1, a);
      at(p, w.digit(p)) = p;
    }
  }

  std::size_t& at(std::size_t p, unsigned a) { return table[p * alphabet + a]; }
  std::size_t at(std::size_t p, unsigned a) const { return table[p * alphabet + a]; }
};

std::unique_ptr<SubwordTrie::Node> build_node(const Word& label, std::size_t pos,
                                              NumerationSystem::LangState state,
                                              const NextOccurrence& next,
                                              const NumerationSystem& system,
                                              std::size_t& node_count) {
  auto node = std::make_unique<SubwordTrie::Node>();
  node->label = label;
  node->children.resize(next.alphabet);
  ++node_count;
  for (unsigned a = 0; a < next.alphabet; ++a) {
    if (!system.lang_accepts(state, a)) continue;
    std::size_t hit = next.at(pos, a);
    if (hit >= next.len) continue;
    node->children[a] = build_node(label.with_appended(a), hit + 1,
                                   system.lang_advance(state, a), next, system,
                                   node_count);
  }
  return node;
}

}  // namespace

SubwordTrie build_trie(const Word& w, const NumerationSystem& system,
                       std::size_t max_word_length) {
  if (!system.in_language(w)) {
    throw std::domain_error("source word is not in the numeration language");
  }
  if (w.size() > max_word_length) {
    throw std::length_error(
        "source word exceeds the explicit-build cap; use count_nodes_fast");
  }
  NextOccurrence next(w);
  SubwordTrie trie;
  trie.root_ = build_node(Word(w.alphabet_size()), 0, system.lang_start(), next,
                          system, trie.node_count_);
  return trie;
}

const SubwordTrie::Node* SubwordTrie::find(const Word& label) const {
  const Node* node = root_.get();
  for (std::size_t i = 0; i < label.size() && node; ++i) {
    node = node->child(label.digit(i));
  }
  return node;
}

std::vector<std::size_t> SubwordTrie::level_counts() const {
  std::vector<std::size_t> counts;
  std::vector<const Node*> level{root_.get()};
  while (!level.empty()) {
    counts.push_back(level.size());
    std::vector<const Node*> next;
    for (const Node* node : level) {
      for (const auto& child : node->children) {
        if (child) next.push_back(child.get());
      }
    }
    level = std::move(next);
  }
  return counts;
}

bool same_shape(const SubwordTrie::Node& a, const SubwordTrie::Node& b) {
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    const bool ha = a.children[i] != nullptr, hb = b.children[i] != nullptr;
    if (ha != hb) return false;
    if (ha && !same_shape(*a.children[i], *b.children[i])) return false;
  }
  return true;
}

std::vector<Block> block_factorization(const Word& w) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < w.size(); ++i) {
    unsigned d = w.digit(i);
    if (!blocks.empty() && blocks.back().letter == d) {
      ++blocks.back().run;
    } else {
      blocks.push_back({d, 1});
    }
  }
  return blocks;
}

std::vector<std::uint64_t> block_subtree_counts(const Word& w,
                                                const NumerationSystem& system) {
  if (system.kind() != NumerationSystem::Kind::kBase) {
    throw std::domain_error("block subtree counts apply to base-k languages");
  }
  if (!system.in_language(w)) {
    throw std::domain_error("source word is not in the numeration language");
  }
  const std::vector<Block> blocks = block_factorization(w);
  const std::size_t M = blocks.size();
  if (M == 0) return {};

  // first_after(b, l): smallest 1-based block index > l whose letter is
  // b, or 0 when b does not occur again.
  auto first_after = [&](unsigned b, std::size_t l) -> std::size_t {
    for (std::size_t idx = l; idx < M; ++idx) {
      if (blocks[idx].letter == b) return idx + 1;
    }
    return 0;
  };

  std::vector<std::uint64_t> t(M + 1, 0);  // t[M] is the empty tree
  t[M - 1] = blocks[M - 1].run;
  for (std::size_t i = M - 1; i-- > 0;) {
    // Letters occurring after block i+1 branch off each node of the
    // block; the block's own letter continues into the next copy.
    std::uint64_t branch = 0;
    for (unsigned b = 0; b < system.alphabet_size(); ++b) {
      if (b == blocks[i].letter) continue;
      std::size_t j = first_after(b, i + 1);
      if (j != 0) branch = checked_add(branch, t[j - 1]);
    }
    std::size_t own = first_after(blocks[i].letter, i + 1);
    std::uint64_t follow = own != 0 ? t[own - 1] : 0;
    t[i] = checked_add(
        checked_mul(static_cast<std::uint64_t>(blocks[i].run), checked_add(branch, 1)),
        follow);
  }
  t.pop_back();
  return t;
}

namespace detail {

std::uint64_t automaton_subword_count(const Word& w, const NumerationSystem& system) {
  const NextOccurrence next(w);
  const std::size_t states = system.lang_state_count();
  const std::size_t len = w.size();

  // f[p][s] = number of subwords readable from position p with language
  // state s, including the empty continuation. Positions only move
  // forward, so a single descending pass suffices.
  std::vector<std::uint64_t> f((len + 1) * states, 0);
  auto cell = [&](std::size_t p, std::size_t s) -> std::uint64_t& {
    return f[p * states + s];
  };

  // States in index order: 0 is the start state, the rest differ only
  // in the trailing-ones counter (unused for base-k).
  std::vector<NumerationSystem::LangState> by_index(states);
  by_index[0] = system.lang_start();
  for (std::size_t si = 1; si < states; ++si) {
    by_index[si] = {false, static_cast<unsigned>(si - 1)};
  }

  for (std::size_t p = len + 1; p-- > 0;) {
    for (std::size_t si = 0; si < states; ++si) {
      const NumerationSystem::LangState s = by_index[si];
      std::uint64_t total = 1;
      for (unsigned a = 0; a < w.alphabet_size() && p < len; ++a) {
        if (!system.lang_accepts(s, a)) continue;
        std::size_t hit = next.at(p, a);
        if (hit >= len) continue;
        total = checked_add(
            total, cell(hit + 1, system.lang_state_index(system.lang_advance(s, a))));
      }
      cell(p, si) = total;
    }
  }
  return cell(0, system.lang_state_index(system.lang_start()));
}

}  // namespace detail

std::uint64_t count_nodes_fast(const Word& w, const NumerationSystem& system) {
  if (!system.in_language(w)) {
    throw std::domain_error("source word is not in the numeration language");
  }
  switch (system.kind()) {
    case NumerationSystem::Kind::kBase: {
      if (w.empty()) return 1;
      const std::vector<std::uint64_t> t = block_subtree_counts(w, system);
      std::uint64_t total = checked_add(std::uint64_t{1}, t[0]);
      // For k > 2 the root also branches to every later letter other
      // than 0 and the leading letter.
      const std::vector<Block> blocks = block_factorization(w);
      for (unsigned b = 1; b < system.alphabet_size(); ++b) {
        if (b == blocks[0].letter) continue;
        for (std::size_t idx = 1; idx < blocks.size(); ++idx) {
          if (blocks[idx].letter == b) {
            total = checked_add(total, t[idx]);
            break;
          }
        }
      }
      return total;
    }
    case NumerationSystem::Kind::kFibonacci:
      return w.empty() ? 1 : fibonacci_support_formula(w);
    case NumerationSystem::Kind::kMBonacci:
      return detail::automaton_subword_count(w, system);
  }
  throw std::logic_error("unreachable");
}

std::uint64_t count_all_subwords(const Word& w) {
  if (w.alphabet_size() != 2) {
    throw std::domain_error("subword totals are defined for binary words");
  }
  if (w.empty()) return 1;
  if (w.digit(0) != 1) {
    throw std::domain_error("binary source word must start with 1");
  }
  static const NumerationSystem base2 = NumerationSystem::base(2);
  const std::vector<std::uint64_t> t = block_subtree_counts(w, base2);
  std::uint64_t total = checked_add(std::uint64_t{1}, t[0]);
  // Adding the 0-child of the root, whose subtree equals T_1, lifts the
  // language restriction.
  if (t.size() > 1) total = checked_add(total, t[1]);
  return total;
}

std::uint64_t fibonacci_support_formula(const Word& w) {
  static const NumerationSystem fib = NumerationSystem::fibonacci();
  if (w.empty() || !fib.in_language(w)) {
    throw std::domain_error("word must be a nonempty Fibonacci representation");
  }
  // Zero-run lengths after each 1, left to right. The run after the
  // last 1 contributes the +2 factor, every earlier run a +1 factor.
  std::vector<std::uint64_t> runs;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.digit(i) == 1) {
      runs.push_back(0);
    } else {
      ++runs.back();
    }
  }
  std::uint64_t product = checked_add(runs.back(), 2);
  for (std::size_t j = 0; j + 1 < runs.size(); ++j) {
    product = checked_mul(product, checked_add(runs[j], 1));
  }
  return product;
}

std::string trie_to_dot(const SubwordTrie& trie) {
  std::string out = "digraph subwords {\n  node [shape=box, fontname=\"monospace\"];\n";
  std::vector<const SubwordTrie::Node*> stack{&trie.root()};
  while (!stack.empty()) {
    const SubwordTrie::Node* node = stack.back();
    stack.pop_back();
    out += "  \"" + node->label.display() + "\";\n";
    for (std::size_t a = node->children.size(); a-- > 0;) {
      const SubwordTrie::Node* child = node->children[a].get();
      if (!child) continue;
      out += "  \"" + node->label.display() + "\" -> \"" + child->label.display() +
             "\" [label=\"" + std::to_string(a) + "\"";
      if (a == 0) out += ", color=gray";
      out += "];\n";
      stack.push_back(child);
    }
  }
  out += "}\n";
  return out;
}

}  // namespace gptri
