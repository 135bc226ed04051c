#include "gptri/verify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "gptri/regularity.hpp"
#include "gptri/sequences.hpp"
#include "gptri/subtrie.hpp"
#include "gptri/wordbinom.hpp"

namespace gptri::verify {

namespace seq = gptri::sequences;
namespace reg = gptri::regularity;

bool SuiteResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

namespace {

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  // References returned here stay valid while later checks open: the
  // deque never relocates existing elements.
  CheckResult& begin(std::string name) {
    checks_.emplace_back();
    checks_.back().name = std::move(name);
    return checks_.back();
  }

  SuiteResult finish() {
    SuiteResult result;
    result.suite = name_;
    result.checks.assign(checks_.begin(), checks_.end());
    return result;
  }

 private:
  std::string name_;
  std::deque<CheckResult> checks_;
};

void expect(CheckResult& check, bool ok, const std::function<std::string()>& detail) {
  ++check.instances;
  if (ok || !check.passed) return;
  check.passed = false;
  check.detail = detail();
}

void expect_eq(CheckResult& check, std::uint64_t got, std::uint64_t want,
               std::uint64_t index) {
  expect(check, got == want, [&] {
    return "n=" + std::to_string(index) + ": got " + std::to_string(got) +
           ", expected " + std::to_string(want);
  });
}

/// All language words of length at most max_len, radix order.
std::vector<Word> language_words(const NumerationSystem& system, std::size_t max_len) {
  std::vector<Word> out{Word(system.alphabet_size())};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (unsigned d = 0; d < system.alphabet_size(); ++d) {
        const Word& w = out[i];
        NumerationSystem::LangState s = system.lang_start();
        bool ok = true;
        for (std::size_t j = 0; j < w.size() && ok; ++j) {
          ok = system.lang_accepts(s, w.digit(j));
          s = system.lang_advance(s, w.digit(j));
        }
        if (ok && system.lang_accepts(s, d)) out.push_back(w.with_appended(d));
      }
    }
    begin = end;
  }
  return out;
}

void check_roundtrip(Suite& suite, const NumerationSystem& system, std::uint64_t limit) {
  auto& rt = suite.begin("rep/val round trip");
  auto& mono = suite.begin("rep preserves radix order");
  Word prev = system.rep(0);
  for (std::uint64_t n = 0; n < limit; ++n) {
    const Word w = system.rep(n);
    expect_eq(rt, system.val(w), n, n);
    expect(mono, n == 0 || radix_less(prev, w),
           [&] { return "n=" + std::to_string(n) + ": rep not radix-increasing"; });
    prev = w;
  }
  auto& lang = suite.begin("rep lands in the language");
  for (std::uint64_t n = 0; n < limit; ++n) {
    expect(lang, system.in_language(system.rep(n)),
           [&] { return "n=" + std::to_string(n); });
  }
  auto& en = suite.begin("enumerate agrees with rep");
  const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(limit, 4096));
  const std::vector<Word> words = system.enumerate(count);
  for (std::size_t i = 0; i < words.size(); ++i) {
    expect(en, words[i] == system.rep(i), [&] { return "i=" + std::to_string(i); });
  }
}

void check_trie_equivalence(Suite& suite, const NumerationSystem& system,
                            std::size_t max_len) {
  auto& check = suite.begin("fast count = trie count = deletion closure (len <= " +
                            std::to_string(max_len) + ")");
  for (const Word& w : language_words(system, max_len)) {
    const std::uint64_t fast = count_nodes_fast(w, system);
    const std::uint64_t built = build_trie(w, system).node_count();
    const std::uint64_t closure = support_count_of_word(system, w);
    expect(check, fast == built && built == closure, [&] {
      return "w=" + w.display() + ": fast=" + std::to_string(fast) +
             " trie=" + std::to_string(built) + " closure=" + std::to_string(closure);
    });
  }
}

void check_level_counts(Suite& suite, const NumerationSystem& system,
                        std::size_t max_len) {
  auto& check = suite.begin("trie level counts match per-length support");
  for (const Word& w : language_words(system, max_len)) {
    const SubwordTrie trie = build_trie(w, system);
    const std::vector<std::size_t> levels = trie.level_counts();
    // Independent per-length count from the deletion closure.
    std::vector<std::size_t> expected(w.size() + 1, 0);
    for (const Word& v : language_words(system, w.size())) {
      if (occurs_as_subword(w, v)) ++expected[v.size()];
    }
    while (!expected.empty() && expected.back() == 0) expected.pop_back();
    expect(check, levels == expected, [&] { return "w=" + w.display(); });
  }
}

void binary_suite(Suite& suite, std::uint64_t limit) {
  const NumerationSystem sys = NumerationSystem::base(2);
  check_roundtrip(suite, sys, std::min<std::uint64_t>(limit, 1000000));

  auto& four = suite.begin("S: recurrence = matrix = SB(2n+1) = Farey denominator");
  for (std::uint64_t n = 0; n < limit; ++n) {
    const std::uint64_t a = seq::s_recurrence(n);
    const std::uint64_t b = seq::s_matrix(n);
    const std::uint64_t c = seq::stern_brocot(2 * n + 1);
    const std::uint64_t d = seq::farey_denominator(n);
    expect(four, a == b && b == c && c == d, [&] {
      return "n=" + std::to_string(n) + ": rec=" + std::to_string(a) + " mat=" +
             std::to_string(b) + " sb=" + std::to_string(c) + " farey=" + std::to_string(d);
    });
  }

  auto& brute = suite.begin("S: brute-force support oracle agrees");
  for (std::uint64_t n = 0; n < std::min<std::uint64_t>(limit, 4096); ++n) {
    expect_eq(brute, support_count_oracle(sys, n), seq::s_recurrence(n), n);
  }

  auto& rel = suite.begin("S doubling relations");
  for (std::uint64_t n = 0; n < limit; ++n) {
    const auto s_n = static_cast<std::int64_t>(seq::s_recurrence(n));
    const auto s_2n = static_cast<std::int64_t>(seq::s_recurrence(2 * n));
    expect(rel,
           static_cast<std::int64_t>(seq::s_recurrence(2 * n + 1)) == 3 * s_n - s_2n &&
               static_cast<std::int64_t>(seq::s_recurrence(4 * n)) == 2 * s_2n - s_n &&
               static_cast<std::int64_t>(seq::s_recurrence(4 * n + 2)) == 4 * s_n - s_2n,
           [&] { return "n=" + std::to_string(n); });
  }

  auto& pal = suite.begin("S interval palindrome");
  for (unsigned l = 1; l <= 14 && (std::uint64_t{1} << l) <= limit; ++l) {
    const std::uint64_t p = std::uint64_t{1} << l;
    for (std::uint64_t r = p / 2; r < p; ++r) {
      expect_eq(pal, seq::s_recurrence(p + r), seq::s_recurrence(2 * p - r - 1), p + r);
    }
  }

  auto& words3 = suite.begin("three-term word identities (trie counts)");
  std::vector<Word> all_u{Word(2)};
  for (std::size_t i = 0; i < all_u.size(); ++i) {
    if (all_u[i].size() >= 10) continue;
    for (unsigned d = 0; d < 2; ++d) all_u.push_back(all_u[i].with_appended(d));
  }
  const Word one = Word::from_string("1", 2);
  const Word one0 = Word::from_string("10", 2);
  const Word one00 = Word::from_string("100", 2);
  const Word one1 = Word::from_string("11", 2);
  const Word one01 = Word::from_string("101", 2);
  for (const Word& u : all_u) {
    const std::uint64_t c1u = build_trie(one + u, sys).node_count();
    const std::uint64_t c10u = build_trie(one0 + u, sys).node_count();
    const std::uint64_t c100u = build_trie(one00 + u, sys).node_count();
    const std::uint64_t c11u = build_trie(one1 + u, sys).node_count();
    const std::uint64_t c101u = build_trie(one01 + u, sys).node_count();
    expect(words3, c100u == 2 * c10u - c1u && c101u == c1u + c11u,
           [&] { return "u=" + u.display(); });
  }

  auto& tri = suite.begin("triangle row structure");
  for (std::uint64_t i = 0; i < std::min<std::uint64_t>(limit, 128); ++i) {
    const TriangleRow row = triangle_row(sys, i, static_cast<std::size_t>(i) + 4);
    bool ok = row.entries[0] == 1 && row.entries[i] == 1;
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < row.entries.size(); ++j) {
      ok = ok && row.entries[j] == 0;
    }
    ok = ok && row.support_count == seq::s_recurrence(i);
    expect(tri, ok, [&] { return "row " + std::to_string(i); });
  }

  auto& sums = suite.begin("row-support block sums are powers of 3");
  std::uint64_t target = 1;
  for (unsigned l = 0; l <= 10 && (std::uint64_t{1} << l) <= limit; ++l) {
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << l); ++i) {
      total += seq::s_recurrence(i);
    }
    expect_eq(sums, total, target, l);
    target *= 3;
  }

  auto& farey_sums = suite.begin("Farey level sums are 2*3^(k-1)");
  std::uint64_t level_target = 2;
  for (unsigned k = 1; k <= 10 && (std::uint64_t{1} << k) <= limit; ++k) {
    std::uint64_t total = 0;
    for (std::uint64_t n = std::uint64_t{1} << (k - 1); n < (std::uint64_t{1} << k); ++n) {
      total += seq::farey_denominator(n);
    }
    expect_eq(farey_sums, total, level_target, k);
    level_target *= 3;
  }

  check_trie_equivalence(suite, sys, limit >= 8192 ? 14 : 11);
  check_level_counts(suite, sys, 9);

  // Alternation-subtree structure of the binary trie: off-path children
  // along a block start copies of the subtree rooted one alternation
  // later, and the nodes 1^j inside the first block carry copies of
  // T_1 (none when the word has no zero at all).
  auto& iso = suite.begin("alternation subtree isomorphism");
  for (const Word& w : language_words(sys, 12)) {
    if (w.empty()) continue;
    const SubwordTrie trie = build_trie(w, sys);
    const std::vector<Block> blocks = block_factorization(w);
    const std::size_t m = blocks.size();
    auto block_prefix = [&](std::size_t count) {
      Word label(2);
      for (std::size_t bi = 0; bi < count; ++bi) {
        for (std::size_t c = 0; c < blocks[bi].run; ++c) label.push_back(blocks[bi].letter);
      }
      return label;
    };
    // T_l is rooted at the first-l-blocks prefix extended by the letter
    // that breaks the run: 1 when l is even, 0 when l is odd.
    auto subtree_root = [&](std::size_t l) {
      Word label = block_prefix(l);
      label.push_back(l % 2 == 0 ? 1 : 0);
      return label;
    };
    bool ok = true;
    // Blocks 2..M-1, both parities: walking block l+1 (1-based), the
    // off-path child of every node is a copy of T_{l+1}.
    for (std::size_t l = 1; ok && l + 1 <= m - 1; ++l) {
      const unsigned letter = blocks[l].letter;
      const unsigned off = 1 - letter;
      const SubwordTrie::Node* pattern = trie.find(subtree_root(l + 1));
      Word x = block_prefix(l);
      for (std::size_t j = 0; ok && j < blocks[l].run; ++j) {
        const SubwordTrie::Node* node = trie.find(x);
        const SubwordTrie::Node* branch = node ? node->child(off) : nullptr;
        ok = node && node->child(letter) && branch && pattern &&
             same_shape(*branch, *pattern);
        x.push_back(letter);
      }
    }
    // First block: nodes 1^j for 0 < j < n_1 carry a copy of T_1.
    if (ok && blocks[0].run > 1) {
      const SubwordTrie::Node* pattern = m >= 2 ? trie.find(subtree_root(1)) : nullptr;
      Word x = Word::from_string("1", 2);
      for (std::size_t j = 1; ok && j < blocks[0].run; ++j) {
        const SubwordTrie::Node* node = trie.find(x);
        ok = node != nullptr && node->child(1) != nullptr;
        const SubwordTrie::Node* branch = node ? node->child(0) : nullptr;
        if (m >= 2) {
          ok = ok && branch && pattern && same_shape(*branch, *pattern);
        } else {
          ok = ok && branch == nullptr;
        }
        x.push_back(1);
      }
    }
    expect(iso, ok, [&] { return "w=" + w.display(); });
  }
}

void fibonacci_suite(Suite& suite, std::uint64_t limit) {
  const NumerationSystem fib = NumerationSystem::fibonacci();
  check_roundtrip(suite, fib, std::min<std::uint64_t>(limit, 1000000));

  auto& no11 = suite.begin("greedy expansions avoid 11");
  for (std::uint64_t n = 0; n < std::min<std::uint64_t>(limit, 1000000); ++n) {
    expect(no11, fib.in_language(fib.rep(n)), [&] { return "n=" + std::to_string(n); });
  }

  auto& three = suite.begin("SF: recurrence = matrix = closed form");
  for (std::uint64_t n = 0; n < limit; ++n) {
    const std::uint64_t a = seq::sf_recurrence(n);
    const std::uint64_t b = seq::sf_matrix(n);
    const std::uint64_t c = seq::sf_closed_form(n);
    expect(three, a == b && b == c, [&] {
      return "n=" + std::to_string(n) + ": rec=" + std::to_string(a) +
             " mat=" + std::to_string(b) + " closed=" + std::to_string(c);
    });
  }

  auto& brute = suite.begin("SF: brute-force support oracle agrees");
  for (std::uint64_t n = 0; n < std::min<std::uint64_t>(limit, 377); ++n) {
    expect_eq(brute, support_count_oracle(fib, n), seq::sf_recurrence(n), n);
  }

  auto& ker = suite.begin("SF kernel-suffix relations");
  const Word q0 = Word::from_string("0", 2);
  const Word q00 = Word::from_string("00", 2);
  const Word q01 = Word::from_string("01", 2);
  const Word q010 = Word::from_string("010", 2);
  for (std::uint64_t n = 0; n < std::min<std::uint64_t>(limit, 10000); ++n) {
    const auto sf = [](std::uint64_t m) { return seq::sf_recurrence(m); };
    const std::int64_t base = static_cast<std::int64_t>(sf(n));
    const std::int64_t at0 = static_cast<std::int64_t>(sf(reg::kernel_index(fib, q0, n)));
    const std::int64_t at00 = static_cast<std::int64_t>(sf(reg::kernel_index(fib, q00, n)));
    const std::int64_t at01 = static_cast<std::int64_t>(sf(reg::kernel_index(fib, q01, n)));
    const std::int64_t at010 =
        static_cast<std::int64_t>(sf(reg::kernel_index(fib, q010, n)));
    expect(ker, at00 == 2 * at0 - base && at01 == 2 * base && at010 == 3 * base,
           [&] { return "n=" + std::to_string(n); });
  }

  auto& closed = suite.begin("closed form = deletion closure (len <= 14)");
  for (const Word& w : language_words(fib, 14)) {
    if (w.empty()) continue;
    expect(closed, fibonacci_support_formula(w) == support_count_of_word(fib, w),
           [&] { return "w=" + w.display(); });
  }

  auto& mat_id = suite.begin("mu(0)^n mu(01) collapses to the affine column");
  {
    const LinRep rep = fibonacci_support_rep();
    Mat2 power;  // identity
    for (std::int64_t n = 0; n <= 64; ++n) {
      const Mat2 product = power * rep.block_matrix[1];
      expect(mat_id,
             product == Mat2{n + 2, 0, n + 3, 0},
             [&] { return "n=" + std::to_string(n); });
      power = power * rep.block_matrix[0];
    }
  }

  auto& floor_check = suite.begin("SF(F(l)) = l + 2 and is a strict interval minimum");
  for (std::size_t l = 0; l <= 25; ++l) {
    expect_eq(floor_check, seq::sf_recurrence(fib.scale(l)), l + 2, l);
  }
  for (std::size_t l = 3; l <= 18; ++l) {
    const std::uint64_t base = fib.scale(l);
    const std::uint64_t floor_value = seq::sf_recurrence(base);
    for (std::uint64_t r = 1; r < fib.scale(l - 1); ++r) {
      expect(floor_check, seq::sf_recurrence(base + r) > floor_value,
             [&] { return "l=" + std::to_string(l) + " r=" + std::to_string(r); });
    }
  }

  auto& last = suite.begin("last occurrences sit at Fibonacci indices");
  const auto occurrences = seq::last_occurrence_positions(seq::SeqId::SF, 18);
  for (unsigned i = 5; i <= 18; ++i) {
    const auto& occ = occurrences[i - 1];
    expect(last,
           occ.certified && occ.position.has_value() && *occ.position == fib.scale(i - 2),
           [&] { return "i=" + std::to_string(i); });
  }

  auto& ext = suite.begin("suffix extension law of the kernel maps");
  {
    const auto report = reg::check_suffix_extension(std::min<std::uint64_t>(limit, 50));
    expect(ext, report.passed && report.tribonacci_failure_confirmed,
           [&] { return report.counterexample; });
    ext.instances = report.instances_checked;
  }

  auto& rank = suite.begin("kernel rank stabilizes at 2");
  {
    const auto report = reg::detect_regularity(
        fib, [](std::uint64_t n) { return seq::sf_recurrence(n); }, 4, 256);
    expect(rank, report.stabilized && report.rank == 2, [&] {
      return "rank=" + std::to_string(report.rank) +
             (report.stabilized ? "" : " (not stabilized)");
    });
  }

  auto& shape = suite.begin("restricted trie structure");
  for (const Word& w : language_words(fib, 12)) {
    if (w.empty()) continue;
    const SubwordTrie trie = build_trie(w, fib);
    bool ok = trie.node_count() == fibonacci_support_formula(w);
    // The root has only the 1-child; a node ending in 1 never has a
    // 1-child.
    ok = ok && trie.root().child(0) == nullptr;
    std::vector<const SubwordTrie::Node*> stack{&trie.root()};
    while (ok && !stack.empty()) {
      const SubwordTrie::Node* node = stack.back();
      stack.pop_back();
      if (!node->label.empty() && node->label.digit(node->label.size() - 1) == 1) {
        ok = node->child(1) == nullptr;
      }
      for (const auto& child : node->children) {
        if (child) stack.push_back(child.get());
      }
    }
    expect(shape, ok, [&] { return "w=" + w.display(); });
  }

  check_trie_equivalence(suite, fib, 14);
}

void base3_suite(Suite& suite, std::uint64_t limit) {
  const NumerationSystem sys = NumerationSystem::base(3);
  check_roundtrip(suite, sys, std::min<std::uint64_t>(limit, 1000000));

  check_trie_equivalence(suite, sys, 9);
  check_level_counts(suite, sys, 7);

  auto& twofast = suite.begin("block recurrence agrees with automaton count");
  for (std::uint64_t n = 0; n < std::min<std::uint64_t>(limit, 10000); ++n) {
    const Word w = sys.rep(n);
    expect_eq(twofast, count_nodes_fast(w, sys),
              gptri::detail::automaton_subword_count(w, sys), n);
  }

  auto& conj = suite.begin("base-3 relations validate against the oracle");
  {
    const auto report = seq::check_s3_conjectures(std::min<std::uint64_t>(limit, 729));
    for (const auto& check : report.checks) {
      expect(conj, check.passed,
             [&] { return check.name + ": " + check.counterexample; });
      conj.instances += check.instances;
    }
  }
}

void tribonacci_suite(Suite& suite, std::uint64_t limit) {
  const NumerationSystem sys = NumerationSystem::mbonacci(3);
  check_roundtrip(suite, sys, std::min<std::uint64_t>(limit, 1000000));

  auto& no111 = suite.begin("greedy expansions avoid 111");
  for (std::uint64_t n = 0; n < std::min<std::uint64_t>(limit, 1000000); ++n) {
    expect(no111, sys.in_language(sys.rep(n)), [&] { return "n=" + std::to_string(n); });
  }

  auto& oracle = suite.begin("ST: automaton count = trie count = deletion closure");
  for (std::uint64_t n = 0; n < std::min<std::uint64_t>(limit, 1024); ++n) {
    const Word w = sys.rep(n);
    const std::uint64_t fast = seq::st_oracle(n);
    const std::uint64_t built = build_trie(w, sys).node_count();
    const std::uint64_t closure = support_count_oracle(sys, n);
    expect(oracle, fast == built && built == closure,
           [&] { return "n=" + std::to_string(n); });
  }

  auto& partial = suite.begin("partial interval relation over scanned last occurrences");
  {
    const auto occurrences =
        seq::last_occurrence_positions(seq::SeqId::ST, 10, std::max<std::uint64_t>(limit, 1500));
    std::vector<std::uint64_t> positions;
    bool found_all = true;
    for (const auto& occ : occurrences) {
      if (!occ.position.has_value()) {
        found_all = false;
        break;
      }
      positions.push_back(*occ.position);
    }
    expect(partial, found_all, [] { return std::string("scan window too small"); });
    if (found_all) {
      const auto report = seq::check_st_partial_relation(positions, 5, 10);
      for (const auto& check : report.checks) {
        expect(partial, check.passed,
               [&] { return check.name + ": " + check.counterexample; });
        partial.instances += check.instances;
      }
    }
  }
}

}  // namespace

SuiteResult run_suite(std::string_view suite, std::uint64_t limit) {
  if (limit == 0) throw std::invalid_argument("limit must be positive");
  Suite s{std::string(suite)};
  if (suite == "binary") {
    binary_suite(s, limit);
  } else if (suite == "fibonacci") {
    fibonacci_suite(s, limit);
  } else if (suite == "base3") {
    base3_suite(s, limit);
  } else if (suite == "tribonacci") {
    tribonacci_suite(s, limit);
  } else {
    throw std::invalid_argument("unknown suite: " + std::string(suite));
  }
  return s.finish();
}

std::vector<std::string> suite_names() {
  return {"binary", "fibonacci", "base3", "tribonacci"};
}

}  // namespace gptri::verify
