#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gptri/word.hpp"

namespace gptri {

/// A positional numeration system together with the language of its
/// normal (greedy) representations:
///
///   base(k)      U(n) = k^n,      language L_k = {1..k-1}{0..k-1}* | e
///   fibonacci()  U: 1,2,3,5,8,... language L_F = binary, no factor 11
///   mbonacci(m)  U(n) = 2^n for n < m, then the sum of the previous m
///                terms; language = binary words avoiding 1^m
///
/// All operations are pure; instances are immutable after construction
/// and safe to share across threads.
class NumerationSystem {
 public:
  enum class Kind { kBase, kFibonacci, kMBonacci };

  static NumerationSystem base(unsigned k);
  static NumerationSystem fibonacci();
  static NumerationSystem mbonacci(unsigned m);

  Kind kind() const { return kind_; }
  /// k for base(k), m for mbonacci(m), 2 for fibonacci().
  unsigned param() const { return param_; }
  unsigned alphabet_size() const { return kind_ == Kind::kBase ? param_ : 2; }
  std::string name() const;

  /// U(i). Throws std::overflow_error past the 64-bit horizon.
  std::uint64_t scale(std::size_t i) const;
  /// Number of scale terms representable in 64 bits.
  std::size_t scale_terms() const { return scale_.size(); }

  /// Greedy expansion of n; rep(0) is the empty word.
  Word rep(std::uint64_t n) const;

  /// Sum of digit(j) * U(j). Leading zeroes are allowed; the word need
  /// not be a normal representation. Throws std::invalid_argument on a
  /// digit outside the system's alphabet.
  std::uint64_t val(const Word& w) const;
  std::uint64_t val(std::string_view ascii_digits) const;

  /// Membership in the language of normal representations.
  bool in_language(const Word& w) const;
  bool in_language(std::string_view ascii_digits) const;

  /// First `count` language words in radix order; entry i equals rep(i).
  std::vector<Word> enumerate(std::size_t count) const;

  /// Incremental membership for words grown left to right, as used by
  /// the subword-trie construction. The start state only admits
  /// nonzero first digits; for the recurrent systems the state tracks
  /// the current run of ones.
  struct LangState {
    bool at_start = true;
    unsigned trailing_ones = 0;
  };
  LangState lang_start() const { return {}; }
  bool lang_accepts(LangState s, unsigned digit) const;
  LangState lang_advance(LangState s, unsigned digit) const;
  /// Number of distinct reachable states, for DP table sizing.
  std::size_t lang_state_count() const;
  std::size_t lang_state_index(LangState s) const;

  friend bool operator==(const NumerationSystem& a, const NumerationSystem& b) {
    return a.kind_ == b.kind_ && a.param_ == b.param_;
  }

 private:
  NumerationSystem(Kind kind, unsigned param);

  Kind kind_;
  unsigned param_;
  std::vector<std::uint64_t> scale_;  // all U(i) that fit in 64 bits
};

}  // namespace gptri
