#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gptri/linrep.hpp"

namespace gptri::sequences {

// Row-support counting sequences of the generalized Pascal triangles:
//   S   over the binary language        SB  Stern-Brocot
//   D   Farey-tree denominators         S3  over the base-3 language
//   SF  over the Fibonacci language     ST  over the Tribonacci language
//
// Every evaluator is pure; the recurrence evaluators memoize in
// thread-local tables, so concurrent sweeps are safe.

/// S(n) by the interval recurrence on n = 2^l + r.
std::uint64_t s_recurrence(std::uint64_t n);

/// S(n) as a product of 2x2 digit matrices along rep_2(n); O(log n).
std::uint64_t s_matrix(std::uint64_t n);

/// Number of matrix factors s_matrix(n) multiplies (the digit count).
std::size_t s_matrix_step_count(std::uint64_t n);

/// SB(0)=0, SB(1)=1, SB(2n)=SB(n), SB(2n+1)=SB(n)+SB(n+1).
std::uint64_t stern_brocot(std::uint64_t n);

/// Denominator reached in the mediant (Farey) tree from 0/1 along the
/// branch path rep_2(n), 0 = left and 1 = right.
std::uint64_t farey_denominator(std::uint64_t n);

/// S_F(n) by the interval recurrence on n = F(l) + r.
std::uint64_t sf_recurrence(std::uint64_t n);

/// S_F(n) as a product of {0, 01}-block matrices along 0 rep_F(n).
std::uint64_t sf_matrix(std::uint64_t n);
std::size_t sf_matrix_step_count(std::uint64_t n);

/// S_F(n) via the closed-form run-length product.
std::uint64_t sf_closed_form(std::uint64_t n);

/// S_3(n) and S_T(n) by fast subword-trie node counting on rep(n).
std::uint64_t s3_oracle(std::uint64_t n);
std::uint64_t st_oracle(std::uint64_t n);

enum class SeqId { S, SB, FareyD, S3, SF, ST };
enum class Strategy { Oracle, Recurrence, Matrix, Identity };

/// Which evaluation strategies exist per sequence. The base-3 and
/// Tribonacci recurrences are validated, never trusted, so only the
/// trie-count oracle is available for S3 and ST.
bool strategy_available(SeqId id, Strategy strategy);
std::uint64_t evaluate(SeqId id, Strategy strategy, std::uint64_t n);

std::optional<SeqId> parse_seq_id(const std::string& name);
std::optional<Strategy> parse_strategy(const std::string& name);
std::string to_string(SeqId id);
std::string to_string(Strategy strategy);

/// Outcome of validating one candidate relation over a sweep.
struct RelationCheck {
  std::string name;
  std::uint64_t instances = 0;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

struct ConjectureReport {
  std::vector<RelationCheck> checks;
  bool all_passed() const;
};

/// Sweeps the candidate base-3 relations (the two first-digit interval
/// recurrences, the block palindrome, and the seven 3n/9n identities)
/// against s3_oracle for every instance whose indices are below
/// `limit` (the 3n/9n identities run for all n < limit). The result is
/// a validation report; nothing here feeds back into an evaluator.
ConjectureReport check_s3_conjectures(std::uint64_t limit);

/// Validates S_T(n_i + r) = S_T(n_{i-1} + r) + S_T(r) for
/// 0 <= r < n_i - n_{i-1} and i in [i_min, i_max], where
/// last_positions[i-1] holds n_i (the last position where value i
/// occurs in S_T).
ConjectureReport check_st_partial_relation(
    const std::vector<std::uint64_t>& last_positions, unsigned i_min,
    unsigned i_max);

/// Last position where the value i occurs in a sequence.
struct LastOccurrence {
  std::uint64_t value = 0;
  std::optional<std::uint64_t> position;  // empty: not found in the window
  bool certified = false;  // the bound provably excludes later occurrences
};

/// For SF, the scan bound is sound: values beyond the first Fibonacci
/// index F(l) with S_F(F(l)) > i all exceed i, so results are
/// certified. For ST no such bound is known; the scan covers
/// [0, window) and results are flagged heuristic (and inconclusive
/// when the value never appears in the window).
std::vector<LastOccurrence> last_occurrence_positions(SeqId id, std::size_t count,
                                                      std::uint64_t window = 0);

}  // namespace gptri::sequences
