// Acceptance suite: cross-validates the artifact against the published
// reference values, one criterion per check, one [PASS]/[FAIL] line
// each. Exit code 0 iff every criterion holds.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gptri/regularity.hpp"
#include "gptri/sequences.hpp"
#include "gptri/subtrie.hpp"
#include "gptri/wordbinom.hpp"

using namespace gptri;
namespace seq = gptri::sequences;
namespace reg = gptri::regularity;

namespace {

using Failure = std::optional<std::string>;

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;  // 0: untimed
  std::function<Failure()> check;
};

std::string fail(const std::string& message) { return message; }

Word bin(const std::string& s) { return Word::from_string(s, 2); }

// ---------------------------------------------------------------------------
// Reference data.

const int kBinaryBlock[8][8] = {
    {1, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0, 0, 0},
    {1, 2, 0, 1, 0, 0, 0, 0}, {1, 1, 2, 0, 1, 0, 0, 0}, {1, 2, 1, 1, 0, 1, 0, 0},
    {1, 2, 2, 1, 0, 0, 1, 0}, {1, 3, 0, 3, 0, 0, 0, 1}};
const std::uint64_t kBinarySupport[8] = {1, 2, 3, 3, 4, 5, 5, 4};

const int kFibBlock[9][9] = {
    {1, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 1, 0, 0, 0, 0, 0, 0}, {1, 1, 2, 1, 0, 0, 0, 0, 0},
    {1, 2, 1, 0, 1, 0, 0, 0, 0}, {1, 1, 3, 3, 0, 1, 0, 0, 0},
    {1, 2, 2, 1, 2, 0, 1, 0, 0}, {1, 2, 3, 1, 1, 0, 0, 1, 0},
    {1, 1, 4, 6, 0, 4, 0, 0, 1}};
const std::uint64_t kFibSupport[9] = {1, 2, 3, 4, 4, 5, 6, 6, 6};

const std::vector<std::uint64_t> kSPrefix = {
    1, 2, 3, 3, 4, 5, 5, 4, 5, 7, 8, 7, 7, 8, 7, 5, 6, 9, 11, 10, 11, 13, 12, 9, 9,
    12, 13, 11, 10};
const std::vector<std::uint64_t> kSfPrefix = {
    1, 2, 3, 4, 4, 5, 6, 6, 6, 8, 9, 8, 8, 7, 10, 12, 12, 12, 10, 12, 12, 8, 12, 15,
    16, 16, 15};
const std::vector<std::uint64_t> kS3Prefix = {
    1, 2, 2, 3, 3, 4, 3, 4, 3, 4, 5, 6, 5, 4, 6, 7, 7, 6, 4, 6, 5, 7, 6, 7, 5, 6, 4,
    5, 7, 8, 8, 7, 10};
const std::vector<std::uint64_t> kStPrefix = {
    1,  2,  3,  3,  4,  5,  5,  5,  7,  8,  6,  7,  7,  6,  9,  11, 9,
    11, 12, 10, 9,  11, 11, 9,  7,  11, 14, 12, 15, 17, 15, 14, 18, 19,
    15, 14, 14, 11, 15, 17, 15, 15, 17, 15, 8,  13, 17, 15, 19, 22};
const std::vector<std::uint64_t> kStLastPositions = {0,  1,  3,  4,   7,   13,
                                                     24, 44, 81, 149, 274, 504};

// ---------------------------------------------------------------------------
// Criteria.

Failure table_p2() {
  const auto base2 = NumerationSystem::base(2);
  for (std::uint64_t i = 0; i < 8; ++i) {
    const TriangleRow row = triangle_row(base2, i, 8);
    for (std::size_t j = 0; j < 8; ++j) {
      if (row.entries[j] != kBinaryBlock[i][j]) {
        return fail("entry (" + std::to_string(i) + "," + std::to_string(j) +
                    ") differs");
      }
    }
    if (row.support_count != kBinarySupport[i]) {
      return fail("support of row " + std::to_string(i) + " differs");
    }
  }
  return {};
}

Failure table_pf() {
  const auto fib = NumerationSystem::fibonacci();
  for (std::uint64_t i = 0; i < 9; ++i) {
    const TriangleRow row = triangle_row(fib, i, 9);
    for (std::size_t j = 0; j < 9; ++j) {
      if (row.entries[j] != kFibBlock[i][j]) {
        return fail("entry (" + std::to_string(i) + "," + std::to_string(j) +
                    ") differs");
      }
    }
    if (row.support_count != kFibSupport[i]) {
      return fail("support of row " + std::to_string(i) + " differs");
    }
  }
  return {};
}

Failure worked_example() {
  const auto base2 = NumerationSystem::base(2);
  const Word w = bin("11001110");
  if (base2.val(w) != 206) return fail("val(11001110) != 206");

  const auto t = block_subtree_counts(w, base2);
  const std::uint64_t expected[] = {38, 15, 6, 1};
  if (t.size() != 4) return fail("expected four alternation subtrees");
  for (std::size_t j = 0; j < 4; ++j) {
    if (t[j] != expected[j]) return fail("#T_" + std::to_string(j) + " differs");
  }
  if (count_nodes_fast(w, base2) != 39) return fail("node count != 39");
  if (seq::s_recurrence(206) != 39) return fail("S(206) != 39 by recurrence");
  if (support_count_oracle(base2, 206) != 39) return fail("S(206) != 39 by oracle");
  if (count_all_subwords(w) != 54) return fail("total subword count != 54");
  return {};
}

Failure sequence_prefixes() {
  for (std::size_t n = 0; n < kSPrefix.size(); ++n) {
    if (seq::s_recurrence(n) != kSPrefix[n]) return fail("S(" + std::to_string(n) + ")");
  }
  for (std::size_t n = 0; n < kSfPrefix.size(); ++n) {
    if (seq::sf_recurrence(n) != kSfPrefix[n]) return fail("SF(" + std::to_string(n) + ")");
  }
  for (std::size_t n = 0; n < kS3Prefix.size(); ++n) {
    if (seq::s3_oracle(n) != kS3Prefix[n]) return fail("S3(" + std::to_string(n) + ")");
  }
  for (std::size_t n = 0; n < kStPrefix.size(); ++n) {
    if (seq::st_oracle(n) != kStPrefix[n]) return fail("ST(" + std::to_string(n) + ")");
  }
  return {};
}

Failure evaluator_agreement() {
  const auto base2 = NumerationSystem::base(2);
  for (std::uint64_t n = 0; n < (std::uint64_t{1} << 16); ++n) {
    const std::uint64_t a = seq::s_recurrence(n);
    if (seq::s_matrix(n) != a) return fail("matrix differs at n=" + std::to_string(n));
    if (seq::stern_brocot(2 * n + 1) != a) {
      return fail("SB(2n+1) differs at n=" + std::to_string(n));
    }
    if (seq::farey_denominator(n) != a) {
      return fail("Farey denominator differs at n=" + std::to_string(n));
    }
  }
  for (std::uint64_t n = 0; n < (std::uint64_t{1} << 12); ++n) {
    if (support_count_oracle(base2, n) != seq::s_recurrence(n)) {
      return fail("brute force differs at n=" + std::to_string(n));
    }
  }
  return {};
}

Failure kernel_relations_sweep() {
  for (std::uint64_t n = 0; n < 100000; ++n) {
    const auto s_n = static_cast<std::int64_t>(seq::s_recurrence(n));
    const auto s_2n = static_cast<std::int64_t>(seq::s_recurrence(2 * n));
    if (static_cast<std::int64_t>(seq::s_recurrence(2 * n + 1)) != 3 * s_n - s_2n) {
      return fail("S(2n+1) relation fails at n=" + std::to_string(n));
    }
    if (static_cast<std::int64_t>(seq::s_recurrence(4 * n)) != 2 * s_2n - s_n) {
      return fail("S(4n) relation fails at n=" + std::to_string(n));
    }
    if (static_cast<std::int64_t>(seq::s_recurrence(4 * n + 2)) != 4 * s_n - s_2n) {
      return fail("S(4n+2) relation fails at n=" + std::to_string(n));
    }
  }
  const auto fib = NumerationSystem::fibonacci();
  const Word q0 = bin("0"), q00 = bin("00"), q01 = bin("01"), q010 = bin("010");
  for (std::uint64_t n = 0; n < 10000; ++n) {
    const auto base = static_cast<std::int64_t>(seq::sf_recurrence(n));
    const auto at0 = static_cast<std::int64_t>(
        seq::sf_recurrence(reg::kernel_index(fib, q0, n)));
    const auto at00 = static_cast<std::int64_t>(
        seq::sf_recurrence(reg::kernel_index(fib, q00, n)));
    const auto at01 = static_cast<std::int64_t>(
        seq::sf_recurrence(reg::kernel_index(fib, q01, n)));
    const auto at010 = static_cast<std::int64_t>(
        seq::sf_recurrence(reg::kernel_index(fib, q010, n)));
    if (at00 != 2 * at0 - base) return fail("SF(i00) relation fails at n=" + std::to_string(n));
    if (at01 != 2 * base) return fail("SF(i01) relation fails at n=" + std::to_string(n));
    if (at010 != 3 * base) return fail("SF(i010) relation fails at n=" + std::to_string(n));
  }
  return {};
}

Failure sum_identities() {
  std::uint64_t target = 1;
  for (unsigned l = 0; l <= 10; ++l) {
    std::uint64_t total = 0;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << l); ++i) {
      total += seq::s_recurrence(i);
    }
    if (total != target) return fail("block sum differs at l=" + std::to_string(l));
    target *= 3;
  }
  std::uint64_t level_target = 2;
  for (unsigned k = 1; k <= 10; ++k) {
    std::uint64_t total = 0;
    for (std::uint64_t n = std::uint64_t{1} << (k - 1); n < (std::uint64_t{1} << k); ++n) {
      total += seq::farey_denominator(n);
    }
    if (total != level_target) return fail("level sum differs at k=" + std::to_string(k));
    level_target *= 3;
  }
  return {};
}

Failure closed_form_vs_brute_force() {
  const auto fib = NumerationSystem::fibonacci();
  std::vector<Word> words{bin("1")};
  std::uint64_t checked = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Word w = words[i];  // push_back below may relocate the vector
    if (fibonacci_support_formula(w) != support_count_of_word(fib, w)) {
      return fail("mismatch at w=" + w.display());
    }
    ++checked;
    if (w.size() < 14) {
      words.push_back(w.with_appended(0));
      if (w.digit(w.size() - 1) == 0) words.push_back(w.with_appended(1));
    }
  }
  if (checked < 980) return fail("sweep unexpectedly small");
  return {};
}

Failure last_occurrences_and_floor() {
  const auto fib = NumerationSystem::fibonacci();
  const auto occurrences = seq::last_occurrence_positions(seq::SeqId::SF, 18);
  for (unsigned i = 5; i <= 18; ++i) {
    const auto& occ = occurrences[i - 1];
    if (!occ.certified || !occ.position.has_value() ||
        *occ.position != fib.scale(i - 2)) {
      return fail("n_" + std::to_string(i) + " != F(" + std::to_string(i - 2) + ")");
    }
  }
  for (std::size_t l = 0; l <= 25; ++l) {
    if (seq::sf_recurrence(fib.scale(l)) != l + 2) {
      return fail("SF(F(" + std::to_string(l) + ")) != " + std::to_string(l + 2));
    }
  }
  return {};
}

Failure conjecture_validation() {
  const auto s3 = seq::check_s3_conjectures(729);
  for (const auto& check : s3.checks) {
    if (!check.passed) return fail(check.name + ": " + check.counterexample);
    if (check.instances == 0) return fail(check.name + ": vacuous");
  }
  const auto st = seq::check_st_partial_relation(kStLastPositions, 5, 10);
  for (const auto& check : st.checks) {
    if (!check.passed) return fail(check.name + ": " + check.counterexample);
    if (check.instances == 0) return fail(check.name + ": vacuous");
  }
  return {};
}

Failure jsr_bracket() {
  const LinRep rep = binary_support_rep();
  const auto [lower, upper] = reg::jsr_bounds(rep.block_matrix, 10);
  std::ostringstream detail;
  detail << std::fixed << std::setprecision(4) << "lower=" << lower
         << " upper=" << upper;
  if (!(lower >= 1.60)) return fail(detail.str() + " (lower < 1.60)");
  if (!(upper <= 1.75)) return fail(detail.str() + " (upper > 1.75)");
  if (!(lower <= upper)) return fail(detail.str() + " (inverted bracket)");
  return {};
}

Failure stabilized_rank() {
  const auto base2 = NumerationSystem::base(2);
  const auto fib = NumerationSystem::fibonacci();

  const auto binary = reg::detect_regularity(
      base2, [](std::uint64_t n) { return seq::s_recurrence(n); }, 3, 256);
  if (!binary.stabilized || binary.rank != 2) {
    return fail("binary rank " + std::to_string(binary.rank) +
                (binary.stabilized ? "" : " (unstabilized)"));
  }
  auto expect_relation = [](const reg::RelationReport& report, const std::string& target,
                            std::vector<std::int64_t> coeffs) -> bool {
    for (const auto& rel : report.relations) {
      if (rel.target.display() == target) return rel.denom == 1 && rel.coeffs == coeffs;
    }
    return false;
  };
  if (!expect_relation(binary, "1", {3, -1})) return fail("relation for suffix 1");
  if (!expect_relation(binary, "00", {-1, 2})) return fail("relation for suffix 00");
  if (!expect_relation(binary, "10", {4, -1})) return fail("relation for suffix 10");

  const auto fibrep = reg::detect_regularity(
      fib, [](std::uint64_t n) { return seq::sf_recurrence(n); }, 4, 256);
  if (!fibrep.stabilized || fibrep.rank != 2) {
    return fail("Fibonacci rank " + std::to_string(fibrep.rank) +
                (fibrep.stabilized ? "" : " (unstabilized)"));
  }
  if (!expect_relation(fibrep, "00", {-1, 2})) return fail("relation for suffix 00 (F)");
  if (!expect_relation(fibrep, "01", {2, 0})) return fail("relation for suffix 01 (F)");
  if (!expect_relation(fibrep, "010", {3, 0})) return fail("relation for suffix 010 (F)");
  if (!expect_relation(fibrep, "1001", {6, 0})) return fail("relation for suffix 1001 (F)");
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "8x8 binary triangle block and its support column", 1.0, table_p2},
      {2, "9x9 Fibonacci triangle block and its support column", 1.0, table_pf},
      {3, "worked example 11001110: subtree counts, S(206), subword total", 0, worked_example},
      {4, "published prefixes of S, SF, S3, ST", 0, sequence_prefixes},
      {5, "evaluator agreement: four ways on [0,2^16), five on [0,2^12)", 60.0,
       evaluator_agreement},
      {6, "kernel relation sweeps for S (n<10^5) and SF (n<10^4)", 0,
       kernel_relations_sweep},
      {7, "power-of-3 block sums and Farey level sums", 0, sum_identities},
      {8, "closed form equals brute force on every Fibonacci word (len<=14)", 0,
       closed_form_vs_brute_force},
      {9, "last occurrences at F(i-2) and the SF growth floor", 0,
       last_occurrences_and_floor},
      {10, "base-3 and Tribonacci relation validation", 0, conjecture_validation},
      {11, "joint spectral radius bracket within [1.60, 1.75]", 30.0, jsr_bracket},
      {12, "stabilized kernel rank 2 with the published relations", 0, stabilized_rank},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Failure failure;
    try {
      failure = criterion.check();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!failure && criterion.time_limit_s > 0 && elapsed > criterion.time_limit_s) {
      failure = "time limit exceeded (" + std::to_string(elapsed) + " s > " +
                std::to_string(criterion.time_limit_s) + " s)";
    }
    std::ostringstream line;
    line << (failure ? "[FAIL]" : "[PASS]") << " criterion " << std::setw(2)
         << criterion.id << ": " << criterion.name << " (" << std::fixed
         << std::setprecision(2) << elapsed << " s)";
    if (failure) {
      line << " -- " << *failure;
      ++failures;
    }
    std::cout << line.str() << std::endl;
  }
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all 12 criteria passed" << std::endl;
  return 0;
}
