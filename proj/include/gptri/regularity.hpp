#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gptri/linrep.hpp"
#include "gptri/numeration.hpp"
#include "gptri/word.hpp"

namespace gptri::regularity {

using SequenceFn = std::function<std::uint64_t(std::uint64_t)>;

/// True iff no index has a padded representation ending with q. For
/// base-k systems every suffix is realizable; for Fibonacci exactly
/// the suffixes containing the factor 11 are empty.
bool kernel_is_empty(const NumerationSystem& system, const Word& q);

/// n-th smallest index whose representation, padded with leading
/// zeroes, ends with the digit suffix q.
///   base-k:    k^|q| * n + val(q)
///   fibonacci: obtained by appending q to the n-th representation
///              compatible with q's first digit
/// Throws std::domain_error for empty kernels and for m-bonacci
/// systems with m >= 3, where suffix extension is unsound.
std::uint64_t kernel_index(const NumerationSystem& system, const Word& q,
                           std::uint64_t n);

/// First `length` terms of n -> s(kernel_index(q, n)).
std::vector<std::uint64_t> kernel_subsequence(const NumerationSystem& system,
                                              const SequenceFn& s, const Word& q,
                                              std::size_t length);

/// denom * s_target(n) = sum_i coeffs[i] * s_generators[i](n),
/// verified exactly over the full horizon.
struct KernelRelation {
  Word target;
  std::vector<std::int64_t> coeffs;
  std::int64_t denom = 1;
};

struct RelationReport {
  std::string system;
  bool stabilized = false;
  std::size_t rank = 0;
  std::vector<Word> generators;
  std::vector<KernelRelation> relations;
  std::size_t truncation = 0;    // discovery horizon
  std::size_t confirmed_at = 0;  // re-verification horizon (4x)
};

/// Builds the matrix of truncated kernel subsequences for every suffix
/// up to max_suffix_len, extracts a generator basis greedily in radix
/// order, and expresses each remaining subsequence in that basis. All
/// linear algebra is exact (integer/rational). The report counts as
/// stabilized only when the rank agrees at truncations T and 2T and
/// every relation re-verifies at 4T.
RelationReport detect_regularity(const NumerationSystem& system, const SequenceFn& s,
                                 unsigned max_suffix_len, std::size_t trunc_len);

/// Checks the suffix-extension law of the Fibonacci kernel maps:
/// appending q to the n-th representation ending with p yields the
/// n-th representation ending with pq, for every p != e and q with pq
/// free of the factor 11, |pq| <= 4, n < limit. Also confirms the
/// containment i_pq(N) within i_q(N), and that the analogous law
/// already fails for the Tribonacci language on the witness pair
/// (p, q) = (1, 1) vs (1, 11).
struct SuffixExtensionReport {
  bool passed = false;
  std::uint64_t pairs_checked = 0;
  std::uint64_t instances_checked = 0;
  std::string counterexample;
  bool tribonacci_failure_confirmed = false;
};
SuffixExtensionReport check_suffix_extension(std::uint64_t limit);

/// Bounds on the joint spectral radius of a finite set of 2x2 integer
/// matrices from exhaustive products of length at most max_len:
///   lower: max over products P of rho(P)^(1/|P|)
///   upper: min over lengths of the worst product norm^(1/L), taking
///          the best of the infinity norm and a fixed family of
///          quadratic-form norms (each submultiplicative, so each
///          yields a valid bound; the family is fixed, which keeps the
///          bound monotone in max_len)
/// The only floating-point computation in the library lives here.
std::pair<double, double> jsr_bounds(const std::vector<Mat2>& matrices,
                                     unsigned max_len);

}  // namespace gptri::regularity
