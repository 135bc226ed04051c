#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "gptri/numeration.hpp"
#include "gptri/word.hpp"

namespace gptri {

/// Word binomial coefficients grow combinatorially with word length,
/// so rows are exact arbitrary-precision integers.
using BigNat = boost::multiprecision::cpp_int;

/// Number of occurrences of v as a scattered subword of u. Both words
/// must share an alphabet. binom(u, e) = 1; zero when |v| > |u|.
BigNat word_binomial(const Word& u, const Word& v);

/// True iff v occurs at least once as a scattered subword of u.
bool occurs_as_subword(const Word& u, const Word& v);

/// One row of a generalized Pascal triangle: entry j is the binomial
/// of rep(i) over rep(j). The triangle is lower-triangular in radix
/// order, so entries past column i are zero.
struct TriangleRow {
  std::uint64_t row_index = 0;
  std::vector<BigNat> entries;
  std::size_t support_count = 0;  // nonzero entries within the computed width
};

TriangleRow triangle_row(const NumerationSystem& system, std::uint64_t i,
                         std::size_t width);
/// Default width is row_index + 1, covering every possibly-nonzero column.
TriangleRow triangle_row(const NumerationSystem& system, std::uint64_t i);

/// Number of language words occurring as subwords of w. Enumerates the
/// distinct-subword set of w by iterated single-letter deletion and
/// intersects it with the language; it never scans the language
/// level by level.
std::uint64_t support_count_of_word(const NumerationSystem& system, const Word& w);

/// support_count_of_word on rep(n); the brute-force row-support oracle.
std::uint64_t support_count_oracle(const NumerationSystem& system, std::uint64_t n);

}  // namespace gptri
