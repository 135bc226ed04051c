#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "gptri/checked.hpp"

namespace gptri {

/// 2x2 signed matrix with overflow-checked arithmetic.
struct Mat2 {
  std::int64_t a = 1, b = 0;
  std::int64_t c = 0, d = 1;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
            checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
            checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
            checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d))};
  }

  friend bool operator==(const Mat2&, const Mat2&) = default;

  std::int64_t trace() const { return checked_add(a, d); }
  std::int64_t det() const {
    return checked_add(checked_mul(a, d), -checked_mul(b, c));
  }
};

/// Linear representation of an integer sequence: one matrix per digit
/// block, an initial column vector and the (1 0) row selector. The
/// value along blocks b_1 ... b_m (least significant first) is
/// (1 0) mu(b_1) ... mu(b_m) V0.
struct LinRep {
  std::vector<Mat2> block_matrix;
  std::array<std::int64_t, 2> v0{1, 1};

  std::int64_t evaluate(std::span<const unsigned> blocks_lsb_first) const {
    // Fold the row vector through the product left to right.
    std::array<std::int64_t, 2> row{1, 0};
    for (unsigned id : blocks_lsb_first) {
      const Mat2& m = block_matrix[id];
      row = {checked_add(checked_mul(row[0], m.a), checked_mul(row[1], m.c)),
             checked_add(checked_mul(row[0], m.b), checked_mul(row[1], m.d))};
    }
    return checked_add(checked_mul(row[0], v0[0]), checked_mul(row[1], v0[1]));
  }
};

/// Digit matrices of the binary row-support representation
/// (block ids 0 and 1 are the binary digits).
inline LinRep binary_support_rep() {
  return {{Mat2{0, 1, -1, 2}, Mat2{3, -1, 4, -1}}, {1, 1}};
}

/// Block matrices of the Fibonacci row-support representation
/// (block id 0 is the digit block "0", block id 1 is "01").
inline LinRep fibonacci_support_rep() {
  return {{Mat2{0, 1, -1, 2}, Mat2{2, 0, 3, 0}}, {1, 1}};
}

}  // namespace gptri
