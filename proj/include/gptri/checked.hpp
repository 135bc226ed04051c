#pragma once

#include <cstdint>
#include <stdexcept>

namespace gptri {

// Overflow-checked integer arithmetic. Sequence values and matrix
// entries must never wrap silently; on overflow we abort the
// computation with std::overflow_error instead.

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("unsigned 64-bit addition overflow");
  }
  return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("unsigned 64-bit multiplication overflow");
  }
  return r;
}

inline std::uint64_t checked_sub(std::uint64_t a, std::uint64_t b) {
  if (b > a) throw std::overflow_error("unsigned 64-bit subtraction underflow");
  return a - b;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("signed 64-bit addition overflow");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("signed 64-bit multiplication overflow");
  }
  return r;
}

}  // namespace gptri
