#include "gptri/numeration.hpp"

#include <algorithm>
#include <stdexcept>

#include "gptri/checked.hpp"

namespace gptri {

NumerationSystem::NumerationSystem(Kind kind, unsigned param)
    : kind_(kind), param_(param) {
  // Precompute every scale term that fits in 64 bits. The table is
  // short (at most 93 entries for Fibonacci) and makes the instance
  // immutable afterwards.
  scale_.push_back(1);
  for (;;) {
    std::uint64_t next;
    std::size_t n = scale_.size();
    if (kind_ == Kind::kBase) {
      if (__builtin_mul_overflow(scale_.back(), static_cast<std::uint64_t>(param_), &next)) break;
    } else {
      if (n < param_) {
        if (__builtin_mul_overflow(scale_.back(), std::uint64_t{2}, &next)) break;
      } else {
        next = 0;
        bool overflow = false;
        for (std::size_t j = n - param_; j < n; ++j) {
          if (__builtin_add_overflow(next, scale_[j], &next)) {
            overflow = true;
            break;
          }
        }
        if (overflow) break;
      }
    }
    scale_.push_back(next);
  }
}

NumerationSystem NumerationSystem::base(unsigned k) {
  if (k < 2 || k > 10) throw std::invalid_argument("base must be between 2 and 10");
  return NumerationSystem(Kind::kBase, k);
}

NumerationSystem NumerationSystem::fibonacci() {
  return NumerationSystem(Kind::kFibonacci, 2);
}

NumerationSystem NumerationSystem::mbonacci(unsigned m) {
  if (m < 3) throw std::invalid_argument("mbonacci order must be at least 3");
  if (m > 8) throw std::invalid_argument("mbonacci order larger than 8 is not supported");
  return NumerationSystem(Kind::kMBonacci, m);
}

std::string NumerationSystem::name() const {
  switch (kind_) {
    case Kind::kBase:
      return "base" + std::to_string(param_);
    case Kind::kFibonacci:
      return "fibonacci";
    case Kind::kMBonacci:
      return param_ == 3 ? "tribonacci" : "mbonacci" + std::to_string(param_);
  }
  return {};
}

std::uint64_t NumerationSystem::scale(std::size_t i) const {
  if (i >= scale_.size()) throw std::overflow_error("scale term exceeds 64 bits");
  return scale_[i];
}

Word NumerationSystem::rep(std::uint64_t n) const {
  Word w(alphabet_size());
  if (n == 0) return w;
  std::size_t top = 0;
  while (top + 1 < scale_.size() && scale_[top + 1] <= n) ++top;
  std::uint64_t rem = n;
  for (std::size_t j = top + 1; j-- > 0;) {
    unsigned d = static_cast<unsigned>(rem / scale_[j]);
    rem -= d * scale_[j];
    w.push_back(d);
  }
  return w;
}

std::uint64_t NumerationSystem::val(const Word& w) const {
  return val(w.str());
}

std::uint64_t NumerationSystem::val(std::string_view digits) const {
  const unsigned k = alphabet_size();
  std::uint64_t total = 0;
  const std::size_t len = digits.size();
  for (std::size_t i = 0; i < len; ++i) {
    char c = digits[i];
    if (c < '0' || static_cast<unsigned>(c - '0') >= k) {
      throw std::invalid_argument("digit out of range for numeration system");
    }
    std::uint64_t d = static_cast<std::uint64_t>(c - '0');
    if (d == 0) continue;
    std::size_t pos = len - 1 - i;
    total = checked_add(total, checked_mul(d, scale(pos)));
  }
  return total;
}

bool NumerationSystem::in_language(const Word& w) const {
  if (w.alphabet_size() > alphabet_size()) return false;
  return in_language(w.str());
}

bool NumerationSystem::in_language(std::string_view digits) const {
  const unsigned k = alphabet_size();
  LangState s = lang_start();
  for (char c : digits) {
    if (c < '0' || static_cast<unsigned>(c - '0') >= k) return false;
    unsigned d = static_cast<unsigned>(c - '0');
    if (!lang_accepts(s, d)) return false;
    s = lang_advance(s, d);
  }
  return true;
}

std::vector<Word> NumerationSystem::enumerate(std::size_t count) const {
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(rep(i));
  return out;
}

bool NumerationSystem::lang_accepts(LangState s, unsigned digit) const {
  if (digit >= alphabet_size()) return false;
  if (s.at_start) return digit != 0;
  if (kind_ == Kind::kBase) return true;
  // Recurrent systems forbid runs of param_ ones.
  return digit == 0 || s.trailing_ones < param_ - 1;
}

NumerationSystem::LangState NumerationSystem::lang_advance(LangState s, unsigned digit) const {
  LangState t;
  t.at_start = false;
  t.trailing_ones = digit == 1 ? s.trailing_ones + 1 : 0;
  return t;
}

std::size_t NumerationSystem::lang_state_count() const {
  if (kind_ == Kind::kBase) return 2;  // start, inside
  return 1 + param_;                   // start, trailing_ones in [0, param_-1]
}

std::size_t NumerationSystem::lang_state_index(LangState s) const {
  if (s.at_start) return 0;
  if (kind_ == Kind::kBase) return 1;
  return 1 + s.trailing_ones;
}

}  // namespace gptri
