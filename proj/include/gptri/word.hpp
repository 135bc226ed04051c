#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace gptri {

/// A finite word over the digit alphabet {0, ..., k-1}, most
/// significant digit first. The empty word is valid and denotes zero
/// in every numeration system here. Digits are stored as ASCII
/// characters, which keeps short words allocation-free and makes
/// serialization the identity.
class Word {
 public:
  Word() = default;

  explicit Word(unsigned alphabet_size) : alphabet_(alphabet_size) {
    check_alphabet(alphabet_size);
  }

  /// Parses an ASCII digit string. Throws std::invalid_argument on a
  /// digit outside [0, alphabet_size).
  static Word from_string(std::string_view digits, unsigned alphabet_size);

  unsigned alphabet_size() const { return alphabet_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }

  /// Digit at position i, most significant first.
  unsigned digit(std::size_t i) const {
    return static_cast<unsigned>(digits_[i] - '0');
  }

  /// Appends a digit at the least significant end.
  Word& push_back(unsigned d);
  Word with_appended(unsigned d) const;
  Word prefix(std::size_t length) const;

  /// Concatenation u ++ v over a common alphabet.
  friend Word operator+(const Word& u, const Word& v);

  /// Raw ASCII digits; empty string for the empty word.
  const std::string& str() const { return digits_; }

  /// Human-readable form: "e" for the empty word, digits otherwise.
  std::string display() const { return digits_.empty() ? "e" : digits_; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  static void check_alphabet(unsigned k);

  std::string digits_;
  unsigned alphabet_ = 2;
};

/// Radix order: shorter words first, ties broken lexicographically.
bool radix_less(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const {
    return std::hash<std::string>{}(w.str());
  }
};

}  // namespace gptri
