#include "gptri/word.hpp"

#include <stdexcept>

namespace gptri {

void Word::check_alphabet(unsigned k) {
  if (k < 2 || k > 10) {
    throw std::invalid_argument("alphabet size must be between 2 and 10");
  }
}

Word Word::from_string(std::string_view digits, unsigned alphabet_size) {
  Word w(alphabet_size);
  w.digits_.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || static_cast<unsigned>(c - '0') >= alphabet_size) {
      throw std::invalid_argument("digit out of range for alphabet");
    }
    w.digits_.push_back(c);
  }
  return w;
}

Word& Word::push_back(unsigned d) {
  if (d >= alphabet_) throw std::invalid_argument("digit out of range for alphabet");
  digits_.push_back(static_cast<char>('0' + d));
  return *this;
}

Word Word::with_appended(unsigned d) const {
  Word w = *this;
  w.push_back(d);
  return w;
}

Word Word::prefix(std::size_t length) const {
  if (length > digits_.size()) throw std::out_of_range("prefix longer than word");
  Word w(alphabet_);
  w.digits_.assign(digits_, 0, length);
  return w;
}

Word operator+(const Word& u, const Word& v) {
  if (u.alphabet_ != v.alphabet_) {
    throw std::invalid_argument("concatenation requires a common alphabet");
  }
  Word w = u;
  w.digits_ += v.digits_;
  return w;
}

bool radix_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.str() < b.str();
}

}  // namespace gptri
