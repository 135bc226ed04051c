#include "gptri/wordbinom.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace gptri {

BigNat word_binomial(const Word& u, const Word& v) {
  if (u.alphabet_size() != v.alphabet_size()) {
    throw std::invalid_argument("word binomial requires a common alphabet");
  }
  const std::size_t n = u.size(), m = v.size();
  if (m > n) return 0;
  // dp[j] = number of embeddings of the length-j prefix of v into the
  // prefix of u scanned so far.
  std::vector<BigNat> dp(m + 1);
  dp[0] = 1;
  const std::string& us = u.str();
  const std::string& vs = v.str();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t upper = std::min(m, i + 1);
    for (std::size_t j = upper; j >= 1; --j) {
      if (us[i] == vs[j - 1]) dp[j] += dp[j - 1];
    }
  }
  return dp[m];
}

bool occurs_as_subword(const Word& u, const Word& v) {
  if (u.alphabet_size() != v.alphabet_size()) {
    throw std::invalid_argument("subword test requires a common alphabet");
  }
  const std::string& us = u.str();
  const std::string& vs = v.str();
  std::size_t j = 0;
  for (std::size_t i = 0; i < us.size() && j < vs.size(); ++i) {
    if (us[i] == vs[j]) ++j;
  }
  return j == vs.size();
}

TriangleRow triangle_row(const NumerationSystem& system, std::uint64_t i,
                         std::size_t width) {
  TriangleRow row;
  row.row_index = i;
  row.entries.reserve(width);
  const Word u = system.rep(i);
  for (std::size_t j = 0; j < width; ++j) {
    BigNat value = word_binomial(u, system.rep(j));
    if (value != 0) ++row.support_count;
    row.entries.push_back(std::move(value));
  }
  return row;
}

TriangleRow triangle_row(const NumerationSystem& system, std::uint64_t i) {
  return triangle_row(system, i, static_cast<std::size_t>(i) + 1);
}

std::uint64_t support_count_of_word(const NumerationSystem& system, const Word& w) {
  // Breadth-first deletion closure: every subword of w arises from w by
  // deleting letters one at a time, so iterating single deletions from
  // the current length level reaches exactly the distinct-subword set.
  std::unordered_set<std::string> seen;
  std::vector<std::string> level{w.str()};
  seen.insert(w.str());
  std::uint64_t count = 0;
  while (!level.empty()) {
    std::vector<std::string> next;
    for (const std::string& s : level) {
      if (system.in_language(s)) ++count;
      if (s.empty()) continue;
      std::string shorter(s.size() - 1, '0');
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        // Skip equal neighbours: deleting either of two equal adjacent
        // letters yields the same word.
        if (drop > 0 && s[drop] == s[drop - 1]) continue;
        shorter.assign(s);
        shorter.erase(drop, 1);
        if (seen.insert(shorter).second) next.push_back(shorter);
      }
    }
    level = std::move(next);
  }
  return count;
}

std::uint64_t support_count_oracle(const NumerationSystem& system, std::uint64_t n) {
  return support_count_of_word(system, system.rep(n));
}

}  // namespace gptri
