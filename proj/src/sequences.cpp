#include "gptri/sequences.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

#include "gptri/numeration.hpp"
#include "gptri/subtrie.hpp"
#include "gptri/wordbinom.hpp"

namespace gptri::sequences {

namespace {

const NumerationSystem& base2_system() {
  static const NumerationSystem system = NumerationSystem::base(2);
  return system;
}

const NumerationSystem& fib_system() {
  static const NumerationSystem system = NumerationSystem::fibonacci();
  return system;
}

const NumerationSystem& base3_system() {
  static const NumerationSystem system = NumerationSystem::base(3);
  return system;
}

const NumerationSystem& tribo_system() {
  static const NumerationSystem system = NumerationSystem::mbonacci(3);
  return system;
}

std::uint64_t pow2(unsigned l) { return std::uint64_t{1} << l; }

}  // namespace

std::uint64_t s_recurrence(std::uint64_t n) {
  thread_local std::unordered_map<std::uint64_t, std::uint64_t> memo;
  if (n < 2) return n + 1;
  if (auto it = memo.find(n); it != memo.end()) return it->second;

  const unsigned l = 63 - static_cast<unsigned>(std::countl_zero(n));
  const std::uint64_t r = n - pow2(l);
  std::uint64_t value;
  if (r < pow2(l - 1)) {
    value = checked_add(s_recurrence(pow2(l - 1) + r), s_recurrence(r));
  } else {
    value = s_recurrence(checked_sub(checked_mul(2, pow2(l)), r + 1));
  }
  memo.emplace(n, value);
  return value;
}

std::uint64_t s_matrix(std::uint64_t n) {
  const Word w = base2_system().rep(n);
  std::vector<unsigned> blocks(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    blocks[i] = w.digit(w.size() - 1 - i);  // least significant digit first
  }
  const std::int64_t value = binary_support_rep().evaluate(blocks);
  return static_cast<std::uint64_t>(value);
}

std::size_t s_matrix_step_count(std::uint64_t n) {
  return base2_system().rep(n).size();
}

std::uint64_t stern_brocot(std::uint64_t n) {
  thread_local std::unordered_map<std::uint64_t, std::uint64_t> memo;
  if (n < 2) return n;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::uint64_t value;
  if (n % 2 == 0) {
    value = stern_brocot(n / 2);
  } else {
    value = checked_add(stern_brocot(n / 2), stern_brocot(n / 2 + 1));
  }
  memo.emplace(n, value);
  return value;
}

std::uint64_t farey_denominator(std::uint64_t n) {
  if (n == 0) return 1;  // the path is empty, the node is 0/1
  const Word path = base2_system().rep(n);
  // Walk the mediant tree keeping the bounding neighbours: the leading
  // 1 moves from 0/1 to 1/2 between 0/1 and 1/1; each further digit
  // takes a mediant with the matching bound. Neighbour pairs stay
  // unimodular, so every fraction is automatically in lowest terms.
  std::uint64_t lo_num = 0, lo_den = 1;
  std::uint64_t hi_num = 1, hi_den = 1;
  std::uint64_t num = 1, den = 2;
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (path.digit(i) == 0) {
      hi_num = num;
      hi_den = den;
      num = checked_add(num, lo_num);
      den = checked_add(den, lo_den);
    } else {
      lo_num = num;
      lo_den = den;
      num = checked_add(num, hi_num);
      den = checked_add(den, hi_den);
    }
    assert(num * lo_den - lo_num * den == 1);
    assert(hi_num * den - num * hi_den == 1);
  }
  return den;
}

std::uint64_t sf_recurrence(std::uint64_t n) {
  thread_local std::unordered_map<std::uint64_t, std::uint64_t> memo;
  if (n < 2) return n + 1;
  if (auto it = memo.find(n); it != memo.end()) return it->second;

  const NumerationSystem& fib = fib_system();
  std::size_t l = 0;
  while (l + 1 < fib.scale_terms() && fib.scale(l + 1) <= n) ++l;
  const std::uint64_t r = n - fib.scale(l);
  const std::uint64_t cut = l >= 2 ? fib.scale(l - 2) : 1;  // F(-1) = 1
  std::uint64_t value;
  if (r < cut) {
    value = checked_add(sf_recurrence(fib.scale(l - 1) + r), sf_recurrence(r));
  } else {
    value = checked_mul(2, sf_recurrence(r));
  }
  memo.emplace(n, value);
  return value;
}

namespace {

// Factorizes 0 rep_F(n) into {0, 01} blocks, least significant first.
// Every 1 binds to the zero immediately before it.
std::vector<unsigned> fibonacci_blocks_lsb_first(std::uint64_t n) {
  std::string padded = "0" + fib_system().rep(n).str();
  std::vector<unsigned> blocks;
  for (std::size_t i = padded.size(); i-- > 0;) {
    if (padded[i] == '1') {
      blocks.push_back(1);
      --i;  // consume the preceding zero
    } else {
      blocks.push_back(0);
    }
  }
  return blocks;
}

}  // namespace

std::uint64_t sf_matrix(std::uint64_t n) {
  const std::int64_t value = fibonacci_support_rep().evaluate(fibonacci_blocks_lsb_first(n));
  return static_cast<std::uint64_t>(value);
}

std::size_t sf_matrix_step_count(std::uint64_t n) {
  return fibonacci_blocks_lsb_first(n).size();
}

std::uint64_t sf_closed_form(std::uint64_t n) {
  if (n == 0) return 1;
  return fibonacci_support_formula(fib_system().rep(n));
}

std::uint64_t s3_oracle(std::uint64_t n) {
  return count_nodes_fast(base3_system().rep(n), base3_system());
}

std::uint64_t st_oracle(std::uint64_t n) {
  return count_nodes_fast(tribo_system().rep(n), tribo_system());
}

bool strategy_available(SeqId id, Strategy strategy) {
  switch (id) {
    case SeqId::S:
      return true;
    case SeqId::SB:
    case SeqId::FareyD:
      return strategy == Strategy::Recurrence;
    case SeqId::S3:
    case SeqId::ST:
      return strategy == Strategy::Oracle;
    case SeqId::SF:
      return true;
  }
  return false;
}

std::uint64_t evaluate(SeqId id, Strategy strategy, std::uint64_t n) {
  if (!strategy_available(id, strategy)) {
    throw std::invalid_argument("strategy '" + to_string(strategy) +
                                "' is not available for sequence " + to_string(id));
  }
  switch (id) {
    case SeqId::S:
      switch (strategy) {
        case Strategy::Oracle:
          return support_count_oracle(base2_system(), n);
        case Strategy::Recurrence:
          return s_recurrence(n);
        case Strategy::Matrix:
          return s_matrix(n);
        case Strategy::Identity:
          return stern_brocot(checked_add(checked_mul(2, n), 1));
      }
      break;
    case SeqId::SB:
      return stern_brocot(n);
    case SeqId::FareyD:
      return farey_denominator(n);
    case SeqId::S3:
      return s3_oracle(n);
    case SeqId::ST:
      return st_oracle(n);
    case SeqId::SF:
      switch (strategy) {
        case Strategy::Oracle:
          return support_count_oracle(fib_system(), n);
        case Strategy::Recurrence:
          return sf_recurrence(n);
        case Strategy::Matrix:
          return sf_matrix(n);
        case Strategy::Identity:
          return sf_closed_form(n);
      }
      break;
  }
  throw std::logic_error("unreachable");
}

std::optional<SeqId> parse_seq_id(const std::string& name) {
  if (name == "S") return SeqId::S;
  if (name == "SB") return SeqId::SB;
  if (name == "D") return SeqId::FareyD;
  if (name == "S3") return SeqId::S3;
  if (name == "SF") return SeqId::SF;
  if (name == "ST") return SeqId::ST;
  return std::nullopt;
}

std::optional<Strategy> parse_strategy(const std::string& name) {
  if (name == "oracle") return Strategy::Oracle;
  if (name == "recurrence") return Strategy::Recurrence;
  if (name == "matrix") return Strategy::Matrix;
  if (name == "identity") return Strategy::Identity;
  return std::nullopt;
}

std::string to_string(SeqId id) {
  switch (id) {
    case SeqId::S: return "S";
    case SeqId::SB: return "SB";
    case SeqId::FareyD: return "D";
    case SeqId::S3: return "S3";
    case SeqId::SF: return "SF";
    case SeqId::ST: return "ST";
  }
  return {};
}

std::string to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::Oracle: return "oracle";
    case Strategy::Recurrence: return "recurrence";
    case Strategy::Matrix: return "matrix";
    case Strategy::Identity: return "identity";
  }
  return {};
}

bool ConjectureReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RelationCheck& c) { return c.passed; });
}

namespace {

class S3Cache {
 public:
  std::uint64_t operator()(std::uint64_t n) {
    auto [it, inserted] = values_.try_emplace(n, 0);
    if (inserted) it->second = s3_oracle(n);
    return it->second;
  }

 private:
  std::unordered_map<std::uint64_t, std::uint64_t> values_;
};

void record_failure(RelationCheck& check, std::uint64_t index, std::int64_t lhs,
                    std::int64_t rhs) {
  if (!check.passed) return;
  check.passed = false;
  check.counterexample = "n=" + std::to_string(index) + ": lhs=" + std::to_string(lhs) +
                         " rhs=" + std::to_string(rhs);
}

void check_instance(RelationCheck& check, std::uint64_t index, std::int64_t lhs,
                    std::int64_t rhs) {
  ++check.instances;
  if (lhs != rhs) record_failure(check, index, lhs, rhs);
}

}  // namespace

ConjectureReport check_s3_conjectures(std::uint64_t limit) {
  if (limit == 0) throw std::invalid_argument("limit must be positive");
  S3Cache s3;
  ConjectureReport report;
  auto& checks = report.checks;
  for (const char* name :
       {"S3(3^l+r), r < 3^(l-1)", "S3(3^l+r), 3^(l-1) <= r < 2*3^(l-1)",
        "S3(3^l+r), 2*3^(l-1) <= r", "S3(2*3^l+r), r < 3^(l-1)",
        "S3(2*3^l+r), 3^(l-1) <= r < 2*3^(l-1)", "S3(2*3^l+r), 2*3^(l-1) <= r",
        "S3(2*3^l+r) = S3(2*3^l+3^l-r-1)", "S3(3n+2) = 5 S3(n) - S3(3n) - S3(3n+1)",
        "S3(9n) = -S3(n) + 2 S3(3n)", "S3(9n+1) = -2 S3(n) + 2 S3(3n) + S3(3n+1)",
        "S3(9n+3) = -2 S3(n) + S3(3n) + 2 S3(3n+1)", "S3(9n+4) = -S3(n) + 2 S3(3n+1)",
        "S3(9n+6) = 8 S3(n) - S3(3n) - 2 S3(3n+1)",
        "S3(9n+7) = 8 S3(n) - 2 S3(3n) - S3(3n+1)"}) {
    checks.emplace_back();
    checks.back().name = name;
  }

  // Interval recurrences and the palindrome, instance-wise: a pair
  // (l, r) is applicable when every referenced index is below limit.
  for (std::uint64_t p = 3; p < limit; p *= 3) {  // p = 3^l, l >= 1
    const std::uint64_t third = p / 3;            // 3^(l-1)
    for (std::uint64_t r = 0; r < p; ++r) {
      if (p + r < limit) {
        const auto lhs = static_cast<std::int64_t>(s3(p + r));
        if (r < third) {
          check_instance(checks[0], p + r, lhs,
                         static_cast<std::int64_t>(s3(third + r) + s3(r)));
        } else if (r < 2 * third) {
          check_instance(checks[1], p + r, lhs,
                         2 * static_cast<std::int64_t>(s3(r)) -
                             static_cast<std::int64_t>(s3(r - third)));
        } else {
          check_instance(checks[2], p + r, lhs,
                         2 * static_cast<std::int64_t>(s3(r)) +
                             static_cast<std::int64_t>(s3(r - third)) -
                             2 * static_cast<std::int64_t>(s3(r - 2 * third)));
        }
      }
      if (2 * p + r < limit) {
        const auto lhs = static_cast<std::int64_t>(s3(2 * p + r));
        if (r < third) {
          check_instance(checks[3], 2 * p + r, lhs,
                         static_cast<std::int64_t>(s3(2 * third + r) + s3(r)));
        } else if (r < 2 * third) {
          check_instance(checks[4], 2 * p + r, lhs,
                         static_cast<std::int64_t>(s3(r + third)) +
                             2 * static_cast<std::int64_t>(s3(r)) -
                             2 * static_cast<std::int64_t>(s3(r - third)));
        } else {
          check_instance(checks[5], 2 * p + r, lhs,
                         2 * static_cast<std::int64_t>(s3(r)) -
                             static_cast<std::int64_t>(s3(r - 2 * third)));
        }
        const std::uint64_t mirror = 2 * p + p - r - 1;
        if (mirror < limit) {
          check_instance(checks[6], 2 * p + r, static_cast<std::int64_t>(s3(2 * p + r)),
                         static_cast<std::int64_t>(s3(mirror)));
        }
      }
    }
  }

  // The seven 3n/9n identities for all n < limit; right-hand indices
  // may exceed limit and are evaluated by the oracle regardless.
  for (std::uint64_t n = 0; n < limit; ++n) {
    const auto a = static_cast<std::int64_t>(s3(n));
    const auto b = static_cast<std::int64_t>(s3(3 * n));
    const auto c = static_cast<std::int64_t>(s3(3 * n + 1));
    check_instance(checks[7], n, static_cast<std::int64_t>(s3(3 * n + 2)), 5 * a - b - c);
    check_instance(checks[8], n, static_cast<std::int64_t>(s3(9 * n)), -a + 2 * b);
    check_instance(checks[9], n, static_cast<std::int64_t>(s3(9 * n + 1)), -2 * a + 2 * b + c);
    check_instance(checks[10], n, static_cast<std::int64_t>(s3(9 * n + 3)), -2 * a + b + 2 * c);
    check_instance(checks[11], n, static_cast<std::int64_t>(s3(9 * n + 4)), -a + 2 * c);
    check_instance(checks[12], n, static_cast<std::int64_t>(s3(9 * n + 6)), 8 * a - b - 2 * c);
    check_instance(checks[13], n, static_cast<std::int64_t>(s3(9 * n + 7)), 8 * a - 2 * b - c);
  }
  return report;
}

ConjectureReport check_st_partial_relation(
    const std::vector<std::uint64_t>& last_positions, unsigned i_min, unsigned i_max) {
  if (i_min < 2 || i_max < i_min || last_positions.size() < i_max) {
    throw std::invalid_argument("need last positions for every i in [i_min-1, i_max]");
  }
  ConjectureReport report;
  for (unsigned i = i_min; i <= i_max; ++i) {
    RelationCheck check;
    check.name = "ST(n_" + std::to_string(i) + "+r) = ST(n_" + std::to_string(i - 1) +
                 "+r) + ST(r)";
    const std::uint64_t cur = last_positions[i - 1];
    const std::uint64_t prev = last_positions[i - 2];
    for (std::uint64_t r = 0; r < cur - prev; ++r) {
      check_instance(check, r, static_cast<std::int64_t>(st_oracle(cur + r)),
                     static_cast<std::int64_t>(st_oracle(prev + r) + st_oracle(r)));
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

std::vector<LastOccurrence> last_occurrence_positions(SeqId id, std::size_t count,
                                                      std::uint64_t window) {
  if (count == 0) throw std::invalid_argument("count must be positive");
  std::vector<LastOccurrence> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i].value = i + 1;

  if (id == SeqId::SF) {
    // Sound bound: S_F(F(l)) < S_F(n) for every n > F(l) once l >= 3,
    // so the first F(l) with S_F(F(l)) > count ends the search for all
    // values up to count.
    const NumerationSystem& fib = fib_system();
    std::size_t l = 3;
    while (sf_recurrence(fib.scale(l)) <= count) ++l;
    const std::uint64_t bound = fib.scale(l);
    for (std::uint64_t n = 0; n <= bound; ++n) {
      const std::uint64_t v = sf_recurrence(n);
      if (v >= 1 && v <= count) out[v - 1].position = n;
    }
    for (auto& occ : out) occ.certified = true;
    return out;
  }
  if (id == SeqId::ST) {
    // No finality bound is known for S_T: scan the caller's window and
    // flag every result heuristic.
    for (std::uint64_t n = 0; n < window; ++n) {
      const std::uint64_t v = st_oracle(n);
      if (v >= 1 && v <= count) out[v - 1].position = n;
    }
    return out;
  }
  throw std::invalid_argument("last occurrences are tracked for SF and ST only");
}

}  // namespace gptri::sequences
