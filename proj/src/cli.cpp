#include "gptri/cli.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "gptri/regularity.hpp"
#include "gptri/sequences.hpp"
#include "gptri/subtrie.hpp"
#include "gptri/verify.hpp"
#include "gptri/wordbinom.hpp"
#include "json.hpp"

namespace gptri::cli {

namespace seq = gptri::sequences;
namespace reg = gptri::regularity;

namespace {

NumerationSystem system_by_name(const std::string& name) {
  if (name == "base2") return NumerationSystem::base(2);
  if (name == "base3") return NumerationSystem::base(3);
  if (name == "fib") return NumerationSystem::fibonacci();
  if (name == "tribonacci") return NumerationSystem::mbonacci(3);
  throw std::invalid_argument("unknown system: " + name);
}

seq::Strategy default_strategy(seq::SeqId id) {
  switch (id) {
    case seq::SeqId::S:
    case seq::SeqId::SB:
    case seq::SeqId::FareyD:
    case seq::SeqId::SF:
      return seq::Strategy::Recurrence;
    case seq::SeqId::S3:
    case seq::SeqId::ST:
      return seq::Strategy::Oracle;
  }
  return seq::Strategy::Recurrence;
}

struct SeqOptions {
  std::string sequence;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::string strategy;
  std::string format = "csv";
};

int run_seq(const SeqOptions& opt, std::ostream& out) {
  const auto id = seq::parse_seq_id(opt.sequence);
  if (!id) throw std::invalid_argument("unknown sequence: " + opt.sequence);
  seq::Strategy strategy = default_strategy(*id);
  if (!opt.strategy.empty()) {
    const auto parsed = seq::parse_strategy(opt.strategy);
    if (!parsed) throw std::invalid_argument("unknown strategy: " + opt.strategy);
    strategy = *parsed;
  }
  if (!seq::strategy_available(*id, strategy)) {
    std::string message = "strategy '" + seq::to_string(strategy) +
                          "' is not available for sequence " + seq::to_string(*id);
    if (*id == seq::SeqId::S3 || *id == seq::SeqId::ST) {
      message += " (its recurrences are unproven; see `verify --suite base3` or "
                 "`--suite tribonacci` for the validation reports)";
    }
    throw std::invalid_argument(message);
  }
  if (opt.to < opt.from) throw std::invalid_argument("--to must be at least --from");
  const char sep = opt.format == "tsv" ? '\t' : ',';
  for (std::uint64_t n = opt.from; n <= opt.to; ++n) {
    out << n << sep << seq::evaluate(*id, strategy, n) << '\n';
    if (n == std::numeric_limits<std::uint64_t>::max()) break;
  }
  return 0;
}

struct TriangleOptions {
  std::string system;
  std::uint64_t rows = 0;
  std::string mode = "positivity";
  std::string format;
};

int run_triangle(const TriangleOptions& opt, std::ostream& out) {
  const NumerationSystem system = system_by_name(opt.system);
  const std::string format =
      !opt.format.empty() ? opt.format : (opt.mode == "values" ? "csv" : "pbm");
  if (opt.mode == "values" && format == "pbm") {
    throw std::invalid_argument("PBM output requires --mode positivity");
  }
  const std::size_t n = static_cast<std::size_t>(opt.rows);
  if (format == "pbm") {
    out << "P1\n" << n << ' ' << n << '\n';
    std::size_t line_len = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Word u = system.rep(i);
      for (std::size_t j = 0; j < n; ++j) {
        const bool positive = occurs_as_subword(u, system.rep(j));
        if (line_len >= 64) {
          out << '\n';
          line_len = 0;
        } else if (line_len > 0) {
          out << ' ';
          ++line_len;
        }
        out << (positive ? '1' : '0');
        ++line_len;
      }
      out << '\n';
      line_len = 0;
    }
    return 0;
  }
  if (format != "csv") throw std::invalid_argument("unknown format: " + format);
  for (std::size_t i = 0; i < n; ++i) {
    if (opt.mode == "values") {
      const TriangleRow row = triangle_row(system, i, n);
      for (std::size_t j = 0; j < n; ++j) {
        if (j) out << ',';
        out << row.entries[j];
      }
    } else if (opt.mode == "positivity") {
      const Word u = system.rep(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (j) out << ',';
        out << (occurs_as_subword(u, system.rep(j)) ? '1' : '0');
      }
    } else {
      throw std::invalid_argument("unknown mode: " + opt.mode);
    }
    out << '\n';
  }
  return 0;
}

struct TrieOptions {
  std::string word;
  std::string language;
  std::string format = "dot";
};

int run_trie(const TrieOptions& opt, std::ostream& out) {
  if (opt.format != "dot") throw std::invalid_argument("unknown format: " + opt.format);
  const NumerationSystem system = system_by_name(opt.language);
  const std::string digits = opt.word == "e" ? "" : opt.word;
  const Word w = Word::from_string(digits, system.alphabet_size());
  out << trie_to_dot(build_trie(w, system));
  return 0;
}

struct VerifyOptions {
  std::string suite;
  std::uint64_t limit = 4096;
};

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  const verify::SuiteResult result = verify::run_suite(opt.suite, opt.limit);
  for (const auto& check : result.checks) {
    if (check.passed) {
      out << "[ok]   " << result.suite << ": " << check.name << " ("
          << check.instances << " instances)\n";
    } else {
      out << "[FAIL] " << result.suite << ": " << check.name << ": " << check.detail
          << '\n';
    }
  }
  return result.all_passed() ? 0 : 1;
}

struct KernelOptions {
  std::string system;
  unsigned max_suffix_len = 3;
  std::uint64_t trunc = 256;
};

int run_kernel(const KernelOptions& opt, std::ostream& out) {
  const NumerationSystem system = system_by_name(opt.system);
  reg::SequenceFn fn;
  switch (system.kind()) {
    case NumerationSystem::Kind::kBase:
      if (system.param() == 2) {
        fn = [](std::uint64_t n) { return seq::s_recurrence(n); };
      } else {
        fn = [](std::uint64_t n) { return seq::s3_oracle(n); };
      }
      break;
    case NumerationSystem::Kind::kFibonacci:
      fn = [](std::uint64_t n) { return seq::sf_recurrence(n); };
      break;
    case NumerationSystem::Kind::kMBonacci:
      throw std::invalid_argument(
          "kernel reports cover base-k and Fibonacci systems only");
  }
  const reg::RelationReport report = reg::detect_regularity(
      system, fn, opt.max_suffix_len, static_cast<std::size_t>(opt.trunc));

  nlohmann::json doc;
  doc["system"] = report.system;
  doc["stabilized"] = report.stabilized;
  doc["rank"] = report.rank;
  doc["truncation"] = report.truncation;
  doc["confirmed_at"] = report.confirmed_at;
  doc["generators"] = nlohmann::json::array();
  for (const Word& g : report.generators) doc["generators"].push_back(g.display());
  doc["relations"] = nlohmann::json::array();
  for (const reg::KernelRelation& rel : report.relations) {
    nlohmann::json entry;
    entry["target"] = rel.target.display();
    entry["coeffs"] = rel.coeffs;
    if (rel.denom != 1) entry["denom"] = rel.denom;
    doc["relations"].push_back(std::move(entry));
  }
  out << doc.dump(2) << '\n';
  return 0;
}

struct BenchOptions {
  unsigned min_exponent = 4;
  unsigned max_exponent = 24;
  unsigned oracle_cap_exponent = 13;
};

int run_bench(const BenchOptions& opt, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  const NumerationSystem base2 = NumerationSystem::base(2);
  auto time_call = [](auto&& fn) {
    const auto start = clock::now();
    volatile std::uint64_t sink = fn();
    (void)sink;
    return std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start)
        .count();
  };
  for (unsigned e = opt.min_exponent; e <= opt.max_exponent; e += 2) {
    const std::uint64_t n = std::uint64_t{1} << e;
    if (e <= opt.oracle_cap_exponent) {
      out << n << ",oracle," << time_call([&] { return support_count_oracle(base2, n); })
          << '\n';
    }
    out << n << ",recurrence," << time_call([&] { return seq::s_recurrence(n); }) << '\n';
    out << n << ",matrix," << time_call([&] { return seq::s_matrix(n); }) << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Pascal triangles of word binomial coefficients and "
               "their row-support sequences"};
  app.require_subcommand(1);

  SeqOptions seq_opt;
  auto* seq_cmd = app.add_subcommand(
      "seq", "Emit sequence values as CSV/TSV lines `n,value`");
  seq_cmd->add_option("--sequence", seq_opt.sequence, "One of S, SB, D, S3, SF, ST")
      ->required();
  seq_cmd->add_option("--from", seq_opt.from, "First index (inclusive)");
  seq_cmd->add_option("--to", seq_opt.to, "Last index (inclusive)")->required();
  seq_cmd->add_option("--strategy", seq_opt.strategy,
                      "oracle | recurrence | matrix | identity (default: the "
                      "sequence's native evaluator)");
  seq_cmd->add_option("--format", seq_opt.format, "csv | tsv")
      ->check(CLI::IsMember({"csv", "tsv"}));

  TriangleOptions tri_opt;
  auto* tri_cmd = app.add_subcommand(
      "triangle",
      "Emit an N x N triangle block; PBM row 0 is triangle row 0 (top)");
  tri_cmd->add_option("--system", tri_opt.system, "base2 | base3 | fib")->required();
  tri_cmd->add_option("--rows", tri_opt.rows, "Number of rows/columns")
      ->required()
      ->check(CLI::PositiveNumber);
  tri_cmd->add_option("--mode", tri_opt.mode, "positivity | values")
      ->check(CLI::IsMember({"positivity", "values"}));
  tri_cmd->add_option("--format", tri_opt.format,
                      "pbm | csv (default: pbm for positivity, csv for values)");

  TrieOptions trie_opt;
  auto* trie_cmd = app.add_subcommand(
      "trie", "Emit the subword trie of a word as Graphviz DOT");
  trie_cmd->add_option("--word", trie_opt.word, "Digit string; `e` for the empty word")
      ->required();
  trie_cmd->add_option("--language", trie_opt.language, "base2 | base3 | fib | tribonacci")
      ->required();
  trie_cmd->add_option("--format", trie_opt.format, "dot");

  VerifyOptions verify_opt;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run a cross-validation suite; exit 0 iff every check passes");
  verify_cmd
      ->add_option("--suite", verify_opt.suite,
                   "binary | fibonacci | base3 | tribonacci")
      ->required()
      ->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--limit", verify_opt.limit, "Index sweep bound (default 4096)");

  KernelOptions kernel_opt;
  auto* kernel_cmd = app.add_subcommand(
      "kernel", "Probe kernel structure and report rank/relations as JSON");
  kernel_cmd->add_option("--system", kernel_opt.system, "base2 | base3 | fib")->required();
  kernel_cmd->add_option("--max-suffix-len", kernel_opt.max_suffix_len,
                         "Longest digit suffix to include (default 3)");
  kernel_cmd->add_option("--trunc", kernel_opt.trunc,
                         "Discovery horizon; relations re-verify at 4x (default 256)");

  BenchOptions bench_opt;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Time S evaluators on a log-spaced grid; CSV n,strategy,nanos");
  bench_cmd->add_option("--max-exponent", bench_opt.max_exponent,
                        "Largest n is 2^max-exponent (default 24)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (seq_cmd->parsed()) return run_seq(seq_opt, out);
    if (tri_cmd->parsed()) return run_triangle(tri_opt, out);
    if (trie_cmd->parsed()) return run_trie(trie_opt, out);
    if (verify_cmd->parsed()) return run_verify(verify_opt, out);
    if (kernel_cmd->parsed()) return run_kernel(kernel_opt, out);
    if (bench_cmd->parsed()) return run_bench(bench_opt, out);
  } catch (const std::overflow_error& e) {
    err << "overflow: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace gptri::cli
