#include "fbas/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>

#include "CLI11.hpp"
#include "fbas/bench.hpp"
#include "fbas/error.hpp"
#include "fbas/freq.hpp"
#include "fbas/match.hpp"

namespace fbas::cli {
namespace {

struct SearchArgs {
  std::string pattern;
  std::string input = "-";
  std::string algo = "fbas";
  bool all = false;
  bool stats = false;
  std::string freq_table;
  bool lowercase = false;
};

struct AnchorArgs {
  std::string pattern;
  std::string freq_table;
};

struct TableArgs {
  std::string from_corpus;
};

struct BenchArgs {
  std::string corpus;
  std::string patterns;
  std::string format = "text";
  bool lowercase = false;
  std::string freq_table;
  bool first_match = false;
  int threads = 0;
};

Algorithm parse_algorithm(const std::string& name) {
  if (name == "naive") return Algorithm::kNaive;
  if (name == "kmp") return Algorithm::kKmp;
  if (name == "bmh") return Algorithm::kBmh;
  return Algorithm::kFbas;
}

FrequencyTable table_or_default(const std::string& path) {
  return path.empty() ? default_table() : load_table(path);
}

void lowercase_in_place(std::string& s) {
  for (char& c : s) c = static_cast<char>(ascii_lower(static_cast<unsigned char>(c)));
}

// Search input may be empty; that is "no match", not an error.
std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoFailure, "cannot open '" + path + "'");
  std::string bytes(std::istreambuf_iterator<char>(file), {});
  if (file.bad()) throw Error(ErrorCode::kIoFailure, "failed reading '" + path + "'");
  return bytes;
}

Corpus read_corpus_arg(const std::string& path, std::istream& in, const LoadOptions& options) {
  return path == "-" ? read_corpus(in, "<stdin>", options) : load_corpus(path, options);
}

int cmd_search(const SearchArgs& args, std::istream& in, std::ostream& out) {
  const FrequencyTable table = table_or_default(args.freq_table);
  std::string text = read_input(args.input, in);
  std::string pattern = args.pattern;
  if (args.lowercase) {
    lowercase_in_place(text);
    lowercase_in_place(pattern);
  }

  const Algorithm algo = parse_algorithm(args.algo);
  const SearchQuery query{.text = text,
                          .pattern = pattern,
                          .mode = args.all ? MatchMode::kAllMatches : MatchMode::kFirstMatch};
  const SearchOutcome outcome = run_search(algo, query, table);

  for (const std::size_t pos : outcome.positions) out << pos << '\n';
  if (args.stats) {
    out << "algorithm: " << to_string(algo) << '\n';
    out << "comparisons: " << outcome.comparisons() << '\n';
    out << "alignments: " << outcome.alignments() << '\n';
    if (algo == Algorithm::kFbas) {
      const AnchorSelection a = select_anchor(pattern, table);
      out << "anchor: '" << static_cast<char>(a.character) << "' @ " << a.index << " (score "
          << a.score.value() << ")\n";
      out << "anchor_hits: " << outcome.anchor_hits << '\n';
    }
  }
  return outcome.positions.empty() ? kExitNoMatch : kExitMatch;
}

int cmd_anchor(const AnchorArgs& args, std::ostream& out) {
  const FrequencyTable table = table_or_default(args.freq_table);
  const AnchorSelection a = select_anchor(args.pattern, table);
  out << "index=" << a.index << " char=" << static_cast<char>(a.character)
      << " score=" << a.score.value() << '\n';
  return kExitMatch;
}

int cmd_table(const TableArgs& args, std::istream& in, std::ostream& out) {
  if (args.from_corpus.empty()) {
    out << format_letter_table(default_table());
  } else {
    const Corpus corpus = read_corpus_arg(args.from_corpus, in, {});
    out << format_letter_table(table_from_corpus(corpus.bytes));
  }
  return kExitMatch;
}

int cmd_bench(const BenchArgs& args, std::istream& in, std::ostream& out) {
  const FrequencyTable table = table_or_default(args.freq_table);
  const Corpus corpus = read_corpus_arg(args.corpus, in, {.lowercase = args.lowercase});
  const PatternSet patterns = load_patterns(args.patterns);
  const BenchReport report =
      run_benchmark(corpus, patterns, table,
                    args.first_match ? MatchMode::kFirstMatch : MatchMode::kAllMatches,
                    args.threads);
  out << render_report(report, parse_report_format(args.format));
  return kExitMatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact string matching with frequency-based anchor selection", "fbas"};
  app.require_subcommand(1);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Print byte offsets of pattern matches");
  search_cmd->add_option("pattern", search.pattern, "Pattern bytes")->required();
  search_cmd->add_option("input", search.input, "Input file, '-' for stdin");
  search_cmd->add_option("--algo", search.algo, "Matcher")
      ->check(CLI::IsMember({"fbas", "bmh", "kmp", "naive"}));
  search_cmd->add_flag("--all", search.all, "Report every occurrence, not just the first");
  search_cmd->add_flag("--stats", search.stats, "Append comparison statistics");
  search_cmd->add_option("--freq-table", search.freq_table, "Custom frequency table file");
  search_cmd->add_flag("--lowercase", search.lowercase, "Fold ASCII letters in text and pattern");

  AnchorArgs anchor;
  auto* anchor_cmd = app.add_subcommand("anchor", "Show the anchor chosen for a pattern");
  anchor_cmd->add_option("pattern", anchor.pattern, "Pattern bytes")->required();
  anchor_cmd->add_option("--freq-table", anchor.freq_table, "Custom frequency table file");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Print a letter frequency table");
  table_cmd->add_option("--from-corpus", table.from_corpus, "Rank letters by counts in this file");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Count comparisons of all matchers over a corpus");
  bench_cmd->add_option("corpus", bench.corpus, "Corpus file, '-' for stdin")->required();
  bench_cmd->add_option("patterns", bench.patterns, "Pattern list file")->required();
  bench_cmd->add_option("--format", bench.format, "Report format")
      ->check(CLI::IsMember({"text", "csv", "json", "markdown"}));
  bench_cmd->add_flag("--lowercase", bench.lowercase, "Fold ASCII letters in the corpus");
  bench_cmd->add_option("--freq-table", bench.freq_table, "Custom frequency table file");
  bench_cmd->add_flag("--first-match", bench.first_match, "Stop each search at its first match");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads for pattern rows")
      ->check(CLI::NonNegativeNumber);

  try {
    // CLI11 expects the arguments in reverse order.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? 0 : kExitError;
  }

  try {
    if (*search_cmd) return cmd_search(search, in, out);
    if (*anchor_cmd) return cmd_anchor(anchor, out);
    if (*table_cmd) return cmd_table(table, in, out);
    if (*bench_cmd) return cmd_bench(bench, in, out);
  } catch (const Error& e) {
    err << "fbas: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "fbas: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace fbas::cli
