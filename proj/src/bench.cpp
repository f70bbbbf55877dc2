#include "fbas/bench.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fbas/error.hpp"

namespace fbas {

Corpus read_corpus(std::istream& in, std::string source_name, const LoadOptions& options) {
  Corpus corpus{.bytes = std::string(std::istreambuf_iterator<char>(in), {}),
                .source_name = std::move(source_name)};
  if (in.bad()) throw Error(ErrorCode::kIoFailure, "failed reading '" + corpus.source_name + "'");
  if (corpus.bytes.empty()) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus '" + corpus.source_name + "' is empty");
  }
  if (options.lowercase) {
    for (char& c : corpus.bytes) c = static_cast<char>(ascii_lower(static_cast<unsigned char>(c)));
  }
  return corpus;
}

Corpus load_corpus(const std::string& path, const LoadOptions& options) {
  if (path == "-") return read_corpus(std::cin, "<stdin>", options);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open corpus '" + path + "'");
  return read_corpus(in, path, options);
}

PatternSet parse_patterns(std::istream& in) {
  PatternSet set;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    set.patterns.push_back({.pattern = line, .label = line});
  }
  if (in.bad()) throw Error(ErrorCode::kIoFailure, "failed reading pattern list");
  return set;
}

PatternSet load_patterns(const std::string& path) {
  if (path == "-") return parse_patterns(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open pattern list '" + path + "'");
  return parse_patterns(in);
}

namespace {

void check_agreement(const PatternEntry& entry, Algorithm algo,
                     const std::vector<std::size_t>& expected,
                     const std::vector<std::size_t>& actual) {
  if (expected == actual) return;
  const auto [e, a] = std::mismatch(expected.begin(), expected.end(), actual.begin(), actual.end());
  std::string where;
  if (e != expected.end()) {
    where = "naive reports " + std::to_string(*e);
  } else {
    where = "naive reports no further match";
  }
  where += a != actual.end() ? ", " + std::string(to_string(algo)) + " reports " + std::to_string(*a)
                             : ", " + std::string(to_string(algo)) + " reports no further match";
  throw Error(ErrorCode::kMatcherDisagreement,
              "matchers disagree on pattern '" + entry.label + "': " + where);
}

BenchRow compute_row(const Corpus& corpus, const PatternEntry& entry, const FrequencyTable& table,
                     MatchMode mode) {
  const SearchQuery query{.text = corpus.bytes, .pattern = entry.pattern, .mode = mode};

  const SearchOutcome naive = naive_search(query);
  const SearchOutcome kmp = kmp_search(query);
  const SearchOutcome bmh = bmh_search(query);
  const FbasMatcher matcher(entry.pattern, table);
  const SearchOutcome fbas = matcher.search(corpus.bytes, mode);

  check_agreement(entry, Algorithm::kKmp, naive.positions, kmp.positions);
  check_agreement(entry, Algorithm::kBmh, naive.positions, bmh.positions);
  check_agreement(entry, Algorithm::kFbas, naive.positions, fbas.positions);

  BenchRow row{
      .pattern = entry.pattern,
      .label = entry.label,
      .naive = naive.comparisons(),
      .kmp = kmp.comparisons(),
      .bmh = bmh.comparisons(),
      .fbas = fbas.comparisons(),
      .fbas_alignments = fbas.alignments(),
      .fbas_anchor_hits = fbas.anchor_hits,
      .matches = naive.positions.size(),
      .anchor = matcher.anchor(),
      .stats = derive_stats(naive.comparisons(), kmp.comparisons(), bmh.comparisons(),
                            fbas.comparisons()),
  };
  return row;
}

void validate_inputs(const Corpus& corpus, const PatternSet& patterns) {
  if (corpus.bytes.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus is empty");
  for (const auto& p : patterns.patterns) {
    if (p.pattern.empty()) throw Error(ErrorCode::kEmptyPattern, "pattern list contains an empty pattern");
  }
}

BenchReport finish(const Corpus& corpus, MatchMode mode, std::vector<BenchRow> rows) {
  std::set<std::string> seen;
  for (auto& row : rows) row.duplicate = !seen.insert(row.pattern).second;

  BenchReport report{.source_name = corpus.source_name,
                     .corpus_length = corpus.length(),
                     .mode = mode,
                     .rows = std::move(rows),
                     .totals = {}};
  summarize(report);
  return report;
}

}  // namespace

void summarize(BenchReport& report) {
  BenchTotals t;
  double reduction_sum = 0.0;
  double speedup_sum = 0.0;
  bool reduction_defined = true;
  bool speedup_defined = true;
  for (const auto& row : report.rows) {
    t.naive += row.naive;
    t.kmp += row.kmp;
    t.bmh += row.bmh;
    t.fbas += row.fbas;
    if (row.stats.reduction_vs_naive_pct) {
      reduction_sum += *row.stats.reduction_vs_naive_pct;
    } else {
      reduction_defined = false;
    }
    if (row.stats.speedup_vs_naive) {
      speedup_sum += *row.stats.speedup_vs_naive;
    } else {
      speedup_defined = false;
    }
  }
  t.stats = derive_stats(t.naive, t.kmp, t.bmh, t.fbas);
  if (!report.rows.empty()) {
    const auto count = static_cast<double>(report.rows.size());
    if (reduction_defined) t.mean_reduction_vs_naive_pct = reduction_sum / count;
    if (speedup_defined) t.mean_speedup_vs_naive = speedup_sum / count;
  }
  report.totals = t;
}

BenchReport run_benchmark_serial(const Corpus& corpus, const PatternSet& patterns,
                                 const FrequencyTable& table, MatchMode mode) {
  validate_inputs(corpus, patterns);
  std::vector<BenchRow> rows;
  rows.reserve(patterns.patterns.size());
  for (const auto& entry : patterns.patterns) rows.push_back(compute_row(corpus, entry, table, mode));
  return finish(corpus, mode, std::move(rows));
}

BenchReport run_benchmark(const Corpus& corpus, const PatternSet& patterns,
                          const FrequencyTable& table, MatchMode mode, int threads) {
  validate_inputs(corpus, patterns);
  const auto count = static_cast<std::ptrdiff_t>(patterns.patterns.size());
  std::vector<BenchRow> rows(patterns.patterns.size());
  std::vector<std::exception_ptr> failures(patterns.patterns.size());

#ifdef _OPENMP
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
#endif
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      rows[i] = compute_row(corpus, patterns.patterns[i], table, mode);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  (void)threads;

  // Report the first failure in pattern order, as the serial path would.
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return finish(corpus, mode, std::move(rows));
}

ReportFormat parse_report_format(const std::string& name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  if (name == "markdown") return ReportFormat::kMarkdown;
  throw std::invalid_argument("unknown report format '" + name + "'");
}

}  // namespace fbas
