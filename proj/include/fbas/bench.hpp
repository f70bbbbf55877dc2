#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fbas/freq.hpp"
#include "fbas/match.hpp"
#include "fbas/metrics.hpp"

namespace fbas {

struct Corpus {
  std::string bytes;
  std::string source_name;

  std::size_t length() const noexcept { return bytes.size(); }
};

struct LoadOptions {
  bool lowercase = false;  // fold ASCII A-Z to a-z
};

/// "-" reads stdin. Throws kIoFailure or kEmptyCorpus.
Corpus load_corpus(const std::string& path, const LoadOptions& options = {});
Corpus read_corpus(std::istream& in, std::string source_name, const LoadOptions& options = {});

struct PatternEntry {
  std::string pattern;
  std::string label;
};

struct PatternSet {
  std::vector<PatternEntry> patterns;
};

/// One pattern per line, taken verbatim to end of line; '#' lines and blank
/// lines are skipped, a trailing CR is dropped.
PatternSet parse_patterns(std::istream& in);
PatternSet load_patterns(const std::string& path);

struct BenchRow {
  std::string pattern;
  std::string label;
  std::uint64_t naive = 0;
  std::uint64_t kmp = 0;
  std::uint64_t bmh = 0;
  std::uint64_t fbas = 0;
  std::uint64_t fbas_alignments = 0;
  std::uint64_t fbas_anchor_hits = 0;
  std::size_t matches = 0;
  bool duplicate = false;
  AnchorSelection anchor;
  DerivedStats stats;

  std::size_t length() const noexcept { return pattern.size(); }
};

struct BenchTotals {
  std::uint64_t naive = 0;
  std::uint64_t kmp = 0;
  std::uint64_t bmh = 0;
  std::uint64_t fbas = 0;
  DerivedStats stats;  // from the summed counts
  // Unweighted means of the per-row values; nullopt if any row is undefined.
  std::optional<double> mean_reduction_vs_naive_pct;
  std::optional<double> mean_speedup_vs_naive;
};

struct BenchReport {
  std::string source_name;
  std::size_t corpus_length = 0;
  MatchMode mode = MatchMode::kAllMatches;
  std::vector<BenchRow> rows;
  BenchTotals totals;
};

/// Runs all four matchers per pattern and checks their positions agree
/// (Error kMatcherDisagreement otherwise). Rows are computed in parallel
/// with OpenMP; output order follows the pattern set. `threads` <= 0 uses
/// the OpenMP default.
BenchReport run_benchmark(const Corpus& corpus, const PatternSet& patterns,
                          const FrequencyTable& table,
                          MatchMode mode = MatchMode::kAllMatches, int threads = 0);

/// Single-threaded reference; produces the same report as run_benchmark.
BenchReport run_benchmark_serial(const Corpus& corpus, const PatternSet& patterns,
                                 const FrequencyTable& table,
                                 MatchMode mode = MatchMode::kAllMatches);

/// Fills totals from rows.
void summarize(BenchReport& report);

enum class ReportFormat { kText, kCsv, kJson, kMarkdown };

/// Accepts "text", "csv", "json", "markdown". Throws std::invalid_argument.
ReportFormat parse_report_format(const std::string& name);

inline constexpr const char* kCsvHeader =
    "pattern,length,naive,kmp,bmh,fbas,improvement_pct,speedup_vs_naive,"
    "anchor_index,anchor_char,anchor_score";

std::string render_report(const BenchReport& report, ReportFormat format);

}  // namespace fbas
