#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "fbas/freq.hpp"
#include "fbas/metrics.hpp"

namespace fbas {

enum class MatchMode { kFirstMatch, kAllMatches };

enum class Algorithm { kNaive, kKmp, kBmh, kFbas };

const char* to_string(Algorithm algo) noexcept;
const char* to_string(MatchMode mode) noexcept;

/// Horspool bad-character table. Bytes of P[0..m-2] map to
/// m - 1 - (last index of the byte in P[0..m-2]); every other byte shifts m.
class ShiftTable {
 public:
  /// Throws kEmptyPattern.
  explicit ShiftTable(std::string_view pattern);

  std::size_t pattern_length() const noexcept { return m_; }
  bool has_entry(unsigned char c) const noexcept { return present_[c]; }

  std::size_t step(unsigned char last_window_byte) const noexcept {
    return shifts_[last_window_byte];
  }

 private:
  std::size_t m_;
  std::array<std::size_t, 256> shifts_;
  std::array<bool, 256> present_{};
};

inline ShiftTable build_shift_table(std::string_view pattern) { return ShiftTable(pattern); }

inline std::size_t shift_step(const ShiftTable& table, unsigned char last_window_byte) noexcept {
  return table.step(last_window_byte);
}

struct SearchQuery {
  std::string_view text;
  std::string_view pattern;
  MatchMode mode = MatchMode::kAllMatches;
};

struct SearchOptions {
  /// Keep per-window positions and costs in SearchOutcome::counter.
  bool record_windows = false;
};

struct SearchOutcome {
  std::vector<std::size_t> positions;
  std::uint64_t anchor_hits = 0;  // FBAS only
  ComparisonCounter counter;

  std::uint64_t comparisons() const noexcept { return counter.total(); }
  std::uint64_t alignments() const noexcept { return counter.alignments(); }
};

// All matchers throw Error(kEmptyPattern) for an empty pattern and return an
// empty outcome with zero counts when the text is shorter than the pattern.
// Only search-phase text-vs-pattern byte equality tests are counted.

/// Left-to-right check at every alignment. The correctness oracle.
SearchOutcome naive_search(const SearchQuery& query, const SearchOptions& options = {});

/// Knuth-Morris-Pratt; failure-function construction is not counted.
SearchOutcome kmp_search(const SearchQuery& query, const SearchOptions& options = {});

/// Horspool: right-to-left verification, shift on T[pos + m - 1].
SearchOutcome bmh_search(const SearchQuery& query, const SearchOptions& options = {});

/// Anchor-first verification with Horspool shifts.
SearchOutcome fbas_search(const SearchQuery& query, const FrequencyTable& table,
                          const SearchOptions& options = {});

/// Preprocessed FBAS matcher, reusable across texts.
class FbasMatcher {
 public:
  FbasMatcher(std::string_view pattern, const FrequencyTable& table);

  const AnchorSelection& anchor() const noexcept { return anchor_; }
  const ShiftTable& shifts() const noexcept { return shifts_; }

  SearchOutcome search(std::string_view text, MatchMode mode,
                       const SearchOptions& options = {}) const;

 private:
  std::string_view pattern_;
  AnchorSelection anchor_;
  ShiftTable shifts_;
};

SearchOutcome run_search(Algorithm algo, const SearchQuery& query, const FrequencyTable& table,
                         const SearchOptions& options = {});

struct ComparisonEstimate {
  double match_probability = 0.0;
  std::size_t pattern_length = 1;
  double expected_comparisons = 1.0;
};

/// Per-alignment cost model 1 + p * (m - 1). Throws kInvalidProbability for
/// p outside [0, 1] and kEmptyPattern for m == 0.
ComparisonEstimate expected_comparisons(double match_probability, std::size_t pattern_length);

/// Byte-exact share of `c` in `text`. Throws kEmptyCorpus.
double char_probability(std::string_view text, unsigned char c);

}  // namespace fbas
