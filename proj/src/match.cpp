#include "fbas/match.hpp"

#include <algorithm>
#include <cmath>

#include "fbas/error.hpp"

namespace fbas {

const char* to_string(Algorithm algo) noexcept {
  switch (algo) {
    case Algorithm::kNaive: return "naive";
    case Algorithm::kKmp: return "kmp";
    case Algorithm::kBmh: return "bmh";
    case Algorithm::kFbas: return "fbas";
  }
  return "unknown";
}

const char* to_string(MatchMode mode) noexcept {
  return mode == MatchMode::kFirstMatch ? "first_match" : "all_matches";
}

namespace {

void require_pattern(std::string_view pattern) {
  if (pattern.empty()) throw Error(ErrorCode::kEmptyPattern, "pattern is empty");
}

inline unsigned char byte_at(std::string_view s, std::size_t i) {
  return static_cast<unsigned char>(s[i]);
}

// Counts one text-vs-pattern equality test and returns its result.
inline bool compare(ComparisonCounter& counter, char text_byte, char pattern_byte) {
  counter.count();
  return text_byte == pattern_byte;
}

SearchOutcome empty_outcome(const SearchOptions& options) {
  SearchOutcome out;
  out.counter = ComparisonCounter(options.record_windows);
  return out;
}

std::vector<std::size_t> failure_function(std::string_view pattern) {
  std::vector<std::size_t> fail(pattern.size(), 0);
  for (std::size_t i = 1, k = 0; i < pattern.size(); ++i) {
    while (k > 0 && pattern[i] != pattern[k]) k = fail[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

}  // namespace

ShiftTable::ShiftTable(std::string_view pattern) : m_(pattern.size()) {
  require_pattern(pattern);
  shifts_.fill(m_);
  for (std::size_t i = 0; i + 1 < m_; ++i) {
    shifts_[byte_at(pattern, i)] = m_ - 1 - i;
    present_[byte_at(pattern, i)] = true;
  }
}

SearchOutcome naive_search(const SearchQuery& query, const SearchOptions& options) {
  require_pattern(query.pattern);
  SearchOutcome out = empty_outcome(options);
  const std::string_view text = query.text;
  const std::string_view pattern = query.pattern;
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  if (n < m) return out;

  for (std::size_t pos = 0; pos <= n - m; ++pos) {
    out.counter.open_window(pos);
    std::size_t i = 0;
    while (i < m && compare(out.counter, text[pos + i], pattern[i])) ++i;
    if (i == m) {
      out.positions.push_back(pos);
      if (query.mode == MatchMode::kFirstMatch) break;
    }
  }
  return out;
}

SearchOutcome kmp_search(const SearchQuery& query, const SearchOptions& options) {
  require_pattern(query.pattern);
  SearchOutcome out = empty_outcome(options);
  const std::string_view text = query.text;
  const std::string_view pattern = query.pattern;
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  if (n < m) return out;

  const std::vector<std::size_t> fail = failure_function(pattern);
  const std::size_t last = n - m;

  // i indexes the text, j the pattern; the window under test starts at i - j.
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t window = 0;
  out.counter.open_window(0);
  while (i - j <= last) {
    if (i - j != window) {
      window = i - j;
      out.counter.open_window(window);
    }
    if (compare(out.counter, text[i], pattern[j])) {
      ++i;
      ++j;
      if (j == m) {
        out.positions.push_back(i - m);
        if (query.mode == MatchMode::kFirstMatch) break;
        j = fail[m - 1];
      }
    } else if (j > 0) {
      j = fail[j - 1];
    } else {
      ++i;
    }
  }
  return out;
}

SearchOutcome bmh_search(const SearchQuery& query, const SearchOptions& options) {
  require_pattern(query.pattern);
  SearchOutcome out = empty_outcome(options);
  const std::string_view text = query.text;
  const std::string_view pattern = query.pattern;
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  if (n < m) return out;

  const ShiftTable shifts(pattern);
  std::size_t pos = 0;
  while (pos <= n - m) {
    out.counter.open_window(pos);
    std::size_t i = m;
    while (i > 0 && compare(out.counter, text[pos + i - 1], pattern[i - 1])) --i;
    if (i == 0) {
      out.positions.push_back(pos);
      if (query.mode == MatchMode::kFirstMatch) break;
    }
    pos += shifts.step(byte_at(text, pos + m - 1));
  }
  return out;
}

FbasMatcher::FbasMatcher(std::string_view pattern, const FrequencyTable& table)
    : pattern_(pattern), anchor_(select_anchor(pattern, table)), shifts_(pattern) {}

SearchOutcome FbasMatcher::search(std::string_view text, MatchMode mode,
                                  const SearchOptions& options) const {
  SearchOutcome out = empty_outcome(options);
  const std::size_t n = text.size();
  const std::size_t m = pattern_.size();
  if (n < m) return out;

  const std::size_t a = anchor_.index;
  const char anchor_char = static_cast<char>(anchor_.character);
  std::size_t pos = 0;
  while (pos <= n - m) {
    out.counter.open_window(pos);
    if (compare(out.counter, text[pos + a], anchor_char)) {
      ++out.anchor_hits;
      bool match = true;
      for (std::size_t i = 0; i < m; ++i) {
        if (i != a && !compare(out.counter, text[pos + i], pattern_[i])) {
          match = false;
          break;
        }
      }
      if (match) {
        out.positions.push_back(pos);
        if (mode == MatchMode::kFirstMatch) break;
      }
    }
    pos += shifts_.step(byte_at(text, pos + m - 1));
  }
  return out;
}

SearchOutcome fbas_search(const SearchQuery& query, const FrequencyTable& table,
                          const SearchOptions& options) {
  require_pattern(query.pattern);
  return FbasMatcher(query.pattern, table).search(query.text, query.mode, options);
}

SearchOutcome run_search(Algorithm algo, const SearchQuery& query, const FrequencyTable& table,
                         const SearchOptions& options) {
  switch (algo) {
    case Algorithm::kNaive: return naive_search(query, options);
    case Algorithm::kKmp: return kmp_search(query, options);
    case Algorithm::kBmh: return bmh_search(query, options);
    case Algorithm::kFbas: return fbas_search(query, table, options);
  }
  return naive_search(query, options);
}

ComparisonEstimate expected_comparisons(double match_probability, std::size_t pattern_length) {
  if (!(match_probability >= 0.0 && match_probability <= 1.0)) {
    throw Error(ErrorCode::kInvalidProbability, "match probability must lie in [0, 1]");
  }
  if (pattern_length == 0) throw Error(ErrorCode::kEmptyPattern, "pattern length must be >= 1");
  return {
      .match_probability = match_probability,
      .pattern_length = pattern_length,
      .expected_comparisons =
          1.0 + match_probability * static_cast<double>(pattern_length - 1),
  };
}

double char_probability(std::string_view text, unsigned char c) {
  if (text.empty()) throw Error(ErrorCode::kEmptyCorpus, "text is empty");
  const auto hits = std::count(text.begin(), text.end(), static_cast<char>(c));
  return static_cast<double>(hits) / static_cast<double>(text.size());
}

}  // namespace fbas
