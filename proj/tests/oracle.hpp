#pragma once

// Test-only reference routines. They deliberately avoid the library's
// matchers and tables so they can serve as independent oracles.

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace fbas::testing {

/// Every occurrence (or only the first) by direct substring comparison.
inline std::vector<std::size_t> brute_force_positions(std::string_view text,
                                                      std::string_view pattern,
                                                      bool first_only = false) {
  std::vector<std::size_t> out;
  if (pattern.empty() || text.size() < pattern.size()) return out;
  for (std::size_t pos = 0; pos + pattern.size() <= text.size(); ++pos) {
    if (text.substr(pos, pattern.size()) == pattern) {
      out.push_back(pos);
      if (first_only) break;
    }
  }
  return out;
}

/// Horspool shift straight from its definition:
/// m - 1 - max{i < m - 1 : P[i] == c}, or m when no such i exists.
inline std::size_t horspool_shift_by_definition(std::string_view pattern, char c) {
  const std::size_t m = pattern.size();
  if (m < 2) return m;
  const std::size_t last = pattern.substr(0, m - 1).rfind(c);
  return last == std::string_view::npos ? m : m - 1 - last;
}

/// Window start positions a Horspool-style scan visits (all-matches mode).
inline std::vector<std::size_t> horspool_trace(std::string_view text, std::string_view pattern) {
  std::vector<std::size_t> out;
  const std::size_t m = pattern.size();
  if (m == 0 || text.size() < m) return out;
  for (std::size_t pos = 0; pos + m <= text.size();
       pos += horspool_shift_by_definition(pattern, text[pos + m - 1])) {
    out.push_back(pos);
  }
  return out;
}

inline std::string random_string(std::mt19937_64& rng, std::size_t length, int alphabet) {
  std::uniform_int_distribution<int> letter(0, alphabet - 1);
  std::string s(length, 'a');
  for (char& c : s) c = static_cast<char>('a' + letter(rng));
  return s;
}

}  // namespace fbas::testing
