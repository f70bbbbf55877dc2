#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fbas {

/// Rarity rank of a character: 1 is the rarest, 50 is the neutral default
/// for anything a table does not list.
class RarityScore {
 public:
  static constexpr int kMin = 1;
  static constexpr int kMax = 50;
  static constexpr int kDefault = 50;

  /// Throws Error(kInvalidScore) outside [kMin, kMax].
  explicit RarityScore(int value);

  static constexpr RarityScore unlisted() noexcept { return RarityScore(kDefault, Unchecked{}); }

  constexpr int value() const noexcept { return value_; }

  friend constexpr auto operator<=>(RarityScore, RarityScore) = default;

 private:
  struct Unchecked {};
  constexpr RarityScore(int value, Unchecked) noexcept : value_(static_cast<std::uint8_t>(value)) {}

  std::uint8_t value_;
};

/// Byte -> rarity mapping. Immutable once built; lookups are total.
class FrequencyTable {
 public:
  explicit FrequencyTable(std::string name = "custom");

  const std::string& name() const noexcept { return name_; }

  /// ASCII uppercase letters are folded to lowercase before lookup; every
  /// other byte is looked up as-is. Absent entries score 50.
  RarityScore score(unsigned char c) const noexcept;
  RarityScore score(char c) const noexcept { return score(static_cast<unsigned char>(c)); }

  bool has_entry(unsigned char c) const noexcept { return slots_[c] != 0; }

  /// Sets an explicit entry for the exact byte `c` (no case folding).
  void set(unsigned char c, RarityScore score) noexcept;

  /// Explicit entries ordered by (score, byte).
  std::vector<std::pair<unsigned char, RarityScore>> entries() const;

  friend bool operator==(const FrequencyTable& a, const FrequencyTable& b) noexcept {
    return a.slots_ == b.slots_;
  }

 private:
  std::string name_;
  std::array<std::uint8_t, 256> slots_{};  // 0 = no entry
};

/// Built-in English/Italian table: z=1, j=2, x=3, q=4, k=5 ... u=16 ... a=28, e=29.
const FrequencyTable& default_table();

/// Ranks the lowercase ASCII letters that occur in `text` by ascending
/// count (rarest gets 1, ties by byte value). Throws kEmptyCorpus.
FrequencyTable table_from_corpus(std::string_view text);

struct AnchorSelection {
  std::size_t index = 0;
  unsigned char character = 0;
  RarityScore score = RarityScore::unlisted();

  friend bool operator==(const AnchorSelection&, const AnchorSelection&) = default;
};

/// First position of minimum score in `pattern`. Throws kEmptyPattern.
AnchorSelection select_anchor(std::string_view pattern, const FrequencyTable& table);

// Table file format: one `<char>\t<score>` entry per line, '#' comments.
FrequencyTable parse_table(std::istream& in, std::string name = "custom");
FrequencyTable load_table(const std::string& path);

/// Writes the 26 lowercase letters (absent ones as 50) in the table file
/// format, ordered by (score, byte).
std::string format_letter_table(const FrequencyTable& table);

constexpr unsigned char ascii_lower(unsigned char c) noexcept {
  return (c >= 'A' && c <= 'Z') ? static_cast<unsigned char>(c - 'A' + 'a') : c;
}

}  // namespace fbas
