#include "fbas/freq.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "fbas/error.hpp"

namespace fbas {

RarityScore::RarityScore(int value) : value_(0) {
  if (value < kMin || value > kMax) {
    throw Error(ErrorCode::kInvalidScore,
                "rarity score " + std::to_string(value) + " outside [1, 50]");
  }
  value_ = static_cast<std::uint8_t>(value);
}

FrequencyTable::FrequencyTable(std::string name) : name_(std::move(name)) {}

RarityScore FrequencyTable::score(unsigned char c) const noexcept {
  const std::uint8_t slot = slots_[ascii_lower(c)];
  return slot == 0 ? RarityScore::unlisted() : RarityScore(slot);
}

void FrequencyTable::set(unsigned char c, RarityScore score) noexcept {
  slots_[c] = static_cast<std::uint8_t>(score.value());
}

std::vector<std::pair<unsigned char, RarityScore>> FrequencyTable::entries() const {
  std::vector<std::pair<unsigned char, RarityScore>> out;
  for (int c = 0; c < 256; ++c) {
    if (slots_[c] != 0) out.emplace_back(static_cast<unsigned char>(c), RarityScore(slots_[c]));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

namespace {

FrequencyTable make_default_table() {
  // 26 letters over ranks 1..29: 8, 26 and 27 stay unassigned. v must rank
  // above u so that "selva oscura" anchors on 'u'.
  static constexpr std::pair<char, int> kScores[] = {
      {'z', 1},  {'j', 2},  {'x', 3},  {'q', 4},  {'k', 5},  {'w', 6},  {'y', 7},
      {'f', 9},  {'b', 10}, {'g', 11}, {'h', 12}, {'p', 13}, {'m', 14}, {'d', 15},
      {'u', 16}, {'v', 17}, {'c', 18}, {'l', 19}, {'s', 20}, {'n', 21}, {'r', 22},
      {'t', 23}, {'i', 24}, {'o', 25}, {'a', 28}, {'e', 29},
  };
  FrequencyTable table("default");
  for (const auto& [c, s] : kScores) table.set(static_cast<unsigned char>(c), RarityScore(s));
  return table;
}

}  // namespace

const FrequencyTable& default_table() {
  static const FrequencyTable table = make_default_table();
  return table;
}

FrequencyTable table_from_corpus(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus is empty");

  std::array<std::uint64_t, 26> counts{};
  for (const char ch : text) {
    const unsigned char c = ascii_lower(static_cast<unsigned char>(ch));
    if (c >= 'a' && c <= 'z') ++counts[c - 'a'];
  }

  std::vector<int> present;
  for (int i = 0; i < 26; ++i) {
    if (counts[i] > 0) present.push_back(i);
  }
  // Already in byte order, so a stable sort breaks count ties by byte value.
  std::stable_sort(present.begin(), present.end(),
                   [&](int a, int b) { return counts[a] < counts[b]; });

  FrequencyTable table("corpus");
  int rank = RarityScore::kMin;
  for (const int letter : present) {
    // 26 letters always fit below the default of 50.
    table.set(static_cast<unsigned char>('a' + letter), RarityScore(rank++));
  }
  return table;
}

AnchorSelection select_anchor(std::string_view pattern, const FrequencyTable& table) {
  if (pattern.empty()) throw Error(ErrorCode::kEmptyPattern, "pattern is empty");

  AnchorSelection best;
  int min_score = RarityScore::kMax + 1;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const RarityScore s = table.score(pattern[i]);
    if (s.value() < min_score) {
      min_score = s.value();
      best.index = i;
      best.score = s;
    }
  }
  best.character = static_cast<unsigned char>(pattern[best.index]);
  return best;
}

FrequencyTable parse_table(std::istream& in, std::string name) {
  FrequencyTable table(std::move(name));
  std::array<bool, 256> seen{};
  std::string line;
  std::size_t line_no = 0;

  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kInvalidTable,
                "frequency table line " + std::to_string(line_no) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    if (line.size() < 3 || line[1] != '\t') fail("expected <character>\\t<score>");
    const auto key = static_cast<unsigned char>(line[0]);
    if (key >= 0x80) fail("only single-byte characters are supported");

    const std::string_view digits(line.data() + 2, line.size() - 2);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) fail("score is not an integer");
    if (value < RarityScore::kMin || value > RarityScore::kMax) fail("score outside [1, 50]");

    // Lookups fold case, so uppercase keys are stored under the lowercase byte.
    const unsigned char slot = ascii_lower(key);
    if (seen[slot]) fail("duplicate entry");
    seen[slot] = true;
    table.set(slot, RarityScore(value));
  }
  if (in.bad()) throw Error(ErrorCode::kIoFailure, "failed reading frequency table");
  return table;
}

FrequencyTable load_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open frequency table '" + path + "'");
  return parse_table(in, path);
}

std::string format_letter_table(const FrequencyTable& table) {
  std::vector<std::pair<unsigned char, RarityScore>> letters;
  for (unsigned char c = 'a'; c <= 'z'; ++c) letters.emplace_back(c, table.score(c));
  std::stable_sort(letters.begin(), letters.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });

  std::ostringstream out;
  out << "# frequency table: " << table.name() << "\n";
  for (const auto& [c, s] : letters) out << static_cast<char>(c) << '\t' << s.value() << '\n';
  return out.str();
}

}  // namespace fbas
