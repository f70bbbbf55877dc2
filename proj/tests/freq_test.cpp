#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

#include "fbas/error.hpp"
#include "fbas/freq.hpp"
#include "oracle.hpp"

namespace fbas {
namespace {

int score_of(const FrequencyTable& t, unsigned char c) { return t.score(c).value(); }

TEST(DefaultTable, PinnedScores) {
  const FrequencyTable& t = default_table();
  EXPECT_EQ(score_of(t, 'z'), 1);
  EXPECT_EQ(score_of(t, 'j'), 2);
  EXPECT_EQ(score_of(t, 'x'), 3);
  EXPECT_EQ(score_of(t, 'q'), 4);
  EXPECT_EQ(score_of(t, 'k'), 5);
  EXPECT_EQ(score_of(t, 'b'), 10);
  EXPECT_EQ(score_of(t, 'u'), 16);
  EXPECT_EQ(score_of(t, 'a'), 28);
  EXPECT_EQ(score_of(t, 'e'), 29);
  EXPECT_EQ(score_of(t, ' '), 50);
}

TEST(DefaultTable, FullOrdering) {
  std::map<int, char> by_score;
  for (unsigned char c = 'a'; c <= 'z'; ++c) by_score[score_of(default_table(), c)] = c;
  ASSERT_EQ(by_score.size(), 26u) << "scores must be distinct";
  std::string order;
  for (const auto& [s, c] : by_score) order.push_back(c);
  EXPECT_EQ(order, "zjxqkwyfbghpmduvclsnrtioae");
  for (int unused : {8, 26, 27}) EXPECT_EQ(by_score.count(unused), 0u);
}

TEST(DefaultTable, OnlyLowercaseLettersHaveEntries) {
  int explicit_entries = 0;
  for (int c = 0; c < 256; ++c) {
    const auto b = static_cast<unsigned char>(c);
    if (default_table().has_entry(b)) {
      ++explicit_entries;
      EXPECT_TRUE(b >= 'a' && b <= 'z') << c;
    }
  }
  EXPECT_EQ(explicit_entries, 26);
}

TEST(Score, CaseFoldsAndDefaults) {
  EXPECT_EQ(score_of(default_table(), 'Z'), 1);
  EXPECT_EQ(score_of(default_table(), '9'), 50);
  EXPECT_EQ(score_of(default_table(), 0xE8), 50);
}

TEST(Score, TotalityAndCaseCoherence) {
  const FrequencyTable corpus = table_from_corpus("The Quick brown fox; JUMPS over the lazy dog!");
  for (const FrequencyTable* t : {&default_table(), &corpus}) {
    for (int c = 0; c < 256; ++c) {
      const int s = score_of(*t, static_cast<unsigned char>(c));
      EXPECT_GE(s, 1);
      EXPECT_LE(s, 50);
    }
    for (unsigned char c = 'a'; c <= 'z'; ++c) {
      EXPECT_EQ(score_of(*t, c), score_of(*t, static_cast<unsigned char>(c - 'a' + 'A')));
    }
  }
}

TEST(RarityScoreType, RejectsOutOfRange) {
  EXPECT_THROW(RarityScore(0), Error);
  EXPECT_THROW(RarityScore(51), Error);
  EXPECT_EQ(RarityScore(50).value(), 50);
  EXPECT_EQ(RarityScore::unlisted().value(), 50);
}

TEST(CorpusTable, Examples) {
  const FrequencyTable aab = table_from_corpus("aab");
  EXPECT_EQ(score_of(aab, 'b'), 1);
  EXPECT_EQ(score_of(aab, 'a'), 2);

  const FrequencyTable zzz = table_from_corpus("zzz");
  EXPECT_EQ(score_of(zzz, 'z'), 1);
  EXPECT_EQ(score_of(zzz, 'e'), 50);

  const FrequencyTable abab = table_from_corpus("abab");
  EXPECT_EQ(score_of(abab, 'a'), 1);
  EXPECT_EQ(score_of(abab, 'b'), 2);
}

TEST(CorpusTable, CountsUppercaseAsLowercaseAndIgnoresOtherBytes) {
  const FrequencyTable t = table_from_corpus("AAb  1\xC3\xA8");
  EXPECT_EQ(score_of(t, 'b'), 1);
  EXPECT_EQ(score_of(t, 'a'), 2);
  EXPECT_EQ(score_of(t, ' '), 50);
  EXPECT_EQ(score_of(t, 0xC3), 50);
}

TEST(CorpusTable, EmptyCorpusThrows) {
  try {
    table_from_corpus("");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCorpus);
  }
}

TEST(CorpusTable, MonotoneInCounts) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string text = testing::random_string(rng, 1 + rng() % 300, 1 + rng() % 26);
    const FrequencyTable t = table_from_corpus(text);
    std::map<char, int> counts;
    for (char c : text) ++counts[c];
    for (const auto& [x, cx] : counts) {
      for (const auto& [y, cy] : counts) {
        if (cx < cy) EXPECT_LT(score_of(t, x), score_of(t, y)) << text;
      }
    }
  }
}

TEST(SelectAnchor, Examples) {
  const AnchorSelection oscura = select_anchor("oscura", default_table());
  EXPECT_EQ(oscura.index, 3u);
  EXPECT_EQ(oscura.character, 'u');
  EXPECT_EQ(oscura.score.value(), 16);

  const AnchorSelection mezzo = select_anchor("nel mezzo", default_table());
  EXPECT_EQ(mezzo, (AnchorSelection{6, 'z', RarityScore(1)}));

  const AnchorSelection beatrice = select_anchor("beatrice", default_table());
  EXPECT_EQ(beatrice, (AnchorSelection{0, 'b', RarityScore(10)}));

  const AnchorSelection selva = select_anchor("selva oscura", default_table());
  EXPECT_EQ(selva, (AnchorSelection{9, 'u', RarityScore(16)}));

  const AnchorSelection aaa = select_anchor("aaa", default_table());
  EXPECT_EQ(aaa, (AnchorSelection{0, 'a', RarityScore(28)}));
}

TEST(SelectAnchor, KeepsOriginalCase) {
  const AnchorSelection a = select_anchor("PiZZa", default_table());
  EXPECT_EQ(a.index, 2u);
  EXPECT_EQ(a.character, 'Z');
  EXPECT_EQ(a.score.value(), 1);
}

TEST(SelectAnchor, EmptyPatternThrows) {
  EXPECT_THROW(select_anchor("", default_table()), Error);
}

TEST(SelectAnchor, MinimalAndFirstByExhaustiveScan) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    std::string pattern(1 + rng() % 16, 'a');
    for (char& c : pattern) c = static_cast<char>(rng() % 256);
    const AnchorSelection a = select_anchor(pattern, default_table());
    ASSERT_LT(a.index, pattern.size());
    EXPECT_EQ(a.character, static_cast<unsigned char>(pattern[a.index]));
    EXPECT_EQ(a.score, default_table().score(pattern[a.index]));
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      const RarityScore s = default_table().score(pattern[i]);
      EXPECT_LE(a.score, s);
      if (i < a.index) EXPECT_GT(s, a.score);
    }
  }
}

TEST(TableFile, ParsesEntriesAndComments) {
  std::istringstream in("# comment\nq\t3\r\n\nZ\t2\n \t40\n");
  const FrequencyTable t = parse_table(in);
  EXPECT_EQ(score_of(t, 'q'), 3);
  EXPECT_EQ(score_of(t, 'z'), 2);
  EXPECT_EQ(score_of(t, 'Z'), 2);
  EXPECT_EQ(score_of(t, ' '), 40);
  EXPECT_EQ(score_of(t, 'e'), 50);
}

TEST(TableFile, RejectsMalformedLines) {
  for (const char* bad : {"q 3\n", "q\t0\n", "q\t51\n", "q\tx\n", "q\t3\nq\t4\n", "\xC3\xA8\t3\n",
                          "q\t\n"}) {
    std::istringstream in(bad);
    try {
      parse_table(in);
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidTable) << bad;
    }
  }
}

TEST(TableFile, MissingFileIsIoFailure) {
  try {
    load_table("/nonexistent/table.tsv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoFailure);
  }
}

TEST(TableFile, LetterListingRoundTrips) {
  for (const FrequencyTable& t : {default_table(), table_from_corpus("aab cde zz")}) {
    const std::string text = format_letter_table(t);
    std::istringstream in(text);
    const FrequencyTable back = parse_table(in);
    for (unsigned char c = 'a'; c <= 'z'; ++c) EXPECT_EQ(score_of(back, c), score_of(t, c));
  }
}

TEST(TableFile, DefaultListingHas26LinesRarestFirst) {
  std::istringstream in(format_letter_table(default_table()));
  std::string line;
  std::vector<std::string> entries;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') entries.push_back(line);
  }
  ASSERT_EQ(entries.size(), 26u);
  EXPECT_EQ(entries.front(), "z\t1");
  EXPECT_EQ(entries.back(), "e\t29");
}

}  // namespace
}  // namespace fbas
