#include <gtest/gtest.h>

#include <string>

#include "thuekit/errors.hpp"
#include "thuekit/parse.hpp"
#include "thuekit/word.hpp"

using namespace thuekit;

namespace {

  void all_words(std::string const& alphabet, std::size_t len,
                 std::string& cur, std::vector<std::string>& out) {
    out.push_back(cur);
    if (cur.size() == len) {
      return;
    }
    for (char c : alphabet) {
      cur.push_back(c);
      all_words(alphabet, len, cur, out);
      cur.pop_back();
    }
  }

}  // namespace

TEST(Word, DenseRoundTripExhaustive) {
  std::vector<std::string> words;
  std::string              cur;
  all_words("abc0", 8, cur, words);
  for (auto const& s : words) {
    Word const w = Word::dense(s);
    ASSERT_EQ(w.to_dense(), s);
    ASSERT_EQ(w.length(), s.size());
    for (std::size_t i = 1; i < w.run_count(); ++i) {
      ASSERT_NE(w.runs()[i - 1].symbol, w.runs()[i].symbol);
    }
    ASSERT_EQ(parse_word(w.to_string()), w);
  }
}

TEST(Word, AppendMergesRuns) {
  Word w = Word::dense("aab");
  w.append('b', 2);
  w.append('c', 0);
  w.append(Word::dense("ba"));
  EXPECT_EQ(w.to_string(), "a^2 b^4 a");
  EXPECT_THROW(w.append('a', -1), std::invalid_argument);
}

TEST(Word, PrefixAndDrop) {
  Word const w = parse_word("a^3 c a^2 c");
  EXPECT_EQ(w.prefix(4).to_string(), "a^3 c");
  EXPECT_EQ(w.prefix(2).to_string(), "a^2");
  EXPECT_EQ(w.drop(2).to_string(), "a c a^2 c");
  EXPECT_EQ(w.drop(7), Word());
  EXPECT_EQ(w.prefix(0), Word());
  for (int i = 0; i <= 7; ++i) {
    EXPECT_EQ(w.prefix(i) + w.drop(i), w);
  }
}

TEST(Word, HugeExponentsStayExact) {
  Word const w = Word::power('a', pow2(70)) + Word::dense("c");
  EXPECT_EQ(w.length(), pow2(70) + 1);
  EXPECT_EQ(w.count('a'), pow2(70));
  EXPECT_THROW(static_cast<void>(w.to_dense()), DenseCapExceeded);
  EXPECT_EQ(parse_word(w.to_string()), w);
}

TEST(Word, EmptyWord) {
  EXPECT_EQ(Word().to_string(), "\"\"");
  EXPECT_EQ(parse_word("\"\""), Word());
  EXPECT_EQ(parse_word(""), Word());
  EXPECT_EQ(Word().length(), 0);
}

TEST(Word, ShortlexOrder) {
  EXPECT_TRUE(shortlex_less(Word::dense("c"), Word::dense("aa")));
  EXPECT_TRUE(shortlex_less(Word::dense("ab"), Word::dense("ba")));
  EXPECT_FALSE(shortlex_less(Word::dense("ab"), Word::dense("ab")));
  EXPECT_TRUE(shortlex_less(Word::dense("aab"), Word::dense("aba")));
}

TEST(Word, EqualWordsHashEqually) {
  EXPECT_EQ(Word::dense("aab").hash(), (Word::dense("a") + Word::dense("ab")).hash());
  EXPECT_NE(Word::dense("aab").hash(), Word::dense("aba").hash());
}

TEST(Alphabet, RejectsForeignSymbols) {
  Alphabet const a("abc0");
  EXPECT_NO_THROW(a.check(Word::dense("abc0")));
  try {
    a.check(Word::dense("abd"));
    FAIL();
  } catch (UnknownSymbol const& e) {
    EXPECT_EQ(e.symbol(), 'd');
  }
  EXPECT_THROW(Alphabet("aa"), ParseError);
  EXPECT_THROW(Alphabet("a^"), ParseError);
}
