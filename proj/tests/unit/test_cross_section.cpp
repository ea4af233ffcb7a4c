#include <gtest/gtest.h>

#include "thuekit/builtin.hpp"
#include "thuekit/cross_section.hpp"
#include "thuekit/errors.hpp"
#include "thuekit/parse.hpp"
#include "thuekit/rewriting.hpp"

using namespace thuekit;

namespace {

  std::vector<std::string> all_words(std::string const& alphabet, std::size_t max_len) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].size() < max_len) {
        for (char c : alphabet) {
          out.push_back(out[i] + c);
        }
      }
    }
    return out;
  }

  Dfa const& r_irreducibles() {
    static Dfa const d = irreducible_words_dfa(builtin_system(SystemId::R));
    return d;
  }

  constexpr char kAll[] =
      "states: 1\nstart: 0\naccept: 0\n0 a 0\n0 b 0\n0 c 0\n0 0 0\n";

  constexpr char kContainsZero[] =
      "# words with a 0\nstates: 2\nstart: 0\naccept: 1\n"
      "0 a 0\n0 b 0\n0 c 0\n0 0 1\n1 a 1\n1 b 1\n1 c 1\n1 0 1\n";

}  // namespace

TEST(LoadDfa, Valid) {
  Dfa const all = load_dfa(kAll);
  EXPECT_EQ(all.states(), 1u);
  for (auto const& w : all_words("abc0", 4)) {
    EXPECT_TRUE(all.accepts(w));
  }
  EXPECT_TRUE(all.accepts(parse_word("a^100000000000000000000 c")));
  Dfa const z = load_dfa(kContainsZero);
  EXPECT_TRUE(z.accepts("ab0c"));
  EXPECT_FALSE(z.accepts("abc"));
  EXPECT_FALSE(z.accepts("abd"));

  Dfa const small = load_dfa("alphabet: ab\nstates: 1\nstart: 0\naccept:\n0 a 0\n0 b 0\n");
  EXPECT_EQ(small.alphabet(), "ab");
  EXPECT_FALSE(small.accepts(""));
}

TEST(LoadDfa, Errors) {
  EXPECT_THROW(load_dfa("states: 1\nstart: 0\naccept: 0\n0 a 0\n0 b 0\n0 c 0\n"),
               ParseError);
  EXPECT_THROW(load_dfa("states: 1\nstart: 0\naccept: 0\n0 a 0\n0 b 0\n0 c 0\n0 0 0\n"
                        "0 d 0\n"),
               UnknownSymbol);
  EXPECT_THROW(load_dfa("states: 1\nstart: 0\naccept: 0\n0 a 0\n0 b 0\n0 c 0\n0 0 3\n"),
               ParseError);
  EXPECT_THROW(load_dfa("states: 1\nstart: 2\naccept: 0\n0 a 0\n0 b 0\n0 c 0\n0 0 0\n"),
               ParseError);
  EXPECT_THROW(load_dfa("states: 1\nstart: 0\naccept: 5\n0 a 0\n0 b 0\n0 c 0\n0 0 0\n"),
               ParseError);
  EXPECT_THROW(load_dfa("states: 1\nstart: 0\naccept: 0\n0 a 0\n0 a 0\n0 b 0\n0 c 0\n"
                        "0 0 0\n"),
               ParseError);
  EXPECT_THROW(load_dfa("start: 0\n"), ParseError);
  EXPECT_THROW(load_dfa("states: 0\nstart: 0\n"), ParseError);
  EXPECT_THROW(load_dfa("states: x\n"), ParseError);
  EXPECT_THROW(load_dfa("alphabet: abz\n"), UnknownSymbol);
  try {
    load_dfa("states: 1\nstart: 0\naccept: 0\n0 a\n");
    FAIL();
  } catch (ParseError const& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(LoadDfa, FormatRoundTrip) {
  Dfa const& d    = r_irreducibles();
  Dfa const  back = load_dfa(format_dfa(d));
  EXPECT_EQ(format_dfa(back), format_dfa(d));
}

TEST(Dfa, StepRunMatchesDenseRun) {
  Dfa const& d = r_irreducibles();
  for (int n = 0; n < 40; ++n) {
    for (char c : std::string("abc0")) {
      std::string const dense = "b" + std::string(n, c) + "a";
      Word const        w     = Word::dense(dense);
      EXPECT_EQ(d.accepts(w), d.accepts(std::string_view(dense)));
    }
  }
}

TEST(Constructions, RIrreduciblesAgreeWithEngine) {
  Dfa const& d = r_irreducibles();
  EXPECT_LE(d.states(), 16u);
  EXPECT_EQ(d.states(), 7u);
  auto const& R = builtin_system(SystemId::R);
  for (auto const& w : all_words("abc0", 7)) {
    ASSERT_EQ(d.accepts(w), is_irreducible(R, Word::dense(w))) << w;
  }
  EXPECT_TRUE(d.accepts("0"));
  EXPECT_THROW(irreducible_words_dfa(builtin_system(SystemId::S)),
               std::invalid_argument);
}

TEST(Constructions, FactorAvoiding) {
  std::vector<std::string> const factors{"aba", "bb", "c"};
  Dfa const d = factor_avoiding_dfa("abc", factors);
  for (auto const& w : all_words("abc", 7)) {
    bool clean = true;
    for (auto const& f : factors) {
      clean = clean && w.find(f) == std::string::npos;
    }
    ASSERT_EQ(d.accepts(w), clean) << w;
  }
}

TEST(Constructions, FiniteLanguageAndMinimize) {
  std::vector<std::string> const words{"", "ab", "abc", "ba", "0"};
  Dfa const d = finite_language_dfa("abc0", words);
  for (auto const& w : all_words("abc0", 5)) {
    bool const member = std::find(words.begin(), words.end(), w) != words.end();
    ASSERT_EQ(d.accepts(w), member) << w;
  }
  EXPECT_EQ(minimize(d).states(), d.states());

  // Two interchangeable accepting states collapse to one.
  Dfa const redundant("ab", 2, 0, {true, true}, {1, 1, 0, 0});
  EXPECT_EQ(minimize(redundant).states(), 1u);
  EXPECT_THROW(finite_language_dfa("ab", {"ac"}), UnknownSymbol);
}

TEST(CrossSection, RIrreduciblesRefuted) {
  auto const rep = check_cross_section(r_irreducibles(), 8);
  EXPECT_EQ(rep.verdict, CrossSectionVerdict::refuted);
  bool found = false;
  for (auto const& d : rep.duplicates) {
    if (d.first == Word::dense("0") && d.second == parse_word("a^3 c a c")) {
      found = true;
      EXPECT_EQ(d.normal_form, Word::dense("0"));
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(check_cross_section(r_irreducibles(), 6).verdict, CrossSectionVerdict::refuted);
  EXPECT_EQ(check_cross_section(r_irreducibles(), 5).verdict,
            CrossSectionVerdict::consistent_within_horizon);
}

TEST(CrossSection, FiniteSIrreduciblesConsistent) {
  auto const&              S = builtin_system(SystemId::S);
  std::vector<std::string> irr;
  for (auto const& w : all_words("abc0", 6)) {
    if (is_irreducible(S, Word::dense(w))) {
      irr.push_back(w);
    }
  }
  auto const rep = check_cross_section(finite_language_dfa("abc0", irr), 6);
  EXPECT_EQ(rep.verdict, CrossSectionVerdict::consistent_within_horizon);
  EXPECT_TRUE(rep.duplicates.empty());
  EXPECT_TRUE(rep.unreached_classes.empty());
  EXPECT_EQ(rep.accepted, irr.size());
}

TEST(CrossSection, EmptyLanguage) {
  Dfa const  none = load_dfa("states: 1\nstart: 0\naccept:\n0 a 0\n0 b 0\n0 c 0\n0 0 0\n");
  auto const rep  = check_cross_section(none, 4);
  EXPECT_EQ(rep.verdict, CrossSectionVerdict::consistent_within_horizon);
  EXPECT_EQ(rep.accepted, 0u);
  auto has = [&](std::string const& w) {
    return std::find(rep.unreached_classes.begin(), rep.unreached_classes.end(),
                     Word::dense(w))
           != rep.unreached_classes.end();
  };
  EXPECT_TRUE(has(""));
  EXPECT_TRUE(has("a"));
  EXPECT_FALSE(has("ba"));
}

TEST(Pumping, RIrreducibles) {
  auto const v = pumping_falsifier(r_irreducibles(), 1);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->method, "pump");
  EXPECT_EQ(v->first, parse_word("a^7 c a^2 c a c"));
  EXPECT_EQ(v->second, parse_word("a^8 c a^2 c a c"));
  EXPECT_EQ(v->run_index, 0u);
  for (int q = 2; q <= 3; ++q) {
    auto const w = pumping_falsifier(r_irreducibles(), q);
    ASSERT_TRUE(w.has_value()) << q;
    EXPECT_TRUE(r_irreducibles().accepts(w->first));
    EXPECT_TRUE(r_irreducibles().accepts(w->second));
    EXPECT_EQ(nf_S(w->first), Word::dense("0"));
    EXPECT_EQ(nf_S(w->second), Word::dense("0"));
  }
}

TEST(Pumping, SecondSite) {
  // Only words whose leading a-run is exactly 6 long: pumping must use the
  // middle run a^{2^{Q+1}-2}.
  auto const six = load_dfa(
      "states: 9\nstart: 0\naccept: 7\n"
      "0 a 1\n1 a 2\n2 a 3\n3 a 4\n4 a 5\n5 a 6\n6 a 8\n"
      "0 b 8\n1 b 8\n2 b 8\n3 b 8\n4 b 8\n5 b 8\n6 b 8\n"
      "0 c 8\n1 c 8\n2 c 8\n3 c 8\n4 c 8\n5 c 8\n6 c 7\n"
      "0 0 8\n1 0 8\n2 0 8\n3 0 8\n4 0 8\n5 0 8\n6 0 8\n"
      "7 a 7\n7 b 7\n7 c 7\n7 0 7\n8 a 8\n8 b 8\n8 c 8\n8 0 8\n");
  auto const v = pumping_falsifier(six, 1);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->method, "pump");
  EXPECT_EQ(v->first, parse_word("a^6 c a^3 c a c"));
  EXPECT_EQ(v->run_index, 2u);
}

TEST(Pumping, ZeroWordsAndSingleton) {
  auto const v = pumping_falsifier(load_dfa(kContainsZero), 1);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->method, "enumeration");
  EXPECT_EQ(v->first, Word::dense("0"));
  EXPECT_EQ(v->second, Word::dense("00"));

  Dfa const only_zero = finite_language_dfa("abc0", {"0"});
  EXPECT_FALSE(pumping_falsifier(only_zero, 1).has_value());
  EXPECT_FALSE(pumping_falsifier(only_zero, 2).has_value());
  EXPECT_THROW(pumping_falsifier(only_zero, 4), std::invalid_argument);
}

TEST(Pumping, ThresholdHelper) {
  for (int k = 0; k <= 6; ++k) {
    EXPECT_TRUE(pumping_threshold_holds(1, 2, k)) << k;
  }
  EXPECT_FALSE(pumping_threshold_holds(10, 1, 0));
  EXPECT_TRUE(pumping_threshold_holds(10, 1, 11));
  EXPECT_THROW(pumping_threshold_holds(-1, 1, 0), std::invalid_argument);
}
