#include <gtest/gtest.h>

#include "thuekit/builtin.hpp"
#include "thuekit/constructions.hpp"
#include "thuekit/errors.hpp"
#include "thuekit/parse.hpp"

using namespace thuekit;

namespace {

  RewritingSystem const& R() {
    return builtin_system(SystemId::R);
  }
  RewritingSystem const& S() {
    return builtin_system(SystemId::S);
  }

  std::vector<BigInt> tup(std::initializer_list<int> v) {
    return {v.begin(), v.end()};
  }

}  // namespace

TEST(FEval, Examples) {
  for (auto m : {FMode::closed, FMode::recursive, FMode::simulate}) {
    EXPECT_EQ(f_eval(tup({1}), m), 3) << to_string(m);
    EXPECT_EQ(f_eval(tup({0}), m), 1) << to_string(m);
    EXPECT_EQ(f_eval(tup({1, 1}), m), 9) << to_string(m);
    EXPECT_EQ(f_eval(tup({2, 0, 1}), m), 19) << to_string(m);
  }
  EXPECT_EQ(f_word(tup({1, 1})), Word::dense("babac"));
  EXPECT_EQ(nf_U(Word::dense("babac")), parse_word("a^9 c a^2"));
}

TEST(FEval, ModesAgreeOnSmallTuples) {
  for (int d1 = 0; d1 <= 4; ++d1) {
    for (int d2 = 0; d2 <= 4; ++d2) {
      auto const t = tup({d2, d1});
      BigInt const c = f_eval(t, FMode::closed);
      EXPECT_EQ(f_eval(t, FMode::recursive), c);
      EXPECT_EQ(f_eval(t, FMode::simulate), c);
    }
  }
}

TEST(FEval, Errors) {
  EXPECT_THROW(f_eval({}, FMode::closed), std::invalid_argument);
  EXPECT_THROW(f_eval(tup({-1}), FMode::closed), std::invalid_argument);
  EXPECT_THROW(f_eval(tup({10, 10, 10}), FMode::simulate, 50), DenseCapExceeded);
  // Closed form handles values far beyond any dense word.
  EXPECT_EQ(f_eval({BigInt(1) << 100}, FMode::closed), (BigInt(1) << 101) + 1);
}

TEST(AcacDerivation, SmallCases) {
  auto const d0 = acac_derivation(0);
  EXPECT_EQ(d0.size(), 1u);
  EXPECT_EQ(d0.start, Word::dense("acc"));
  EXPECT_TRUE(verify_derivation(R(), d0));

  auto const d1 = acac_derivation(1);
  EXPECT_EQ(d1.start, parse_word("a^3 c a c"));
  EXPECT_EQ(d1.size(), 4u);
  EXPECT_EQ(d1.end, Word::dense("0"));
  EXPECT_TRUE(verify_derivation(R(), d1));

  auto const d2 = acac_derivation(2);
  EXPECT_LE(d2.size(), 9u);
  EXPECT_TRUE(verify_derivation(R(), d2));
}

TEST(AcacDerivation, BoundUpToTen) {
  for (int n = 0; n <= 10; ++n) {
    auto const d = acac_derivation(n);
    EXPECT_EQ(d.size(), (std::size_t{2} << n) + n - 1);
    EXPECT_EQ(d.end, Word::dense("0"));
    EXPECT_TRUE(verify_derivation(R(), d)) << n;
  }
}

TEST(AcacDerivation, DenseCap) {
  EXPECT_THROW(acac_derivation(19), DenseCapExceeded);
  EXPECT_THROW(acac_derivation(5, 20), DenseCapExceeded);
  EXPECT_THROW(acac_word(-1), std::invalid_argument);
}

TEST(Case1Reduce, Examples) {
  auto const d = case1_reduce(Word::dense("bacc"));
  EXPECT_EQ(d.end, Word::dense("0"));
  EXPECT_LE(d.size(), 24u);
  EXPECT_TRUE(verify_derivation(S(), d));

  auto const z = case1_reduce(Word::dense("0b"));
  EXPECT_EQ(z.size(), 1u);
  EXPECT_EQ(z.end, Word::dense("0"));

  auto const irr = case1_reduce(parse_word("a^2 c a c"));
  EXPECT_EQ(irr.size(), 0u);
  EXPECT_EQ(irr.end, parse_word("a^2 c a c"));
}

TEST(Case1Reduce, ReachesNormalForm) {
  std::string const sym = "abc0";
  for (std::size_t len = 0; len <= 6; ++len) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < len; ++i) {
      total *= 4;
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::string w;
      for (std::size_t i = 0, c = code; i < len; ++i, c /= 4) {
        w += sym[c % 4];
      }
      Word const word = Word::dense(w);
      auto const d    = case1_reduce(word);
      ASSERT_EQ(d.end, nf_S(word)) << w;
      ASSERT_TRUE(verify_derivation(S(), d)) << w;
      if (d.end == Word::dense("0")) {
        ASSERT_LE(d.size(), 6 * len) << w;
      }
    }
  }
}

TEST(LeftCancel, Examples) {
  EXPECT_TRUE(left_cancel_check('a', Word::dense("bc"), Word::dense("bc")));
  EXPECT_TRUE(left_cancel_check('b', Word::dense("ac"), Word::dense("ac")));
  EXPECT_TRUE(left_cancel_check('c', Word::dense("ab"), Word::dense("ba")));
  // bc and aca are U-equal; so are b(bc) and b(aca).
  EXPECT_TRUE(left_cancel_check('b', Word::dense("bc"), Word::dense("aca")));
  EXPECT_THROW(left_cancel_check('0', Word(), Word()), std::invalid_argument);
  EXPECT_THROW(left_cancel_check('a', Word::dense("0"), Word()), UnknownSymbol);
}

TEST(Noregcs, Words) {
  EXPECT_EQ(noregcs_word(1), parse_word("a^6 c a^2 c a c"));
  EXPECT_EQ(noregcs_word(2), parse_word("a^126 c a^6 c a^2 c"));
  for (int q = 1; q <= 3; ++q) {
    EXPECT_TRUE(is_irreducible(S(), noregcs_word(q))) << q;
  }
  Word const big = noregcs_word(30);
  EXPECT_EQ(big.runs()[2].exponent, (BigInt(1) << 31) - 2);
  EXPECT_TRUE(is_irreducible(S(), big));
  EXPECT_THROW(noregcs_word(0), std::invalid_argument);
  EXPECT_THROW(noregcs_word(31), std::invalid_argument);
}

TEST(Pump, Examples) {
  Word const u = noregcs_word(1);
  Word const p = pump_word(u, 0, 1);
  EXPECT_EQ(p, parse_word("a^7 c a^2 c a c"));
  EXPECT_EQ(nf_S(p), Word::dense("0"));
  EXPECT_EQ(pump_word(u, 0, 0), u);
  EXPECT_EQ(pump_word(Word::dense("bac"), 1, 2), parse_word("b a^3 c"));
  EXPECT_THROW(pump_word(u, 1, 1), std::invalid_argument);
  EXPECT_THROW(pump_word(u, 9, 1), std::invalid_argument);
  EXPECT_THROW(pump_word(u, 0, -1), std::invalid_argument);
}

TEST(Pump, LeadingRunCollapses) {
  for (int q = 1; q <= 2; ++q) {
    Word const u = noregcs_word(q);
    EXPECT_EQ(nf_S(u), u);
    for (int delta = 1; delta <= 5; ++delta) {
      EXPECT_EQ(nf_S(pump_word(u, 0, delta)), Word::dense("0")) << q << " " << delta;
    }
  }
}
