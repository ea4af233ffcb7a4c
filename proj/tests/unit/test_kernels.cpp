#include <gtest/gtest.h>

#include <random>
#include <string>

#include "thuekit/builtin.hpp"
#include "thuekit/dense.hpp"
#include "thuekit/kernels.hpp"

using namespace thuekit;
namespace k = thuekit::kernels;

namespace {

  std::vector<std::uint32_t> run(void (*f)(std::string_view, std::string_view,
                                           std::vector<std::uint32_t>&),
                                 std::string_view t, std::string_view p) {
    std::vector<std::uint32_t> out;
    f(t, p, out);
    return out;
  }

}  // namespace

TEST(Kernels, ScalarBasics) {
  EXPECT_EQ(run(k::scalar::find_all, "aabaab", "aab"),
            (std::vector<std::uint32_t>{0, 3}));
  EXPECT_EQ(run(k::scalar::find_all, "aaaa", "aa"),
            (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_EQ(run(k::scalar::find_all, "ab", ""),
            (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_TRUE(run(k::scalar::find_all, "ab", "abc").empty());
  EXPECT_TRUE(run(k::scalar::find_all, "", "a").empty());
}

TEST(Kernels, Avx2MatchesScalar) {
  if (!k::isa_available(k::Isa::avx2)) {
    GTEST_SKIP() << "no AVX2 on this machine";
  }
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20000; ++i) {
    std::size_t const n = rng() % 100;
    std::size_t const m = rng() % 6;
    std::string       t, p;
    // Small alphabets make matches frequent.
    std::string const sym = i % 2 == 0 ? "ab" : "abc0";
    for (std::size_t j = 0; j < n; ++j) {
      t += sym[rng() % sym.size()];
    }
    for (std::size_t j = 0; j < m; ++j) {
      p += sym[rng() % sym.size()];
    }
    ASSERT_EQ(run(k::avx2::find_all, t, p), run(k::scalar::find_all, t, p))
        << t << " / " << p;
  }
  // Block boundaries.
  for (std::size_t n = 0; n <= 70; ++n) {
    std::string const t(n, 'a');
    for (std::size_t m = 0; m <= 3; ++m) {
      std::string const p(m, 'a');
      ASSERT_EQ(run(k::avx2::find_all, t, p), run(k::scalar::find_all, t, p));
    }
  }
}

TEST(Kernels, DispatchCanBeForcedToScalar) {
  auto const before = k::active_isa();
  k::set_isa(k::Isa::scalar);
  EXPECT_EQ(k::active_isa(), k::Isa::scalar);
  std::vector<std::uint32_t> out;
  k::find_all("bcbc", "bc", out);
  EXPECT_EQ(out, (std::vector<std::uint32_t>{0, 2}));
  k::set_isa(before);
  EXPECT_STREQ(k::to_string(k::Isa::avx2), "avx2");
}

TEST(DenseRuleTable, InstancesWithinCap) {
  DenseRuleTable const s(builtin_system(SystemId::S), 14);
  // ACAC fits for n = 0, 1, 2 (lengths 3, 6, 11).
  std::size_t acac = 0;
  for (auto const& inst : s.instances()) {
    acac += inst.rule.id == "ACAC";
  }
  EXPECT_EQ(acac, 3u);
  EXPECT_EQ(s.entries().size(), 2 * s.instances().size());

  DenseRuleTable const u(builtin_system(SystemId::U), 8, EdgeSet::forward);
  // BC, AAB, BAC at n = 1, 2 (rhs a^(2n+1) c a has length 2n + 3 <= 8).
  EXPECT_EQ(u.instances().size(), 4u);
  EXPECT_EQ(u.entries().size(), 4u);
}

TEST(DenseRuleTable, SuccessorsRespectCap) {
  DenseRuleTable const r(builtin_system(SystemId::R), 3);
  std::vector<std::string> images;
  r.for_each_successor("bc", [&](std::string_view img, DenseRuleTable::Move m) {
    images.emplace_back(img);
    EXPECT_EQ(r.redex(m.entry, m.position).rule_id, "BC");
  });
  EXPECT_EQ(images, std::vector<std::string>{"aca"});
  DenseRuleTable const r2(builtin_system(SystemId::R), 2);
  std::size_t count = 0;
  r2.for_each_successor("bc", [&](std::string_view, DenseRuleTable::Move) {
    ++count;
  });
  EXPECT_EQ(count, 0u);
}
