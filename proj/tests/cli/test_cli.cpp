#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "thuekit/builtin.hpp"
#include "thuekit/cli.hpp"
#include "thuekit/cross_section.hpp"
#include "thuekit/parse.hpp"
#include "thuekit/rewriting.hpp"
#include "thuekit/verify.hpp"

using namespace thuekit;
using nlohmann::json;

namespace {

  struct Outcome {
    int         code = -1;
    std::string out;
    std::string err;
  };

  Outcome call(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    Outcome            r;
    r.code = cli::run(args, out, err);
    r.out  = out.str();
    r.err  = err.str();
    return r;
  }

  std::vector<std::string> lines(std::string const& text) {
    std::vector<std::string> v;
    std::istringstream       in(text);
    for (std::string l; std::getline(in, l);) {
      v.push_back(l);
    }
    return v;
  }

  json call_json(std::vector<std::string> args, int expected_code) {
    args.push_back("--json");
    auto const r = call(args);
    EXPECT_EQ(r.code, expected_code) << r.err;
    EXPECT_EQ(lines(r.out).size(), 1u);
    json j = json::parse(r.out);
    EXPECT_EQ(j["schema"], cli::kJsonSchema);
    return j;
  }

  std::string data(std::string const& name) {
    return std::string(THUEKIT_DATA_DIR) + "/" + name;
  }

  std::string slurp(std::string const& path) {
    std::ifstream      in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

}  // namespace

TEST(Cli, NfExample) {
  auto const r = call({"nf", "--system", "S", "bbc"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "a^3 c a^2\nsteps: 3\n");
}

TEST(Cli, DehnDistanceExample) {
  auto const r = call({"dehn-distance", "--system", "R", "acc", "0"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(lines(r.out).at(0), "1 exact");
}

TEST(Cli, ReduceTraceWordsParse) {
  for (std::string const s : {"leftmost", "rightmost", "random"}) {
    auto const r = call({"reduce", "--strategy", s, "--system", "S", "b^3 c^2 a"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    auto const ls = lines(r.out);
    ASSERT_GE(ls.size(), 2u);
    EXPECT_EQ(parse_word(ls[ls.size() - 2]), nf_S(parse_word("b^3 c^2 a"))) << s;
    for (std::size_t i = 0; i + 2 < ls.size(); ++i) {
      auto const arrow = ls[i].find(" -> ");
      ASSERT_NE(arrow, std::string::npos);
      EXPECT_NO_THROW(parse_word(ls[i].substr(arrow + 4)));
    }
  }
}

TEST(Cli, Equal) {
  EXPECT_EQ(call({"equal", "--system", "R", "a^3 c a c", "0"}).code, cli::kOk);
  EXPECT_EQ(call({"equal", "--system", "R", "ab", "ba"}).code, cli::kRefuted);
  EXPECT_EQ(call({"equal", "--system", "T", "aab", "ba"}).code, cli::kOk);
}

TEST(Cli, CriticalPairs) {
  auto const r = call({"critical-pairs", "--system", "U", "--max-param", "1"});
  EXPECT_EQ(r.code, cli::kOk);
  auto const ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0], "a^2 b c\tAAB x BC\tRESOLVED\ta^3 c a");
  EXPECT_EQ(ls[1], "a^2 b a c\tAAB x BAC(n=1)\tRESOLVED\ta^5 c a");
  EXPECT_EQ(ls[2], "pairs: 2 resolved: 2 param-bound: 1");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, cli::kUsage);
  EXPECT_EQ(call({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(call({"nf", "bxc"}).code, cli::kUsage);
  EXPECT_EQ(call({"nf", "a^"}).code, cli::kUsage);
  EXPECT_EQ(call({"nf", "--system", "Q", "ab"}).code, cli::kUsage);
  EXPECT_EQ(call({"nf", "--strategy", "sideways", "ab"}).code, cli::kUsage);
  EXPECT_EQ(call({"verify-paper"}).code, cli::kUsage);
  EXPECT_EQ(call({"verify-paper", "--lemma", "nope"}).code, cli::kUsage);
  EXPECT_EQ(call({"xsection", "check", "/nonexistent.dfa"}).code, cli::kUsage);
  EXPECT_EQ(call({"nf", "--system-file", "/nonexistent.sys", "ab"}).code, cli::kUsage);
  auto const r = call({"nf"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(call({"nf", "--help"}).code, cli::kOk);
}

TEST(Cli, SystemFileMatchesBuiltin) {
  for (std::string const name : {"R", "S", "T", "U"}) {
    EXPECT_EQ(slurp(data(name + ".sys")),
              std::string(builtin_system_text(*parse_system_id(name))))
        << name;
  }
  auto const a = call({"nf", "--system-file", data("S.sys"), "b^5 c"});
  auto const b = call({"nf", "--system", "S", "b^5 c"});
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, DfaDataFileMatchesConstruction) {
  EXPECT_EQ(slurp(data("r_irreducibles.dfa")),
            format_dfa(irreducible_words_dfa(builtin_system(SystemId::R))));
}

TEST(Cli, Xsection) {
  auto const c = call({"xsection", "check", data("r_irreducibles.dfa"), "--horizon", "8"});
  EXPECT_EQ(c.code, cli::kRefuted);
  auto const ls = lines(c.out);
  EXPECT_EQ(ls.at(0), "verdict: refuted");
  EXPECT_NE(std::find(ls.begin(), ls.end(), "duplicate: 0 / a^3 c a c -> 0"), ls.end());
  EXPECT_EQ(call({"xsection", "check", data("r_irreducibles.dfa"), "--horizon", "5"}).code,
            cli::kOk);

  auto const p = call({"xsection", "pump", data("r_irreducibles.dfa"), "--Q", "1"});
  EXPECT_EQ(p.code, cli::kRefuted);
  EXPECT_EQ(lines(p.out).at(0), "violation: a^7 c a^2 c a c / a^8 c a^2 c a c");
}

TEST(Cli, DehnProfileCsv) {
  auto const path = std::filesystem::temp_directory_path() / "thuekit_profile_test.csv";
  auto const r    = call({"dehn-profile", "--system", "R", "--max-n", "3", "--csv", path.string()});
  EXPECT_EQ(r.code, cli::kOk);
  auto const rows = lines(slurp(path.string()));
  std::filesystem::remove(path);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "n,D,witness_u,witness_v,status");
  EXPECT_EQ(rows[4], "3,1,0,a 0,exact");
}

TEST(Cli, VerifyAllQuick) {
  auto const r = call({"verify-paper", "--all", "--quick", "--seed", "42"});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  std::size_t pass = 0;
  for (auto const& l : lines(r.out)) {
    pass += l.rfind("PASS ", 0) == 0 ? 1 : 0;
    EXPECT_NE(l.rfind("FAIL ", 0), 0u) << l;
  }
  EXPECT_EQ(pass, suite_names().size());
  EXPECT_EQ(lines(r.out).back(), "summary: 10/10 passed");

  // Output stability.
  EXPECT_EQ(call({"verify-paper", "--all", "--quick", "--seed", "42"}).out, r.out);
  auto const one = call({"verify-paper", "--lemma", "f", "--lemma", "noregcs", "--quick"});
  EXPECT_EQ(one.code, cli::kOk);
  EXPECT_EQ(lines(one.out).back(), "summary: 2/2 passed");
}

TEST(Cli, RandomReductionStable) {
  std::vector<std::string> const args{"reduce", "--strategy", "random", "--seed", "7",
                                      "b^4 a c^2 b a c"};
  EXPECT_EQ(call(args).out, call(args).out);
}

TEST(CliJson, WordsRoundTrip) {
  auto j = call_json({"nf", "--system", "S", "bbc"}, cli::kOk);
  EXPECT_EQ(parse_word(j["normal_form"].get<std::string>()), parse_word("a^3 c a^2"));
  EXPECT_EQ(j["steps"], 3);

  j = call_json({"reduce", "--system", "S", "b^2 c"}, cli::kOk);
  auto const& S = builtin_system(SystemId::S);
  Word        w = parse_word(j["input"].get<std::string>());
  for (auto const& st : j["trace"]) {
    Redex r;
    r.rule_id  = st["rule"];
    r.param    = st["param"].is_null() ? std::nullopt
                                       : std::optional<std::int64_t>(st["param"].get<std::int64_t>());
    r.position = st["position"].get<std::uint64_t>();
    w          = apply_redex(S, w, r);
    EXPECT_EQ(w, parse_word(st["word"].get<std::string>()));
  }
  EXPECT_EQ(w, parse_word(j["normal_form"].get<std::string>()));

  j = call_json({"equal", "--system", "R", "ab", "ba"}, cli::kRefuted);
  EXPECT_FALSE(j["equal"].get<bool>());
  EXPECT_EQ(parse_word(j["nf_u"].get<std::string>()), nf_S(parse_word("ab")));

  j = call_json({"critical-pairs", "--system", "U", "--max-param", "1"}, cli::kOk);
  ASSERT_EQ(j["pairs"].size(), 2u);
  for (auto const& p : j["pairs"]) {
    EXPECT_EQ(nf_U(parse_word(p["source"].get<std::string>())),
              parse_word(p["normal_form"].get<std::string>()));
  }

  j = call_json({"dehn-distance", "--system", "R", "--witness", "acc", "0"}, cli::kOk);
  EXPECT_EQ(j["distance"], 1);
  EXPECT_EQ(j["status"], "exact");
  EXPECT_EQ(parse_word(j["witness"][0]["word"].get<std::string>()), parse_word("0"));

  j = call_json({"dehn-profile", "--system", "R", "--max-n", "3"}, cli::kOk);
  ASSERT_EQ(j["points"].size(), 4u);
  for (auto const& p : j["points"]) {
    EXPECT_EQ(nf_S(parse_word(p["witness_u"].get<std::string>())),
              nf_S(parse_word(p["witness_v"].get<std::string>())));
  }

  j = call_json({"verify-paper", "--lemma", "f", "--quick"}, cli::kOk);
  EXPECT_EQ(j["suites"][0]["name"], "f");
  EXPECT_TRUE(j["suites"][0]["pass"].get<bool>());

  j = call_json({"xsection", "check", data("r_irreducibles.dfa"), "--horizon", "8"},
                cli::kRefuted);
  EXPECT_EQ(j["verdict"], "refuted");
  for (auto const& d : j["duplicates"]) {
    EXPECT_EQ(nf_S(parse_word(d[0].get<std::string>())),
              nf_S(parse_word(d[1].get<std::string>())));
  }

  j = call_json({"xsection", "pump", data("r_irreducibles.dfa"), "--Q", "1"}, cli::kRefuted);
  EXPECT_EQ(parse_word(j["violation"]["second"].get<std::string>()),
            parse_word("a^8 c a^2 c a c"));
}
