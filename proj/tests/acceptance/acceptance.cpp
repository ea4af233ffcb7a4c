// Runs every acceptance criterion at full scale and prints one PASS/FAIL
// line per criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "thuekit/builtin.hpp"
#include "thuekit/confluence.hpp"
#include "thuekit/constructions.hpp"
#include "thuekit/cross_section.hpp"
#include "thuekit/parse.hpp"
#include "thuekit/rewriting.hpp"
#include "thuekit/verify.hpp"

using namespace thuekit;

namespace {

  struct Criterion {
    int                        id;
    char const*                title;
    char const*                suite;
    std::function<bool(SuiteResult const&, std::string&)> extra;
  };

  bool f_extra(SuiteResult const& r, std::string& why) {
    if (r.checked != 340) {
      why = "expected 340 tuples, saw " + std::to_string(r.checked);
      return false;
    }
    for (auto mode : {FMode::closed, FMode::recursive, FMode::simulate}) {
      if (f_eval({1, 1}, mode) != 9) {
        why = std::string("f(1,1) != 9 in mode ") + to_string(mode);
        return false;
      }
    }
    Word const nf = nf_U(parse_word("babac"));
    if (nf != parse_word("a^9 c a^2")) {
      why = "babac reduces to " + nf.to_string();
      return false;
    }
    return true;
  }

  bool distacac_extra(SuiteResult const&, std::string& why) {
    auto const& R = builtin_system(SystemId::R);
    for (std::int64_t k = 0; k <= 6; ++k) {
      Derivation const d = acac_derivation(k);
      if (!verify_derivation(R, d) || d.end != Word::dense("0")) {
        why = "acac_derivation(" + std::to_string(k) + ") does not verify";
        return false;
      }
      std::size_t const bound = (std::size_t{1} << (k + 1)) + static_cast<std::size_t>(k) - 1;
      if (d.size() > bound || (k == 0 && d.size() != 1)) {
        why = "acac_derivation(" + std::to_string(k) + ") has " + std::to_string(d.size())
              + " steps";
        return false;
      }
    }
    return true;
  }

  bool complete_s_extra(SuiteResult const& r, std::string& why) {
    // 87381 words over {a, b, c, 0} up to length 8, 50 reductions each.
    if (r.checked < 87381u * 50u) {
      why = "only " + std::to_string(r.checked) + " cases";
      return false;
    }
    return true;
  }

  bool complete_u_extra(SuiteResult const&, std::string& why) {
    auto const& U = builtin_system(SystemId::U);
    for (auto const& p : enumerate_critical_pairs(U, 8)) {
      if (!resolve_critical_pair(U, p, 200).resolved) {
        why = "unresolved pair at " + p.source.to_string();
        return false;
      }
    }
    return true;
  }

  bool noregcs_extra(SuiteResult const&, std::string& why) {
    auto const rep = check_cross_section(irreducible_words_dfa(builtin_system(SystemId::R)), 8);
    for (auto const& d : rep.duplicates) {
      if (d.first == Word::dense("0") && d.second == parse_word("a^3 c a c")) {
        return rep.verdict == CrossSectionVerdict::refuted;
      }
    }
    why = "duplicate (0, a^3 c a c) not reported";
    return false;
  }

  bool context_extra(SuiteResult const& r, std::string& why) {
    if (r.checked != 1000) {
      why = "expected 1000 samples, saw " + std::to_string(r.checked);
      return false;
    }
    return true;
  }

  bool none(SuiteResult const&, std::string&) {
    return true;
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "f modes agree on 340 tuples, f(1,1) = 9", "f", f_extra},
      {2, "acac derivations within 2^{k+1}+k-1 steps", "distacac", distacac_extra},
      {3, "S critical pairs and random reductions", "complete-S", complete_s_extra},
      {4, "U critical pairs and random reductions", "complete-U", complete_u_extra},
      {5, "R-congruence iff equal S-normal forms", "equivalent", none},
      {6, "class of 0 within 6|w| steps", "ldf-case1", none},
      {7, "U-equal pairs within |u|+|v| under T", "ldf-case2", none},
      {8, "left cancellativity of U", "left-cancel", none},
      {9, "R-irreducibles are not a cross-section", "noregcs", noregcs_extra},
      {10, "context monotonicity on 1000 samples", "context", context_extra},
  };

  SuiteOptions opts;
  opts.seed  = 42;
  opts.scale = SuiteScale::full;

  int failed = 0;
  for (auto const& c : criteria) {
    auto const  t0 = std::chrono::steady_clock::now();
    SuiteResult r  = run_suite(c.suite, opts);
    std::string why;
    bool const  ok = r.pass && c.extra(r, why);
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s [%s, %zu cases, %.1fs]\n", ok ? "PASS" : "FAIL", c.id,
                c.title, c.suite, r.checked, secs);
    for (auto const& n : r.notes) {
      std::printf("    %s\n", n.c_str());
    }
    for (auto const& f : r.failures) {
      std::printf("    witness: %s\n", f.c_str());
    }
    if (!why.empty()) {
      std::printf("    %s\n", why.c_str());
    }
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
