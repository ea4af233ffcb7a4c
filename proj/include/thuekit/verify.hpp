#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thuekit {

  // quick: reduced sizes for smoke runs. full: the sizes of the published
  // bounds (words up to length 8, parameters up to 5 or 8, and so on).
  enum class SuiteScale : std::uint8_t { quick, full };

  struct SuiteOptions {
    std::uint64_t seed  = 42;
    SuiteScale    scale = SuiteScale::full;
  };

  struct SuiteResult {
    std::string              name;
    bool                     pass    = true;
    std::size_t              checked = 0;  // number of cases examined
    std::vector<std::string> notes;        // summary values and witnesses
    std::vector<std::string> failures;     // at most a few, with witnesses
  };

  // f, equivalent, distacac, complete-S, complete-U, ldf-case1, ldf-case2,
  // left-cancel, noregcs, context.
  std::vector<std::string> const& suite_names();

  bool is_suite_name(std::string_view name);

  // Throws std::invalid_argument for an unknown name.
  SuiteResult run_suite(std::string_view name, SuiteOptions const& opts = {});

  // closed, recursive and simulated f agree on all tuples with k <= 4 and
  // entries <= 3 (quick: k <= 3, entries <= 2); f(1, 1) = 9 via babac.
  SuiteResult suite_f(SuiteOptions const& opts = {});

  // acac_derivation(n) verifies over R for n <= 6, and for all pairs with
  // |u| + |v| <= 8 (quick: 6) capped connectivity under R with length cap 14
  // (quick: 10) coincides with equality of S-normal forms.
  SuiteResult suite_equivalent(SuiteOptions const& opts = {});

  // acac_derivation(k) verifies with at most 2^{k+1} + k - 1 steps for
  // k <= 6, exactly 1 step at k = 0; for k <= 2 the capped distance to 0
  // is within the same bound.
  SuiteResult suite_distacac(SuiteOptions const& opts = {});

  // S critical pairs with params <= 5 resolve within 200 steps per side;
  // 50 random maximal reductions of every word over {a, b, c, 0} up to
  // length 8 reach the leftmost normal form, and the traces pass the
  // termination certificate.
  SuiteResult suite_complete_s(SuiteOptions const& opts = {});

  // The U critical pairs with n <= 8 are exactly AAB against BAC (BC at
  // n = 0) and all resolve; random reductions of words over {a, b, c} up to
  // length 8 agree.
  SuiteResult suite_complete_u(SuiteOptions const& opts = {});

  // For |w| <= 8 with nf_S(w) = 0: case1_reduce(w) has at most 6|w| steps
  // and the capped distance from w to 0 (length cap 3|w| + 4) is at most
  // 6|w|.
  SuiteResult suite_ldf_case1(SuiteOptions const& opts = {});

  // For u, v over {a, b, c} with |u| + |v| <= 8 and nf_U(u) = nf_U(v), the
  // capped distance under T is at most |u| + |v|.
  SuiteResult suite_ldf_case2(SuiteOptions const& opts = {});

  // nf_U(xu) = nf_U(xv) implies nf_U(u) = nf_U(v) for x in {a, b, c} and
  // |u|, |v| <= 6.
  SuiteResult suite_left_cancel(SuiteOptions const& opts = {});

  // noregcs_word(Q) is S-irreducible for Q <= 3 and collapses to 0 when its
  // leading a-run is pumped by 1..5; the R-irreducible words are refuted as
  // a cross-section at horizon 8 by the pair (0, a^3 c a c); the pumping
  // falsifier finds a violation for Q <= 3.
  SuiteResult suite_noregcs(SuiteOptions const& opts = {});

  // d(puq, pvq) <= d(u, v) for 1000 (quick: 100) seeded random R-congruent
  // pairs u != v with |u| + |v| <= 6 and |p|, |q| <= 2.
  SuiteResult suite_context(SuiteOptions const& opts = {});

}  // namespace thuekit
