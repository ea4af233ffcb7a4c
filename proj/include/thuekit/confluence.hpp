#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thuekit/rewriting.hpp"
#include "thuekit/system.hpp"

namespace thuekit {

  enum class OverlapKind : std::uint8_t { suffix_prefix, containment };

  char const* to_string(OverlapKind k) noexcept;

  struct RuleRef {
    std::string                 rule_id;
    std::optional<std::int64_t> param;

    std::string to_string() const;  // "BA", "ACAC(n=2)"

    friend bool operator==(RuleRef const&, RuleRef const&) = default;
  };

  // Two one-step rewrites of `source` at overlapping left-hand sides. For
  // suffix_prefix the first rule sits at 0 and the second starts inside it;
  // for containment the second lies within the first.
  struct CriticalPair {
    Word        source;
    Word        left_reduct;
    Word        right_reduct;
    OverlapKind kind;
    RuleRef     first;
    RuleRef     second;
    Redex       left_step;
    Redex       right_step;
  };

  // Overlaps among finite rules and schema instances with n <= param_bound.
  // Deduplicated by source and the pair of rule occurrences; a rule's
  // trivial containment in itself is left out.
  std::vector<CriticalPair> enumerate_critical_pairs(
      RewritingSystem const& system, std::int64_t param_bound);

  struct ResolutionReport {
    bool                resolved = false;
    std::optional<Word> common_word;
    Derivation          left;   // left_reduct ->* normal form
    Derivation          right;  // right_reduct ->* normal form
  };

  // Reduces both reducts to normal form (leftmost). Throws
  // StepBudgetExhausted if either side needs more than max_steps.
  ResolutionReport resolve_critical_pair(RewritingSystem const& system,
                                         CriticalPair const&    p,
                                         std::size_t            max_steps);

  // Exponents (d_{k+1}, d_k, ..., d_1) of a block a^{d_{k+1}} b a^{d_k} ...
  // b a^{d_1} over {a, b}.
  struct ThetaTuple {
    std::vector<BigInt> exponents;

    static ThetaTuple of_block(Word const& block);
    Word              block() const;

    friend bool operator==(ThetaTuple const&, ThetaTuple const&) = default;
  };

  // x < y for tuples of equal arity: the first differing entry, scanning
  // from d_1 towards d_{k+1}, is smaller in x. Tuples of different arity are
  // incomparable.
  bool theta_less(ThetaTuple const& x, ThetaTuple const& y);

  // The maximal {a, b}-block of w containing `position`.
  Word ab_block_at(Word const& w, BigInt const& position);

  // True iff `after` is `before` with ba -> aab applied at step.position and
  // the tuple of the affected block strictly decreases. Throws
  // std::invalid_argument if step is not a forward BA application in before.
  bool check_theta_decrease(Word const& before, Word const& after,
                            Redex const& step);

  enum class Measure : std::uint8_t { length, b_count, theta };

  char const* to_string(Measure m) noexcept;

  struct TerminationCertificate {
    bool                       ok = true;
    std::optional<std::size_t> first_failure;
    std::vector<Measure>       measures;  // one per step checked
  };

  // Checks each forward step against the measure its rule decreases: length
  // for rules with a shorter right-hand side, the number of b's for rules
  // that remove a b, and theta for ba -> aab. Throws std::invalid_argument if
  // the derivation does not verify or contains a reverse step.
  TerminationCertificate certify_termination_trace(RewritingSystem const& system,
                                                   Derivation const&      d);

}  // namespace thuekit
