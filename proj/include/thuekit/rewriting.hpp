#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thuekit/system.hpp"
#include "thuekit/word.hpp"

namespace thuekit {

  enum class Direction : std::uint8_t { forward, reverse };

  char const* to_string(Direction d) noexcept;

  // An occurrence of a rule's source side (lhs when forward, rhs when
  // reverse) starting at `position` in dense coordinates.
  struct Redex {
    std::string                 rule_id;
    std::optional<std::int64_t> param;
    BigInt                      position;
    Direction                   direction = Direction::forward;

    Redex reversed() const;

    std::string to_string() const;

    friend bool operator==(Redex const&, Redex const&) = default;
  };

  struct FindOptions {
    bool include_reverse = false;
    // Reverse occurrences of schema right-hand sides are only searched for
    // n <= param_cap; forward schema matching is exact and unbounded.
    std::int64_t param_cap = 64;
  };

  // Ordered by position, then rule declaration order, then param, then
  // direction (forward first).
  std::vector<Redex> find_redexes(RewritingSystem const& system, Word const& w,
                                  FindOptions const& opts = {});

  bool is_irreducible(RewritingSystem const& system, Word const& w);

  // Throws NotARedex if r does not occur at its position.
  Word apply_redex(RewritingSystem const& system, Word const& w, Redex const& r);

  struct RewriteStep {
    Redex         redex;
    std::uint64_t result_hash;

    friend bool operator==(RewriteStep const&, RewriteStep const&) = default;
  };

  struct Derivation {
    Word                     start;
    std::vector<RewriteStep> steps;
    Word                     end;

    std::size_t size() const noexcept {
      return steps.size();
    }
  };

  // Accumulates a derivation while tracking the current word.
  class DerivationBuilder {
   public:
    DerivationBuilder(RewritingSystem const& system, Word start);

    Word const& current() const noexcept {
      return current_;
    }

    std::size_t size() const noexcept {
      return steps_.size();
    }

    void apply(Redex const& r);
    void apply(std::string rule_id, std::optional<std::int64_t> param,
               BigInt position, Direction dir = Direction::forward);

    // Appends another derivation that starts at the current word.
    void append(Derivation const& d);

    Derivation finish() const;

   private:
    RewritingSystem const*   system_;
    Word                     start_;
    Word                     current_;
    std::vector<RewriteStep> steps_;
  };

  struct VerifyResult {
    bool                       ok = true;
    std::optional<std::size_t> first_failure;  // index into steps; size() for
                                               // a wrong end word
    std::string reason;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  VerifyResult verify_derivation(RewritingSystem const& system,
                                 Derivation const&      d);

  struct Strategy {
    enum class Kind : std::uint8_t { leftmost, rightmost, random };
    Kind          kind = Kind::leftmost;
    std::uint64_t seed = 0;

    static Strategy leftmost() {
      return {Kind::leftmost, 0};
    }
    static Strategy rightmost() {
      return {Kind::rightmost, 0};
    }
    static Strategy random(std::uint64_t seed) {
      return {Kind::random, seed};
    }
  };

  struct Reduction {
    Word       normal_form;
    Derivation derivation;
  };

  // Forward reduction until irreducible. Throws StepBudgetExhausted.
  Reduction reduce_to_normal_form(RewritingSystem const& system, Word const& w,
                                  Strategy strategy, std::size_t max_steps);

  // Leftmost reduction without recording the derivation.
  Word normal_form(RewritingSystem const& system, Word const& w,
                   std::size_t max_steps = 10'000'000);

}  // namespace thuekit
