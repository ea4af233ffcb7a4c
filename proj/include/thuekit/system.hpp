#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thuekit/exponent.hpp"
#include "thuekit/word.hpp"

namespace thuekit {

  struct Rule {
    std::string id;
    Word        lhs;
    Word        rhs;

    friend bool operator==(Rule const&, Rule const&) = default;
  };

  struct PatternRun {
    char         symbol;
    ExponentExpr exponent;

    friend bool operator==(PatternRun const&, PatternRun const&) = default;
  };

  using Pattern = std::vector<PatternRun>;

  // A family of rules lhs(n) -> rhs(n) for n >= n_min.
  class RuleSchema {
   public:
    RuleSchema(std::string id, Pattern lhs, Pattern rhs, std::int64_t n_min);

    std::string const& id() const noexcept {
      return id_;
    }
    Pattern const& lhs() const noexcept {
      return lhs_;
    }
    Pattern const& rhs() const noexcept {
      return rhs_;
    }
    std::int64_t n_min() const noexcept {
      return n_min_;
    }

    Word lhs_at(std::int64_t n) const;
    Word rhs_at(std::int64_t n) const;
    Rule instantiate(std::int64_t n) const;

    // Beyond this parameter every lhs exponent is non-decreasing in n, so
    // once lhs_at(n) is longer than some bound it stays longer.
    std::int64_t lhs_monotone_from() const;

    // Parameters where some lhs exponent vanishes and runs may merge.
    std::vector<std::int64_t> degenerate_params() const;

   private:
    std::string  id_;
    Pattern      lhs_;
    Pattern      rhs_;
    std::int64_t n_min_;
  };

  Word instantiate(Pattern const& p, std::int64_t n);

  class RewritingSystem {
   public:
    RewritingSystem() = default;
    RewritingSystem(std::string name, Alphabet alphabet, std::vector<Rule> rules,
                    std::vector<RuleSchema> schemas = {});

    std::string const& name() const noexcept {
      return name_;
    }
    Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }
    std::vector<Rule> const& rules() const noexcept {
      return rules_;
    }
    std::vector<RuleSchema> const& schemas() const noexcept {
      return schemas_;
    }

    // Declaration order: finite rules first, then schemas. Used to order
    // redexes deterministically.
    std::size_t order_of(std::string_view id) const;

    Rule const*       find_rule(std::string_view id) const noexcept;
    RuleSchema const* find_schema(std::string_view id) const noexcept;

    // The concrete rule for (id, param); param is required for schemas and
    // must be absent for finite rules.
    Rule instance(std::string_view id, std::optional<std::int64_t> param) const;

    struct Instance {
      Rule                        rule;
      std::optional<std::int64_t> param;
    };

    // Every finite rule followed by schema instances with n <= param_bound.
    // Schema instances identical to a finite rule are left out.
    std::vector<Instance> instances(std::int64_t param_bound) const;

   private:
    std::string             name_;
    Alphabet                alphabet_;
    std::vector<Rule>       rules_;
    std::vector<RuleSchema> schemas_;
  };

}  // namespace thuekit
