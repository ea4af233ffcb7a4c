#include "thuekit/system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "thuekit/errors.hpp"

namespace thuekit {

  namespace {

    // Drops always-zero entries and merges neighbours with equal symbols.
    Pattern normalize(Pattern p, std::int64_t n_min, std::string const& id) {
      Pattern out;
      for (auto& r : p) {
        r.exponent.validate(n_min);
        if (r.exponent.is_constant() && r.exponent.c0() == 0) {
          continue;
        }
        if (!out.empty() && out.back().symbol == r.symbol) {
          auto sum = out.back().exponent.plus(r.exponent);
          if (!sum) {
            throw ParseError("schema " + id + ": adjacent runs of '"
                             + std::string(1, r.symbol)
                             + "' cannot be merged");
          }
          out.back().exponent = *sum;
        } else {
          out.push_back(std::move(r));
        }
      }
      return out;
    }

  }  // namespace

  Word instantiate(Pattern const& p, std::int64_t n) {
    Word w;
    for (auto const& r : p) {
      w.append(r.symbol, r.exponent.eval(n));
    }
    return w;
  }

  RuleSchema::RuleSchema(std::string id, Pattern lhs, Pattern rhs,
                         std::int64_t n_min)
      : id_(std::move(id)),
        lhs_(normalize(std::move(lhs), n_min, id_)),
        rhs_(normalize(std::move(rhs), n_min, id_)),
        n_min_(n_min) {
    if (lhs_.empty()) {
      throw ParseError("schema " + id_ + ": left-hand side is empty");
    }
    bool const varies = std::any_of(lhs_.begin(), lhs_.end(), [](auto& r) {
      return !r.exponent.is_constant();
    });
    if (!varies) {
      throw ParseError("schema " + id_
                       + ": left-hand side does not depend on n");
    }
    for (std::int64_t n : degenerate_params()) {
      if (lhs_at(n).empty()) {
        throw ParseError("schema " + id_ + ": left-hand side is empty at n = "
                         + std::to_string(n));
      }
    }
  }

  Word RuleSchema::lhs_at(std::int64_t n) const {
    return thuekit::instantiate(lhs_, n);
  }

  Word RuleSchema::rhs_at(std::int64_t n) const {
    return thuekit::instantiate(rhs_, n);
  }

  Rule RuleSchema::instantiate(std::int64_t n) const {
    if (n < n_min_) {
      throw std::out_of_range("schema " + id_ + " is defined for n >= "
                              + std::to_string(n_min_));
    }
    return Rule{id_, lhs_at(n), rhs_at(n)};
  }

  std::int64_t RuleSchema::lhs_monotone_from() const {
    std::int64_t from = n_min_;
    for (auto const& r : lhs_) {
      from = std::max(from, r.exponent.monotone_from(n_min_));
    }
    return from;
  }

  std::vector<std::int64_t> RuleSchema::degenerate_params() const {
    std::set<std::int64_t> params;
    for (auto const& r : lhs_) {
      auto sol = r.exponent.solve(0, n_min_);
      params.insert(sol.values.begin(), sol.values.end());
    }
    return {params.begin(), params.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // RewritingSystem
  ////////////////////////////////////////////////////////////////////////

  RewritingSystem::RewritingSystem(std::string name, Alphabet alphabet,
                                   std::vector<Rule>       rules,
                                   std::vector<RuleSchema> schemas)
      : name_(std::move(name)),
        alphabet_(std::move(alphabet)),
        rules_(std::move(rules)),
        schemas_(std::move(schemas)) {
    std::set<std::string> ids;
    auto                  check_id = [&ids](std::string const& id) {
      if (id.empty()) {
        throw ParseError("rule with empty id");
      }
      if (!ids.insert(id).second) {
        throw ParseError("duplicate rule id " + id);
      }
    };
    auto check_pattern = [this](Pattern const& p) {
      for (auto const& r : p) {
        if (!alphabet_.contains(r.symbol)) {
          throw UnknownSymbol(r.symbol);
        }
      }
    };
    for (auto const& r : rules_) {
      check_id(r.id);
      if (r.lhs.empty()) {
        throw ParseError("rule " + r.id + ": left-hand side is empty");
      }
      alphabet_.check(r.lhs);
      alphabet_.check(r.rhs);
    }
    for (auto const& s : schemas_) {
      check_id(s.id());
      check_pattern(s.lhs());
      check_pattern(s.rhs());
    }
  }

  std::size_t RewritingSystem::order_of(std::string_view id) const {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (rules_[i].id == id) {
        return i;
      }
    }
    for (std::size_t i = 0; i < schemas_.size(); ++i) {
      if (schemas_[i].id() == id) {
        return rules_.size() + i;
      }
    }
    throw std::out_of_range("no rule with id " + std::string(id));
  }

  Rule const* RewritingSystem::find_rule(std::string_view id) const noexcept {
    for (auto const& r : rules_) {
      if (r.id == id) {
        return &r;
      }
    }
    return nullptr;
  }

  RuleSchema const*
  RewritingSystem::find_schema(std::string_view id) const noexcept {
    for (auto const& s : schemas_) {
      if (s.id() == id) {
        return &s;
      }
    }
    return nullptr;
  }

  Rule RewritingSystem::instance(std::string_view                  id,
                                 std::optional<std::int64_t> param) const {
    if (auto const* r = find_rule(id)) {
      if (param) {
        throw std::invalid_argument("finite rule " + r->id
                                    + " takes no parameter");
      }
      return *r;
    }
    if (auto const* s = find_schema(id)) {
      if (!param) {
        throw std::invalid_argument("schema " + s->id()
                                    + " needs a parameter");
      }
      return s->instantiate(*param);
    }
    throw std::out_of_range("no rule with id " + std::string(id));
  }

  std::vector<RewritingSystem::Instance>
  RewritingSystem::instances(std::int64_t param_bound) const {
    std::vector<Instance> out;
    for (auto const& r : rules_) {
      out.push_back({r, std::nullopt});
    }
    for (auto const& s : schemas_) {
      for (std::int64_t n = s.n_min(); n <= param_bound; ++n) {
        Rule r    = s.instantiate(n);
        bool dup  = std::any_of(rules_.begin(), rules_.end(), [&](auto& f) {
          return f.lhs == r.lhs && f.rhs == r.rhs;
        });
        if (!dup) {
          out.push_back({std::move(r), n});
        }
      }
    }
    return out;
  }

}  // namespace thuekit
