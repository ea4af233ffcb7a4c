#include "thuekit/dense.hpp"

#include <algorithm>
#include <map>


namespace thuekit {

  namespace {

    bool fits(Rule const& r, std::size_t cap) {
      return r.lhs.length() <= cap && r.rhs.length() <= cap;
    }

  }  // namespace

  DenseRuleTable::DenseRuleTable(RewritingSystem const& system,
                                 std::size_t length_cap, EdgeSet edges)
      : length_cap_(length_cap) {
    for (auto const& r : system.rules()) {
      if (fits(r, length_cap)) {
        instances_.push_back({r, std::nullopt});
      }
    }
    for (auto const& s : system.schemas()) {
      std::int64_t const mono = s.lhs_monotone_from();
      for (std::int64_t n = s.n_min();; ++n) {
        Rule r = s.instantiate(n);
        if (r.lhs.length() > length_cap) {
          if (n >= mono) {
            break;
          }
          continue;
        }
        if (!fits(r, length_cap)) {
          continue;
        }
        bool const duplicate = std::any_of(
            system.rules().begin(), system.rules().end(), [&](Rule const& f) {
              return f.lhs == r.lhs && f.rhs == r.rhs;
            });
        if (!duplicate) {
          instances_.push_back({std::move(r), n});
        }
      }
    }

    std::map<std::string, std::size_t> group_of;
    auto add = [&](std::string source, std::string target, std::size_t inst,
                   Direction dir) {
      auto const e = static_cast<std::uint32_t>(entries_.size());
      auto [it, fresh] = group_of.try_emplace(source, groups_.size());
      if (fresh) {
        groups_.push_back({source, {}});
      }
      groups_[it->second].entries.push_back(e);
      entries_.push_back({std::move(source), std::move(target), inst, dir});
    };
    if (edges != EdgeSet::reverse) {
      for (std::size_t i = 0; i < instances_.size(); ++i) {
        auto const& r = instances_[i].rule;
        add(r.lhs.to_dense(), r.rhs.to_dense(), i, Direction::forward);
      }
    }
    if (edges != EdgeSet::forward) {
      for (std::size_t i = 0; i < instances_.size(); ++i) {
        auto const& r = instances_[i].rule;
        add(r.rhs.to_dense(), r.lhs.to_dense(), i, Direction::reverse);
      }
    }
  }

  Redex DenseRuleTable::redex(std::uint32_t entry,
                              std::uint32_t position) const {
    auto const& e    = entries_.at(entry);
    auto const& inst = instances_[e.instance];
    return Redex{inst.rule.id, inst.param, position, e.direction};
  }

}  // namespace thuekit
