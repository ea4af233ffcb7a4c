#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "thuekit/kernels.hpp"
#include "thuekit/rewriting.hpp"
#include "thuekit/system.hpp"

namespace thuekit {

  // One direction of one rule instance, as dense strings.
  struct DenseEntry {
    std::string source;
    std::string target;
    std::size_t instance;  // index into DenseRuleTable::instances()
    Direction   direction;
  };

  enum class EdgeSet : std::uint8_t { forward, reverse, both };

  // The rule instances of a system that can act on dense words of length at
  // most length_cap: every instance whose two sides both fit. Used by the
  // breadth-first searches, where words never exceed the cap.
  class DenseRuleTable {
   public:
    DenseRuleTable(RewritingSystem const& system, std::size_t length_cap,
                   EdgeSet edges = EdgeSet::both);

    std::size_t length_cap() const noexcept {
      return length_cap_;
    }

    std::vector<RewritingSystem::Instance> const& instances() const noexcept {
      return instances_;
    }

    std::vector<DenseEntry> const& entries() const noexcept {
      return entries_;
    }

    Redex redex(std::uint32_t entry, std::uint32_t position) const;

    struct Move {
      std::uint32_t entry;
      std::uint32_t position;
    };

    // Calls f(image, move) for every one-step image of w whose length is at
    // most length_cap. Images are not deduplicated.
    template <class F>
    void for_each_successor(std::string_view w, F&& f) const {
      std::string                image;
      std::vector<std::uint32_t> positions;
      for (auto const& g : groups_) {
        positions.clear();
        kernels::find_all(w, g.source, positions);
        if (positions.empty()) {
          continue;
        }
        for (std::uint32_t e : g.entries) {
          auto const& t = entries_[e].target;
          if (w.size() - g.source.size() + t.size() > length_cap_) {
            continue;
          }
          for (std::uint32_t p : positions) {
            image.assign(w.substr(0, p));
            image += t;
            image += w.substr(p + g.source.size());
            f(std::string_view(image), Move{e, p});
          }
        }
      }
    }

   private:
    struct Group {
      std::string                source;
      std::vector<std::uint32_t> entries;
    };

    std::size_t                           length_cap_;
    std::vector<RewritingSystem::Instance> instances_;
    std::vector<DenseEntry>               entries_;
    std::vector<Group>                    groups_;
  };

}  // namespace thuekit
