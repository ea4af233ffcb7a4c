#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thuekit/dense.hpp"
#include "thuekit/rewriting.hpp"
#include "thuekit/system.hpp"

namespace thuekit {

  enum class DistanceStatus : std::uint8_t {
    exact,
    not_found_within_caps,
    // The node budget ran out before the search could decide.
    budget_exhausted,
  };

  // "exact", "not-found-within-caps", "budget-exhausted".
  char const* to_string(DistanceStatus s) noexcept;

  inline constexpr std::size_t kNoDistCap =
      std::numeric_limits<std::size_t>::max() / 4;
  inline constexpr std::size_t kDefaultNodeBudget = 20'000'000;

  struct DistanceOptions {
    std::size_t length_cap  = 0;  // 0: default_length_cap(u, v)
    std::size_t dist_cap    = kNoDistCap;
    std::size_t node_budget = kDefaultNodeBudget;
    bool        forward_only = false;  // u ->* v instead of u <->* v
    bool        witness      = true;
  };

  // 3 * max(|u|, |v|) + 4.
  std::size_t default_length_cap(Word const& u, Word const& v);

  struct CappedDistanceResult {
    std::optional<std::size_t> distance;
    DistanceStatus             status = DistanceStatus::not_found_within_caps;
    std::size_t                length_cap = 0;
    std::size_t                dist_cap   = 0;
    std::size_t                explored   = 0;
    // A shortest derivation from u to v when status is exact and a witness
    // was requested.
    std::optional<Derivation> witness;
  };

  // All words one forward or reverse step away from w with length at most
  // length_cap, deduplicated, in shortlex order.
  std::vector<Word> thue_neighbors(RewritingSystem const& system, Word const& w,
                                   std::size_t length_cap);

  // Shortest path between u and v in the Thue graph restricted to words of
  // length <= length_cap. Bidirectional breadth-first search.
  CappedDistanceResult capped_distance(RewritingSystem const& system,
                                       Word const& u, Word const& v,
                                       DistanceOptions const& opts = {});

  CappedDistanceResult capped_distance(RewritingSystem const& system,
                                       Word const& u, Word const& v,
                                       std::size_t length_cap,
                                       std::size_t dist_cap = kNoDistCap);

  // Distances to a fixed target for many sources. The ball of all words
  // within `radius()` of the target is stored with exact distances; a query
  // searches from the source until it provably meets the ball along a
  // shortest path.
  class TargetDistanceOracle {
   public:
    TargetDistanceOracle(RewritingSystem const& system, Word const& target,
                         std::size_t length_cap,
                         std::size_t ball_budget = 2'000'000);
    ~TargetDistanceOracle();
    TargetDistanceOracle(TargetDistanceOracle&&) noexcept;
    TargetDistanceOracle& operator=(TargetDistanceOracle&&) noexcept;

    Word const& target() const noexcept;
    std::size_t length_cap() const noexcept;

    // Every word at distance <= radius() from the target lies in the ball.
    // If the target's component is finite and fits, this is kNoDistCap.
    std::size_t radius() const noexcept;
    std::size_t ball_size() const noexcept;

    std::optional<std::size_t> ball_distance(std::string_view w) const;

    CappedDistanceResult distance(Word const& w,
                                  std::size_t dist_cap    = kNoDistCap,
                                  std::size_t node_budget = kDefaultNodeBudget,
                                  bool        witness     = true) const;

   private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
  };

  // Connected components of the capped Thue graph, explored on demand.
  //
  // If the system has rules xz -> z and zx -> z for a symbol z and every x,
  // all words containing z that fit the cap form one component (each
  // collapses to "z" without growing), so they are never expanded.
  class ComponentIndex {
   public:
    ComponentIndex(RewritingSystem const& system, std::size_t length_cap,
                   std::size_t node_budget = 50'000'000);
    ~ComponentIndex();
    ComponentIndex(ComponentIndex&&) noexcept;
    ComponentIndex& operator=(ComponentIndex&&) noexcept;

    std::optional<char> absorbing_symbol() const noexcept;
    std::size_t         length_cap() const noexcept;
    std::size_t         explored() const noexcept;

    // Component representative; equal ids mean connected within the cap.
    // Throws Error when the node budget is exceeded.
    std::uint32_t component(std::string_view w);

    bool connected(Word const& u, Word const& v);

   private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
  };

  // A symbol z with xz -> z and zx -> z among the finite rules for all x.
  std::optional<char> find_absorbing_symbol(RewritingSystem const& system);

  struct DehnProfilePoint {
    std::size_t n     = 0;
    std::size_t value = 0;
    Word        witness_u;
    Word        witness_v;
    // False when some pair's distance could not be settled within the caps;
    // value is then only a lower bound.
    bool exact = true;
  };

  struct DehnProfileOptions {
    std::size_t length_cap  = 0;  // 0: 2 * max_n + 4
    std::size_t dist_cap    = kNoDistCap;
    std::size_t node_budget = 2'000'000;
  };

  // D(n) for n = 0..max_n: the largest capped distance between congruent
  // words with |u| + |v| <= n. Congruence is decided by S-normal forms when
  // the system is the builtin R, and by capped connectivity otherwise.
  std::vector<DehnProfilePoint> dehn_profile(RewritingSystem const& system,
                                             std::size_t           max_n,
                                             DehnProfileOptions const& opts = {});

  struct ContextCheck {
    bool                 holds = false;
    CappedDistanceResult inner;  // d(u, v)
    CappedDistanceResult outer;  // d(puq, pvq), caps enlarged by |p| + |q|
  };

  // d(puq, pvq) <= d(u, v). Requires d(u, v) to be settled within the caps;
  // otherwise holds is false and inner.status says why.
  ContextCheck check_context_monotonicity(RewritingSystem const& system,
                                          Word const& u, Word const& v,
                                          Word const& p, Word const& q,
                                          DistanceOptions const& opts = {});

}  // namespace thuekit
