#include "thuekit/dehn.hpp"

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <deque>
#include <map>

#include "thuekit/builtin.hpp"
#include "thuekit/errors.hpp"

namespace thuekit {

  namespace {

    constexpr std::uint32_t kNoParent = 0xffffffffu;

    struct Parent {
      std::uint32_t node;
      std::uint32_t entry;
      std::uint32_t position;
    };

    // One breadth-first search tree over dense words.
    class Side {
     public:
      std::uint32_t add(std::string_view w, std::uint32_t depth, Parent p) {
        auto const id = static_cast<std::uint32_t>(words_.size());
        words_.emplace_back(w);
        index_.emplace(words_.back(), id);
        depth_.push_back(depth);
        parent_.push_back(p);
        return id;
      }

      std::optional<std::uint32_t> find(std::string_view w) const {
        auto it = index_.find(w);
        if (it == index_.end()) {
          return std::nullopt;
        }
        return it->second;
      }

      std::string const& word(std::uint32_t id) const {
        return words_[id];
      }
      std::uint32_t depth(std::uint32_t id) const {
        return depth_[id];
      }
      Parent const& parent(std::uint32_t id) const {
        return parent_[id];
      }
      std::size_t size() const noexcept {
        return words_.size();
      }

      std::vector<std::uint32_t> frontier;
      std::size_t                level = 0;

     private:
      std::deque<std::string>                             words_;
      absl::flat_hash_map<std::string_view, std::uint32_t> index_;
      std::vector<std::uint32_t>                          depth_;
      std::vector<Parent>                                 parent_;
    };

    // Expands one full layer of `side`. For every newly discovered word,
    // on_new(id) is called; returns false if the node limit was hit, in
    // which case the layer is incomplete.
    template <class OnNew>
    bool expand_layer(Side& side, DenseRuleTable const& table,
                      std::size_t node_limit, OnNew&& on_new) {
      std::vector<std::uint32_t> next;
      bool                       ok = true;
      auto const                 d  = static_cast<std::uint32_t>(side.level + 1);
      for (std::uint32_t id : side.frontier) {
        if (!ok) {
          break;
        }
        std::string const& w = side.word(id);
        table.for_each_successor(w, [&](std::string_view img,
                                        DenseRuleTable::Move m) {
          if (!ok || side.find(img)) {
            return;
          }
          if (side.size() >= node_limit) {
            ok = false;
            return;
          }
          std::uint32_t const nid = side.add(img, d, {id, m.entry, m.position});
          next.push_back(nid);
          on_new(nid);
        });
      }
      side.frontier = std::move(next);
      ++side.level;
      return ok;
    }

    // Moves from the root of `side` to `node`.
    std::vector<Parent> path_from_root(Side const& side, std::uint32_t node) {
      std::vector<Parent> moves;
      while (side.parent(node).node != kNoParent) {
        moves.push_back(side.parent(node));
        node = side.parent(node).node;
      }
      std::reverse(moves.begin(), moves.end());
      return moves;
    }

    // Applies the moves of path_from_root forwards.
    void replay_down(DerivationBuilder& b, DenseRuleTable const& table,
                     std::vector<Parent> const& moves) {
      for (auto const& m : moves) {
        b.apply(table.redex(m.entry, m.position));
      }
    }

    // Walks from the end of path_from_root back to the root.
    void replay_up(DerivationBuilder& b, DenseRuleTable const& table,
                   std::vector<Parent> const& moves) {
      for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        b.apply(table.redex(it->entry, it->position).reversed());
      }
    }

    std::size_t checked_length(Word const& w, std::size_t cap) {
      BigInt const len = w.length();
      if (len > cap) {
        throw std::invalid_argument("word " + w.to_string()
                                    + " is longer than the length cap "
                                    + std::to_string(cap));
      }
      return to_size(len);
    }

    bool same_system(RewritingSystem const& a, RewritingSystem const& b) {
      if (a.alphabet() != b.alphabet() || a.rules().size() != b.rules().size()
          || !a.schemas().empty() || !b.schemas().empty()) {
        return false;
      }
      for (auto const& r : a.rules()) {
        bool const found = std::any_of(
            b.rules().begin(), b.rules().end(),
            [&](Rule const& s) { return s.lhs == r.lhs && s.rhs == r.rhs; });
        if (!found) {
          return false;
        }
      }
      return true;
    }

    void all_words(std::string const& alphabet, std::size_t max_len,
                   std::vector<std::string>& out) {
      out.assign(1, std::string());
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() < max_len) {
          for (char c : alphabet) {
            out.push_back(out[i] + c);
          }
        }
      }
    }

  }  // namespace

  char const* to_string(DistanceStatus s) noexcept {
    switch (s) {
      case DistanceStatus::exact:
        return "exact";
      case DistanceStatus::not_found_within_caps:
        return "not-found-within-caps";
      case DistanceStatus::budget_exhausted:
        return "budget-exhausted";
    }
    return "?";
  }

  std::size_t default_length_cap(Word const& u, Word const& v) {
    return 3 * to_size(std::max(u.length(), v.length())) + 4;
  }

  std::vector<Word> thue_neighbors(RewritingSystem const& system, Word const& w,
                                   std::size_t length_cap) {
    checked_length(w, length_cap);
    system.alphabet().check(w);
    DenseRuleTable const                   table(system, length_cap);
    absl::flat_hash_set<std::string>       seen;
    table.for_each_successor(w.to_dense(length_cap),
                             [&](std::string_view img, DenseRuleTable::Move) {
                               seen.emplace(img);
                             });
    std::vector<std::string> dense(seen.begin(), seen.end());
    std::sort(dense.begin(), dense.end(), [](auto const& x, auto const& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    std::vector<Word> out;
    out.reserve(dense.size());
    for (auto const& s : dense) {
      out.push_back(Word::dense(s));
    }
    return out;
  }

  CappedDistanceResult capped_distance(RewritingSystem const& system,
                                       Word const& u, Word const& v,
                                       DistanceOptions const& opts) {
    system.alphabet().check(u);
    system.alphabet().check(v);
    std::size_t const cap =
        opts.length_cap != 0 ? opts.length_cap : default_length_cap(u, v);
    checked_length(u, cap);
    checked_length(v, cap);

    CappedDistanceResult res;
    res.length_cap = cap;
    res.dist_cap   = opts.dist_cap;

    DenseRuleTable const fwd_table(
        system, cap, opts.forward_only ? EdgeSet::forward : EdgeSet::both);
    std::optional<DenseRuleTable> rev_storage;
    if (opts.forward_only) {
      rev_storage.emplace(system, cap, EdgeSet::reverse);
    }
    DenseRuleTable const& bwd_table = rev_storage ? *rev_storage : fwd_table;

    Side F;
    Side B;
    F.frontier.push_back(F.add(u.to_dense(cap), 0, {kNoParent, 0, 0}));
    B.frontier.push_back(B.add(v.to_dense(cap), 0, {kNoParent, 0, 0}));

    std::size_t   best = kNoDistCap;
    std::uint32_t meet_f = 0;
    std::uint32_t meet_b = 0;
    if (F.word(0) == B.word(0)) {
      best = 0;
    }

    auto finish = [&](DistanceStatus status) {
      res.explored = F.size() + B.size();
      if (status == DistanceStatus::exact && best > opts.dist_cap) {
        status = DistanceStatus::not_found_within_caps;
      }
      res.status = status;
      if (status != DistanceStatus::exact) {
        return res;
      }
      res.distance = best;
      if (opts.witness) {
        DerivationBuilder b(system, u);
        replay_down(b, fwd_table, path_from_root(F, meet_f));
        replay_up(b, bwd_table, path_from_root(B, meet_b));
        res.witness = b.finish();
      }
      return res;
    };

    for (;;) {
      std::size_t const settled = F.level + B.level;
      if (best <= settled + 1) {
        return finish(DistanceStatus::exact);
      }
      if (settled >= opts.dist_cap) {
        return finish(DistanceStatus::not_found_within_caps);
      }
      if (F.frontier.empty() || B.frontier.empty()) {
        // One search tree holds its whole component, so every meeting
        // point, in particular the other root, has been seen.
        return finish(best == kNoDistCap
                          ? DistanceStatus::not_found_within_caps
                          : DistanceStatus::exact);
      }
      bool const  forward = F.frontier.size() <= B.frontier.size();
      Side&       X       = forward ? F : B;
      Side const& Y       = forward ? B : F;
      std::size_t const limit =
          opts.node_budget > Y.size() ? opts.node_budget - Y.size() : 0;
      bool const ok = expand_layer(
          X, forward ? fwd_table : bwd_table, limit, [&](std::uint32_t id) {
            if (auto y = Y.find(X.word(id))) {
              std::size_t const total = X.depth(id) + Y.depth(*y);
              if (total < best) {
                best   = total;
                meet_f = forward ? id : *y;
                meet_b = forward ? *y : id;
              }
            }
          });
      if (!ok) {
        return finish(DistanceStatus::budget_exhausted);
      }
    }
  }

  CappedDistanceResult capped_distance(RewritingSystem const& system,
                                       Word const& u, Word const& v,
                                       std::size_t length_cap,
                                       std::size_t dist_cap) {
    DistanceOptions opts;
    opts.length_cap = length_cap;
    opts.dist_cap   = dist_cap;
    return capped_distance(system, u, v, opts);
  }

  ////////////////////////////////////////////////////////////////////////
  // TargetDistanceOracle
  ////////////////////////////////////////////////////////////////////////

  struct TargetDistanceOracle::Impl {
    Impl(RewritingSystem const& sys, Word const& t, std::size_t cap)
        : system(sys), target(t), table(sys, cap) {}

    RewritingSystem system;
    Word            target;
    DenseRuleTable  table;
    Side            ball;
    std::size_t     radius = 0;
  };

  TargetDistanceOracle::TargetDistanceOracle(RewritingSystem const& system,
                                             Word const&            target,
                                             std::size_t            length_cap,
                                             std::size_t ball_budget) {
    system.alphabet().check(target);
    checked_length(target, length_cap);
    impl_ = std::make_unique<Impl>(system, target, length_cap);
    Side& ball = impl_->ball;
    ball.frontier.push_back(
        ball.add(target.to_dense(length_cap), 0, {kNoParent, 0, 0}));
    for (;;) {
      if (ball.frontier.empty()) {
        impl_->radius = kNoDistCap;
        return;
      }
      if (ball.size() >= ball_budget) {
        impl_->radius = ball.level;
        return;
      }
      // A layer may overshoot the budget; it is only cut off at twice the
      // budget, and then the radius stays at the last complete layer.
      std::size_t const before = ball.level;
      if (!expand_layer(ball, impl_->table, 2 * ball_budget,
                        [](std::uint32_t) {})) {
        impl_->radius = before;
        return;
      }
    }
  }

  TargetDistanceOracle::~TargetDistanceOracle() = default;
  TargetDistanceOracle::TargetDistanceOracle(TargetDistanceOracle&&) noexcept =
      default;
  TargetDistanceOracle& TargetDistanceOracle::operator=(
      TargetDistanceOracle&&) noexcept = default;

  Word const& TargetDistanceOracle::target() const noexcept {
    return impl_->target;
  }

  std::size_t TargetDistanceOracle::length_cap() const noexcept {
    return impl_->table.length_cap();
  }

  std::size_t TargetDistanceOracle::radius() const noexcept {
    return impl_->radius;
  }

  std::size_t TargetDistanceOracle::ball_size() const noexcept {
    return impl_->ball.size();
  }

  std::optional<std::size_t> TargetDistanceOracle::ball_distance(
      std::string_view w) const {
    if (auto id = impl_->ball.find(w)) {
      return impl_->ball.depth(*id);
    }
    return std::nullopt;
  }

  CappedDistanceResult TargetDistanceOracle::distance(
      Word const& w, std::size_t dist_cap, std::size_t node_budget,
      bool witness) const {
    auto const& I   = *impl_;
    std::size_t cap = I.table.length_cap();
    I.system.alphabet().check(w);
    checked_length(w, cap);

    CappedDistanceResult res;
    res.length_cap = cap;
    res.dist_cap   = dist_cap;

    Side W;
    W.frontier.push_back(W.add(w.to_dense(cap), 0, {kNoParent, 0, 0}));
    std::size_t   best     = kNoDistCap;
    std::uint32_t meet_w   = 0;
    std::uint32_t meet_b   = 0;
    auto          consider = [&](std::uint32_t id) {
      if (auto b = I.ball.find(W.word(id))) {
        std::size_t const total = W.depth(id) + I.ball.depth(*b);
        if (total < best) {
          best   = total;
          meet_w = id;
          meet_b = *b;
        }
      }
    };
    consider(0);

    auto finish = [&](DistanceStatus status) {
      res.explored = W.size();
      if (status == DistanceStatus::exact && best > dist_cap) {
        status = DistanceStatus::not_found_within_caps;
      }
      res.status = status;
      if (status != DistanceStatus::exact) {
        return res;
      }
      res.distance = best;
      if (witness) {
        DerivationBuilder b(I.system, w);
        replay_down(b, I.table, path_from_root(W, meet_w));
        replay_up(b, I.table, path_from_root(I.ball, meet_b));
        res.witness = b.finish();
      }
      return res;
    };

    std::size_t const r0 = I.radius;
    for (;;) {
      // A shortest path of length D enters the ball at distance D - r0 from
      // w, so once W.level + r0 + 1 >= best nothing shorter remains.
      if (best <= W.level + r0 + 1) {
        return finish(DistanceStatus::exact);
      }
      if (W.level + r0 >= dist_cap) {
        return finish(DistanceStatus::not_found_within_caps);
      }
      if (W.frontier.empty()) {
        return finish(best == kNoDistCap ? DistanceStatus::not_found_within_caps
                                         : DistanceStatus::exact);
      }
      if (!expand_layer(W, I.table, node_budget, consider)) {
        return finish(DistanceStatus::budget_exhausted);
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // ComponentIndex
  ////////////////////////////////////////////////////////////////////////

  std::optional<char> find_absorbing_symbol(RewritingSystem const& system) {
    auto has = [&](std::string const& lhs, char z) {
      Word const l = Word::dense(lhs);
      Word const r = Word::dense(std::string(1, z));
      return std::any_of(
          system.rules().begin(), system.rules().end(),
          [&](Rule const& rule) { return rule.lhs == l && rule.rhs == r; });
    };
    for (char z : system.alphabet().symbols()) {
      bool ok = true;
      for (char x : system.alphabet().symbols()) {
        ok = ok && has(std::string{x, z}, z) && has(std::string{z, x}, z);
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  struct ComponentIndex::Impl {
    Impl(RewritingSystem const& sys, std::size_t cap, std::size_t budget)
        : system(sys), table(sys, cap), node_budget(budget),
          absorbing(find_absorbing_symbol(sys)) {
      if (absorbing) {
        add(std::string(1, *absorbing));
      }
    }

    std::uint32_t add(std::string_view w) {
      if (words.size() >= node_budget) {
        throw Error("component search exceeded node budget of "
                    + std::to_string(node_budget));
      }
      auto const id = static_cast<std::uint32_t>(words.size());
      words.emplace_back(w);
      index.emplace(words.back(), id);
      parent.push_back(id);
      return id;
    }

    std::uint32_t find(std::uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }

    void unite(std::uint32_t x, std::uint32_t y) {
      x = find(x);
      y = find(y);
      if (x != y) {
        parent[std::max(x, y)] = std::min(x, y);
      }
    }

    bool absorbed(std::string_view w) const {
      return absorbing && w.find(*absorbing) != std::string_view::npos;
    }

    std::uint32_t component(std::string_view w) {
      if (w.size() > table.length_cap()) {
        throw std::invalid_argument("word longer than the length cap");
      }
      if (absorbed(w)) {
        return find(0);
      }
      if (auto it = index.find(w); it != index.end()) {
        return find(it->second);
      }
      std::uint32_t const        root = add(w);
      std::vector<std::uint32_t> queue{root};
      bool                       stop = false;
      for (std::size_t i = 0; i < queue.size() && !stop; ++i) {
        std::string const& x = words[queue[i]];
        table.for_each_successor(x, [&](std::string_view img,
                                        DenseRuleTable::Move) {
          if (stop) {
            return;
          }
          if (absorbed(img)) {
            unite(root, 0);
            stop = true;
            return;
          }
          if (auto it = index.find(img); it != index.end()) {
            // Either part of this search or an earlier search that was cut
            // short on reaching the absorbing component.
            if (absorbing && find(it->second) == find(0)) {
              unite(root, 0);
              stop = true;
            }
            return;
          }
          std::uint32_t const id = add(img);
          unite(root, id);
          queue.push_back(id);
        });
      }
      return find(root);
    }

    RewritingSystem                                      system;
    DenseRuleTable                                       table;
    std::size_t                                          node_budget;
    std::optional<char>                                  absorbing;
    std::deque<std::string>                              words;
    absl::flat_hash_map<std::string_view, std::uint32_t> index;
    std::vector<std::uint32_t>                           parent;
  };

  ComponentIndex::ComponentIndex(RewritingSystem const& system,
                                 std::size_t length_cap, std::size_t node_budget)
      : impl_(std::make_unique<Impl>(system, length_cap, node_budget)) {}

  ComponentIndex::~ComponentIndex() = default;
  ComponentIndex::ComponentIndex(ComponentIndex&&) noexcept = default;
  ComponentIndex& ComponentIndex::operator=(ComponentIndex&&) noexcept =
      default;

  std::optional<char> ComponentIndex::absorbing_symbol() const noexcept {
    return impl_->absorbing;
  }

  std::size_t ComponentIndex::length_cap() const noexcept {
    return impl_->table.length_cap();
  }

  std::size_t ComponentIndex::explored() const noexcept {
    return impl_->words.size();
  }

  std::uint32_t ComponentIndex::component(std::string_view w) {
    impl_->system.alphabet().check(w);
    return impl_->component(w);
  }

  bool ComponentIndex::connected(Word const& u, Word const& v) {
    std::size_t const cap = impl_->table.length_cap();
    return component(u.to_dense(cap)) == component(v.to_dense(cap));
  }

  ////////////////////////////////////////////////////////////////////////
  // Profiles and context checks
  ////////////////////////////////////////////////////////////////////////

  std::vector<DehnProfilePoint> dehn_profile(RewritingSystem const& system,
                                             std::size_t            max_n,
                                             DehnProfileOptions const& opts) {
    std::size_t const cap =
        opts.length_cap != 0 ? opts.length_cap : 2 * max_n + 4;
    if (max_n > cap) {
      throw std::invalid_argument("max_n exceeds the length cap");
    }
    std::vector<std::string> words;
    all_words(system.alphabet().symbols(), max_n, words);

    // Group words by congruence class.
    std::map<std::string, std::vector<std::size_t>> classes;
    if (same_system(system, builtin_system(SystemId::R))) {
      for (std::size_t i = 0; i < words.size(); ++i) {
        classes[nf_S(Word::dense(words[i])).to_string()].push_back(i);
      }
    } else {
      ComponentIndex comps(system, cap, opts.node_budget);
      for (std::size_t i = 0; i < words.size(); ++i) {
        classes[std::to_string(comps.component(words[i]))].push_back(i);
      }
    }

    struct Best {
      std::size_t value = 0;
      std::size_t u = 0, v = 0;
      bool        any   = false;
      bool        exact = true;
    };
    std::vector<Best> by_total(max_n + 1);
    for (auto const& [key, members] : classes) {
      for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a; b < members.size(); ++b) {
          std::size_t const i = members[a], j = members[b];
          std::size_t const total = words[i].size() + words[j].size();
          if (total > max_n) {
            continue;
          }
          std::size_t d     = 0;
          bool        exact = true;
          if (i != j) {
            DistanceOptions o;
            o.length_cap  = cap;
            o.dist_cap    = opts.dist_cap;
            o.node_budget = opts.node_budget;
            o.witness     = false;
            auto const r  = capped_distance(system, Word::dense(words[i]),
                                            Word::dense(words[j]), o);
            exact = r.status == DistanceStatus::exact;
            d     = r.distance.value_or(0);
          }
          Best& slot = by_total[total];
          slot.exact = slot.exact && exact;
          bool const better =
              !slot.any || d > slot.value
              || (d == slot.value && std::pair(i, j) < std::pair(slot.u, slot.v));
          if (exact && better) {
            slot = {d, i, j, true, slot.exact};
          }
        }
      }
    }

    std::vector<DehnProfilePoint> out;
    Best                          run;
    for (std::size_t n = 0; n <= max_n; ++n) {
      Best const& s = by_total[n];
      run.exact     = run.exact && s.exact;
      if (s.any && (!run.any || s.value > run.value)) {
        run = {s.value, s.u, s.v, true, run.exact};
      }
      DehnProfilePoint p;
      p.n     = n;
      p.value = run.value;
      p.exact = run.exact;
      if (run.any) {
        p.witness_u = Word::dense(words[run.u]);
        p.witness_v = Word::dense(words[run.v]);
      }
      out.push_back(std::move(p));
    }
    return out;
  }

  ContextCheck check_context_monotonicity(RewritingSystem const& system,
                                          Word const& u, Word const& v,
                                          Word const& p, Word const& q,
                                          DistanceOptions const& opts) {
    ContextCheck c;
    c.inner = capped_distance(system, u, v, opts);
    if (c.inner.status != DistanceStatus::exact) {
      return c;
    }
    DistanceOptions outer = opts;
    outer.length_cap      = c.inner.length_cap + to_size(p.length() + q.length());
    // The lifted derivation p.(u -> v).q has length d(u, v), so searching
    // up to that length decides the inequality.
    outer.dist_cap = *c.inner.distance;
    c.outer        = capped_distance(system, p + u + q, p + v + q, outer);
    c.holds        = c.outer.status == DistanceStatus::exact
              && *c.outer.distance <= *c.inner.distance;
    return c;
  }

}  // namespace thuekit
