#include "thuekit/rewriting.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "thuekit/errors.hpp"

namespace thuekit {

  namespace {

    // Redexes inside a single run (e.g. "00" in 0^k, or an empty source) are
    // enumerated position by position; refuse pathological counts.
    constexpr std::size_t kMaxPositionsPerRule = 10'000'000;

    std::vector<BigInt> run_starts(Word const& w) {
      std::vector<BigInt> starts;
      starts.reserve(w.run_count());
      BigInt pos = 0;
      for (auto const& r : w.runs()) {
        starts.push_back(pos);
        pos += r.exponent;
      }
      return starts;
    }

    void guard(BigInt const& count) {
      if (count > kMaxPositionsPerRule) {
        throw std::length_error("too many redex positions ("
                                + count.str() + ")");
      }
    }

    // All start positions of `pat` in `text`, ascending.
    void occurrences(Word const& text, std::vector<BigInt> const& starts,
                     Word const& pat, std::vector<BigInt>& out) {
      auto const& T = text.runs();
      auto const& P = pat.runs();
      std::size_t const m = P.size();
      if (m == 0) {
        BigInt const len = text.length();
        guard(len + 1);
        for (BigInt p = 0; p <= len; ++p) {
          out.push_back(p);
        }
        return;
      }
      if (m == 1) {
        for (std::size_t j = 0; j < T.size(); ++j) {
          if (T[j].symbol != P[0].symbol || T[j].exponent < P[0].exponent) {
            continue;
          }
          BigInt const count = T[j].exponent - P[0].exponent + 1;
          guard(count);
          for (BigInt t = 0; t < count; ++t) {
            out.push_back(starts[j] + t);
          }
        }
        return;
      }
      if (T.size() < m) {
        return;
      }
      for (std::size_t j = 0; j + m <= T.size(); ++j) {
        if (T[j].symbol != P[0].symbol || T[j].exponent < P[0].exponent) {
          continue;
        }
        bool ok = true;
        for (std::size_t i = 1; i + 1 < m && ok; ++i) {
          ok = T[j + i] == P[i];
        }
        auto const& last = T[j + m - 1];
        ok = ok && last.symbol == P[m - 1].symbol
             && last.exponent >= P[m - 1].exponent;
        if (ok) {
          out.push_back(starts[j] + T[j].exponent - P[0].exponent);
        }
      }
    }

    // Parameters n for which lhs(n) might occur in `text`. Every candidate
    // is confirmed afterwards by instantiating lhs(n) and scanning.
    std::set<std::int64_t> schema_candidates(RuleSchema const& schema,
                                             Word const&       text) {
      std::set<std::int64_t> cand;
      auto const             degenerate = schema.degenerate_params();
      cand.insert(degenerate.begin(), degenerate.end());

      auto const&        P     = schema.lhs();
      auto const&        T     = text.runs();
      std::size_t const  m     = P.size();
      std::int64_t const n_min = schema.n_min();

      // Enumerate n while the bounded end runs can still fit.
      auto scan_bounds = [&](ExponentExpr const& first, BigInt const& first_max,
                             ExponentExpr const* last, BigInt const* last_max) {
        std::int64_t mono = first.monotone_from(n_min);
        if (last != nullptr) {
          mono = std::max(mono, last->monotone_from(n_min));
        }
        for (std::int64_t n = n_min;; ++n) {
          BigInt const v0      = first.eval(n);
          bool const   fits0   = v0 <= first_max;
          bool         fits1   = true;
          bool         beyond1 = false;
          if (last != nullptr) {
            BigInt const v1 = last->eval(n);
            fits1           = v1 <= *last_max;
            beyond1         = !last->is_constant() && !fits1;
          }
          if (fits0 && fits1) {
            cand.insert(n);
            guard(cand.size());
          }
          bool const beyond0 = !first.is_constant() && !fits0;
          if (n >= mono && (beyond0 || beyond1)) {
            break;
          }
        }
      };

      if (m == 1) {
        for (auto const& run : T) {
          if (run.symbol == P[0].symbol) {
            scan_bounds(P[0].exponent, run.exponent, nullptr, nullptr);
          }
        }
        return cand;
      }
      for (std::size_t j = 0; j + m <= T.size(); ++j) {
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i) {
          ok = T[j + i].symbol == P[i].symbol;
        }
        if (!ok) {
          continue;
        }
        std::optional<std::set<std::int64_t>> fixed;
        for (std::size_t i = 1; i + 1 < m && ok; ++i) {
          auto const&  e = P[i].exponent;
          BigInt const x = T[j + i].exponent;
          if (e.is_constant()) {
            ok = e.c0() == x;
            continue;
          }
          auto sol = e.solve(x, n_min);
          std::set<std::int64_t> here(sol.values.begin(), sol.values.end());
          if (!fixed) {
            fixed = std::move(here);
          } else {
            std::set<std::int64_t> both;
            std::set_intersection(fixed->begin(), fixed->end(), here.begin(),
                                  here.end(),
                                  std::inserter(both, both.begin()));
            fixed = std::move(both);
          }
        }
        if (!ok) {
          continue;
        }
        if (fixed) {
          cand.insert(fixed->begin(), fixed->end());
        } else {
          scan_bounds(P[0].exponent, T[j].exponent, &P[m - 1].exponent,
                      &T[j + m - 1].exponent);
        }
      }
      return cand;
    }

    struct Keyed {
      Redex       redex;
      std::size_t order;
    };

  }  // namespace

  char const* to_string(Direction d) noexcept {
    return d == Direction::forward ? "forward" : "reverse";
  }

  Redex Redex::reversed() const {
    Redex r = *this;
    r.direction = direction == Direction::forward ? Direction::reverse
                                                  : Direction::forward;
    return r;
  }

  std::string Redex::to_string() const {
    std::string s = rule_id;
    if (param) {
      s += "(n=" + std::to_string(*param) + ")";
    }
    s += "@" + position.str();
    if (direction == Direction::reverse) {
      s += "^-1";
    }
    return s;
  }

  std::vector<Redex> find_redexes(RewritingSystem const& system, Word const& w,
                                  FindOptions const& opts) {
    system.alphabet().check(w);
    auto const          starts = run_starts(w);
    std::vector<Keyed>  found;
    std::vector<BigInt> pos;

    auto const& rules = system.rules();
    for (std::size_t i = 0; i < rules.size(); ++i) {
      pos.clear();
      occurrences(w, starts, rules[i].lhs, pos);
      for (auto& p : pos) {
        found.push_back({{rules[i].id, std::nullopt, p, Direction::forward}, i});
      }
      if (opts.include_reverse) {
        pos.clear();
        occurrences(w, starts, rules[i].rhs, pos);
        for (auto& p : pos) {
          found.push_back(
              {{rules[i].id, std::nullopt, p, Direction::reverse}, i});
        }
      }
    }
    auto const& schemas = system.schemas();
    for (std::size_t k = 0; k < schemas.size(); ++k) {
      auto const&       s     = schemas[k];
      std::size_t const order = rules.size() + k;
      for (std::int64_t n : schema_candidates(s, w)) {
        pos.clear();
        occurrences(w, starts, s.lhs_at(n), pos);
        for (auto& p : pos) {
          found.push_back({{s.id(), n, p, Direction::forward}, order});
        }
      }
      if (opts.include_reverse) {
        for (std::int64_t n = s.n_min(); n <= opts.param_cap; ++n) {
          pos.clear();
          occurrences(w, starts, s.rhs_at(n), pos);
          for (auto& p : pos) {
            found.push_back({{s.id(), n, p, Direction::reverse}, order});
          }
        }
      }
    }

    std::sort(found.begin(), found.end(), [](Keyed const& x, Keyed const& y) {
      if (x.redex.position != y.redex.position) {
        return x.redex.position < y.redex.position;
      }
      return std::tie(x.order, x.redex.param, x.redex.direction)
             < std::tie(y.order, y.redex.param, y.redex.direction);
    });
    std::vector<Redex> out;
    out.reserve(found.size());
    for (auto& k : found) {
      out.push_back(std::move(k.redex));
    }
    return out;
  }

  bool is_irreducible(RewritingSystem const& system, Word const& w) {
    return find_redexes(system, w).empty();
  }

  Word apply_redex(RewritingSystem const& system, Word const& w,
                   Redex const& r) {
    Rule rule;
    try {
      rule = system.instance(r.rule_id, r.param);
    } catch (std::exception const& e) {
      throw NotARedex(e.what());
    }
    bool const  fwd    = r.direction == Direction::forward;
    Word const& source = fwd ? rule.lhs : rule.rhs;
    Word const& target = fwd ? rule.rhs : rule.lhs;
    BigInt const len   = source.length();
    if (r.position < 0 || r.position + len > w.length()
        || w.drop(r.position).prefix(len) != source) {
      throw NotARedex(r.to_string() + " does not occur in " + w.to_string());
    }
    Word out = w.prefix(r.position);
    out.append(target);
    out.append(w.drop(r.position + len));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Derivations
  ////////////////////////////////////////////////////////////////////////

  DerivationBuilder::DerivationBuilder(RewritingSystem const& system,
                                       Word                   start)
      : system_(&system), start_(start), current_(std::move(start)) {}

  void DerivationBuilder::apply(Redex const& r) {
    current_ = apply_redex(*system_, current_, r);
    steps_.push_back({r, current_.hash()});
  }

  void DerivationBuilder::apply(std::string rule_id,
                                std::optional<std::int64_t> param,
                                BigInt position, Direction dir) {
    apply(Redex{std::move(rule_id), param, std::move(position), dir});
  }

  void DerivationBuilder::append(Derivation const& d) {
    if (d.start != current_) {
      throw std::invalid_argument("derivation does not start at "
                                  + current_.to_string());
    }
    for (auto const& s : d.steps) {
      apply(s.redex);
    }
  }

  Derivation DerivationBuilder::finish() const {
    return Derivation{start_, steps_, current_};
  }

  VerifyResult verify_derivation(RewritingSystem const& system,
                                 Derivation const&      d) {
    Word cur = d.start;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      auto const& step = d.steps[i];
      try {
        cur = apply_redex(system, cur, step.redex);
      } catch (std::exception const& e) {
        return {false, i, e.what()};
      }
      if (cur.hash() != step.result_hash) {
        return {false, i, "result of step does not match recorded hash"};
      }
    }
    if (cur != d.end) {
      return {false, d.steps.size(), "derivation does not end at "
                                         + d.end.to_string()};
    }
    return {};
  }

  Reduction reduce_to_normal_form(RewritingSystem const& system, Word const& w,
                                  Strategy strategy, std::size_t max_steps) {
    if (max_steps == 0) {
      throw std::invalid_argument("max_steps must be positive");
    }
    std::mt19937_64   rng(strategy.seed);
    DerivationBuilder b(system, w);
    for (;;) {
      auto const redexes = find_redexes(system, b.current());
      if (redexes.empty()) {
        break;
      }
      if (b.size() == max_steps) {
        throw StepBudgetExhausted(max_steps);
      }
      std::size_t pick = 0;
      switch (strategy.kind) {
        case Strategy::Kind::leftmost:
          break;
        case Strategy::Kind::rightmost: {
          pick = redexes.size() - 1;
          while (pick > 0
                 && redexes[pick - 1].position == redexes[pick].position) {
            --pick;
          }
          break;
        }
        case Strategy::Kind::random:
          pick = static_cast<std::size_t>(rng() % redexes.size());
          break;
      }
      b.apply(redexes[pick]);
    }
    Derivation d = b.finish();
    return {d.end, std::move(d)};
  }

  Word normal_form(RewritingSystem const& system, Word const& w,
                   std::size_t max_steps) {
    Word cur = w;
    for (std::size_t steps = 0;; ++steps) {
      auto const redexes = find_redexes(system, cur);
      if (redexes.empty()) {
        return cur;
      }
      if (steps == max_steps) {
        throw StepBudgetExhausted(max_steps);
      }
      cur = apply_redex(system, cur, redexes.front());
    }
  }

}  // namespace thuekit
