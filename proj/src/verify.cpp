#include "thuekit/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "thuekit/builtin.hpp"
#include "thuekit/confluence.hpp"
#include "thuekit/constructions.hpp"
#include "thuekit/cross_section.hpp"
#include "thuekit/dehn.hpp"
#include "thuekit/errors.hpp"
#include "thuekit/rewriting.hpp"

namespace thuekit {

  namespace {

    constexpr std::size_t kMaxFailures = 5;

    bool full(SuiteOptions const& o) {
      return o.scale == SuiteScale::full;
    }

    SuiteResult named(std::string name) {
      SuiteResult r;
      r.name = std::move(name);
      return r;
    }

    void fail(SuiteResult& r, std::string msg) {
      r.pass = false;
      if (r.failures.size() < kMaxFailures) {
        r.failures.push_back(std::move(msg));
      }
    }

    // Every word over `alphabet` of length <= max_len, shortest first.
    std::vector<std::string> words_upto(std::string const& alphabet, std::size_t max_len) {
      std::vector<std::string> out{""};
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() < max_len) {
          for (char c : alphabet) {
            out.push_back(out[i] + c);
          }
        }
      }
      return out;
    }

    std::string show(std::string const& dense) {
      return dense.empty() ? "\"\"" : Word::dense(dense).to_string();
    }

    std::string show(Word const& w) {
      return w.empty() ? "\"\"" : w.to_string();
    }

    Word const& zero() {
      static Word const z = Word::dense("0");
      return z;
    }

    // Interns normal forms so that words can be compared by class id.
    class ClassIds {
     public:
      std::uint32_t id(Word const& nf) {
        return ids_.emplace(nf, static_cast<std::uint32_t>(ids_.size())).first->second;
      }

     private:
      std::unordered_map<Word, std::uint32_t> ids_;
    };

    // 50 seeded random maximal reductions of each word agree with the
    // leftmost normal form. With `certify`, the first random trace of every
    // word is checked against the termination measures.
    void random_strategy_sweep(SuiteResult& res, RewritingSystem const& sys,
                               std::vector<std::string> const& words,
                               std::size_t trials, std::uint64_t seed, bool certify) {
      std::mt19937_64 rng(seed);
      std::size_t     reductions = 0;
      for (auto const& dense : words) {
        Word const w   = Word::dense(dense);
        Word const ref = normal_form(sys, w);
        for (std::size_t t = 0; t < trials; ++t) {
          auto const red = reduce_to_normal_form(sys, w, Strategy::random(rng()), 1'000'000);
          ++reductions;
          if (red.normal_form != ref) {
            fail(res, "random reduction of " + show(dense) + " ended at "
                          + show(red.normal_form) + ", leftmost at " + show(ref));
          }
          if (certify && t == 0) {
            auto const cert = certify_termination_trace(sys, red.derivation);
            if (!cert.ok) {
              fail(res, "termination measure fails at step "
                            + std::to_string(*cert.first_failure) + " of the trace of "
                            + show(dense));
            }
          }
        }
      }
      res.checked += reductions;
      res.notes.push_back(std::to_string(words.size()) + " words, "
                          + std::to_string(reductions) + " random reductions");
    }

    void resolve_all(SuiteResult& res, RewritingSystem const& sys,
                     std::vector<CriticalPair> const& pairs, std::size_t max_steps) {
      std::size_t longest = 0;
      for (auto const& p : pairs) {
        ++res.checked;
        std::string const name = p.first.to_string() + " x " + p.second.to_string()
                                 + " on " + show(p.source);
        try {
          auto const rep = resolve_critical_pair(sys, p, max_steps);
          longest = std::max({longest, rep.left.size(), rep.right.size()});
          if (!rep.resolved) {
            fail(res, "unresolved " + name);
          } else if (!verify_derivation(sys, rep.left) || !verify_derivation(sys, rep.right)) {
            fail(res, "resolution of " + name + " does not verify");
          }
        } catch (StepBudgetExhausted const&) {
          fail(res, name + " needs more than " + std::to_string(max_steps) + " steps");
        }
      }
      res.notes.push_back(std::to_string(pairs.size()) + " critical pairs, longest side "
                          + std::to_string(longest) + " steps");
    }

  }  // namespace

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{
        "f",         "equivalent", "distacac",    "complete-S", "complete-U",
        "ldf-case1", "ldf-case2",  "left-cancel", "noregcs",    "context"};
    return names;
  }

  bool is_suite_name(std::string_view name) {
    auto const& n = suite_names();
    return std::find(n.begin(), n.end(), name) != n.end();
  }

  SuiteResult run_suite(std::string_view name, SuiteOptions const& opts) {
    if (name == "f") return suite_f(opts);
    if (name == "equivalent") return suite_equivalent(opts);
    if (name == "distacac") return suite_distacac(opts);
    if (name == "complete-S") return suite_complete_s(opts);
    if (name == "complete-U") return suite_complete_u(opts);
    if (name == "ldf-case1") return suite_ldf_case1(opts);
    if (name == "ldf-case2") return suite_ldf_case2(opts);
    if (name == "left-cancel") return suite_left_cancel(opts);
    if (name == "noregcs") return suite_noregcs(opts);
    if (name == "context") return suite_context(opts);
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }

  SuiteResult suite_f(SuiteOptions const& opts) {
    SuiteResult res = named("f");
    int const max_k = full(opts) ? 4 : 3;
    int const max_d = full(opts) ? 3 : 2;
    for (int k = 1; k <= max_k; ++k) {
      std::vector<BigInt> t(static_cast<std::size_t>(k), 0);
      for (;;) {
        ++res.checked;
        BigInt const c = f_eval(t, FMode::closed);
        BigInt const r = f_eval(t, FMode::recursive);
        BigInt const s = f_eval(t, FMode::simulate);
        if (c != r || c != s) {
          fail(res, "f" + f_word(t).to_string() + ": closed " + c.str() + ", recursive "
                        + r.str() + ", simulate " + s.str());
        }
        std::size_t i = 0;
        while (i < t.size() && t[i] == max_d) {
          t[i++] = 0;
        }
        if (i == t.size()) {
          break;
        }
        t[i] += 1;
      }
    }
    Word const nf = nf_U(Word::dense("babac"));
    if (nf != Word::dense("aaaaaaaaacaa")) {
      fail(res, "babac reduces to " + show(nf) + " under U");
    }
    res.notes.push_back(std::to_string(res.checked) + " tuples; babac ->U " + show(nf)
                        + ", f(1,1) = " + f_eval({1, 1}, FMode::closed).str());
    return res;
  }

  SuiteResult suite_distacac(SuiteOptions const& opts) {
    SuiteResult            res = named("distacac");
    RewritingSystem const& R     = builtin_system(SystemId::R);
    int const              max_k = full(opts) ? 6 : 4;
    int const              bfs_k = full(opts) ? 2 : 1;
    for (int k = 0; k <= max_k; ++k) {
      ++res.checked;
      auto const        d     = acac_derivation(k);
      std::size_t const bound = (std::size_t{2} << k) + static_cast<std::size_t>(k) - 1;
      std::string       note  = "k=" + std::to_string(k) + ": derivation "
                         + std::to_string(d.size()) + " steps, bound " + std::to_string(bound);
      if (!verify_derivation(R, d) || d.end != zero()) {
        fail(res, "acac_derivation(" + std::to_string(k) + ") does not verify");
      }
      if (d.size() > bound || (k == 0 && d.size() != 1)) {
        fail(res, "acac_derivation(" + std::to_string(k) + ") has "
                      + std::to_string(d.size()) + " steps");
      }
      if (k <= bfs_k) {
        DistanceOptions o;
        o.dist_cap = bound;
        o.witness  = false;
        auto const r = capped_distance(R, acac_word(k), zero(), o);
        note += ", bfs distance "
                + (r.distance ? std::to_string(*r.distance) : std::string(to_string(r.status)));
        if (r.status != DistanceStatus::exact || *r.distance > bound) {
          fail(res, "capped distance from " + show(acac_word(k)) + " to 0: "
                        + to_string(r.status));
        }
      }
      res.notes.push_back(note);
    }
    return res;
  }

  SuiteResult suite_equivalent(SuiteOptions const& opts) {
    SuiteResult            res = named("equivalent");
    RewritingSystem const& R = builtin_system(SystemId::R);
    for (int n = 0; n <= 6; ++n) {
      auto const d = acac_derivation(n);
      if (!verify_derivation(R, d) || d.end != zero()) {
        fail(res, "acac_derivation(" + std::to_string(n) + ") does not verify over R");
      }
    }

    std::size_t const max_total = full(opts) ? 8 : 6;
    std::size_t const cap       = full(opts) ? 14 : 10;
    auto const        words     = words_upto("abc0", max_total);
    ComponentIndex    comp(R, cap);
    ClassIds          classes;
    std::vector<std::uint32_t> cid(words.size()), nid(words.size());
    std::vector<std::size_t>   first_of_len(max_total + 2, words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      cid[i] = comp.component(words[i]);
      nid[i] = classes.id(nf_S(Word::dense(words[i])));
      first_of_len[words[i].size()] = std::min(first_of_len[words[i].size()], i);
    }
    first_of_len[max_total + 1] = words.size();

    std::size_t congruent = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      std::size_t const rest = max_total - words[i].size();
      for (std::size_t j = 0; j < first_of_len[rest + 1]; ++j) {
        ++res.checked;
        bool const by_bfs = cid[i] == cid[j];
        bool const by_nf  = nid[i] == nid[j];
        congruent += by_bfs ? 1 : 0;
        if (by_bfs != by_nf) {
          fail(res, show(words[i]) + " / " + show(words[j]) + ": capped BFS says "
                        + (by_bfs ? "congruent" : "not congruent") + ", normal forms "
                        + (by_nf ? "agree" : "differ"));
        }
      }
    }
    res.notes.push_back(std::to_string(res.checked) + " ordered pairs with |u|+|v| <= "
                        + std::to_string(max_total) + " at length cap "
                        + std::to_string(cap) + ", " + std::to_string(congruent)
                        + " congruent, " + std::to_string(comp.explored())
                        + " words explored");
    return res;
  }

  SuiteResult suite_complete_s(SuiteOptions const& opts) {
    SuiteResult            res = named("complete-S");
    RewritingSystem const& S = builtin_system(SystemId::S);
    resolve_all(res, S, enumerate_critical_pairs(S, full(opts) ? 5 : 3), 200);
    random_strategy_sweep(res, S, words_upto("abc0", full(opts) ? 8 : 5),
                          full(opts) ? 50 : 10, opts.seed, true);
    return res;
  }

  SuiteResult suite_complete_u(SuiteOptions const& opts) {
    SuiteResult            res = named("complete-U");
    RewritingSystem const& U     = builtin_system(SystemId::U);
    auto const             pairs = enumerate_critical_pairs(U, full(opts) ? 8 : 5);
    for (auto const& p : pairs) {
      bool const expected = p.first.rule_id == "AAB"
                            && (p.second.rule_id == "BAC" || p.second.rule_id == "BC");
      if (!expected) {
        fail(res, "unexpected overlap " + p.first.to_string() + " x "
                      + p.second.to_string() + " on " + show(p.source));
      }
    }
    resolve_all(res, U, pairs, 200);
    random_strategy_sweep(res, U, words_upto("abc", full(opts) ? 8 : 6),
                          full(opts) ? 50 : 10, opts.seed, false);
    return res;
  }

  SuiteResult suite_ldf_case1(SuiteOptions const& opts) {
    SuiteResult            res = named("ldf-case1");
    RewritingSystem const& R       = builtin_system(SystemId::R);
    std::size_t const      max_len = full(opts) ? 8 : 5;
    auto const             words   = words_upto("abc0", max_len);

    std::map<std::size_t, std::vector<std::string>> by_len;
    for (auto const& w : words) {
      if (nf_S(Word::dense(w)) == zero()) {
        by_len[w.size()].push_back(w);
      }
    }
    std::size_t worst_reduce = 0, worst_dist = 0;
    std::string worst_reduce_w, worst_dist_w;
    for (auto const& [len, group] : by_len) {
      std::size_t const    bound = 6 * len;
      TargetDistanceOracle oracle(R, zero(), 3 * len + 4, 500'000);
      for (auto const& w : group) {
        ++res.checked;
        Word const word = Word::dense(w);
        try {
          auto const d = case1_reduce(word);
          if (d.end != zero() || !verify_derivation(builtin_system(SystemId::S), d)) {
            fail(res, "case1_reduce(" + show(w) + ") does not reach 0");
          } else if (d.size() > bound) {
            fail(res, "case1_reduce(" + show(w) + ") takes " + std::to_string(d.size())
                          + " > " + std::to_string(bound) + " steps");
          }
          if (d.size() * worst_reduce_w.size() > worst_reduce * len || worst_reduce_w.empty()) {
            worst_reduce   = d.size();
            worst_reduce_w = w;
          }
        } catch (StepBudgetExhausted const&) {
          fail(res, "case1_reduce(" + show(w) + ") exhausts its step budget");
        }
        auto const r = oracle.distance(word, bound, kDefaultNodeBudget, false);
        if (r.status != DistanceStatus::exact) {
          fail(res, "capped distance " + show(w) + " -> 0 within " + std::to_string(bound)
                        + ": " + to_string(r.status));
        } else if (*r.distance * worst_dist_w.size() > worst_dist * len
                   || worst_dist_w.empty()) {
          worst_dist   = *r.distance;
          worst_dist_w = w;
        }
      }
    }
    res.notes.push_back(std::to_string(res.checked) + " words in the class of 0 up to length "
                        + std::to_string(max_len));
    if (!worst_reduce_w.empty()) {
      res.notes.push_back("largest case1 ratio: " + show(worst_reduce_w) + " in "
                          + std::to_string(worst_reduce) + " steps");
    }
    if (!worst_dist_w.empty()) {
      res.notes.push_back("largest distance ratio: " + show(worst_dist_w) + " at distance "
                          + std::to_string(worst_dist));
    }
    return res;
  }

  SuiteResult suite_ldf_case2(SuiteOptions const& opts) {
    SuiteResult            res = named("ldf-case2");
    RewritingSystem const& T         = builtin_system(SystemId::T);
    std::size_t const      max_total = full(opts) ? 8 : 6;
    auto const             words     = words_upto("abc", max_total);
    std::map<Word, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < words.size(); ++i) {
      classes[nf_U(Word::dense(words[i]))].push_back(i);
    }
    std::size_t worst = 0;
    std::string worst_pair;
    for (auto const& [nf, members] : classes) {
      for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          std::string const& u     = words[members[x]];
          std::string const& v     = words[members[y]];
          std::size_t const  total = u.size() + v.size();
          if (total > max_total) {
            continue;
          }
          ++res.checked;
          DistanceOptions o;
          o.dist_cap = total;
          o.witness  = false;
          auto const r = capped_distance(T, Word::dense(u), Word::dense(v), o);
          if (r.status != DistanceStatus::exact) {
            fail(res, show(u) + " / " + show(v) + ": no T-path of length <= "
                          + std::to_string(total) + " (" + to_string(r.status) + ")");
          } else if (*r.distance > worst) {
            worst      = *r.distance;
            worst_pair = show(u) + " / " + show(v);
          }
        }
      }
    }
    res.notes.push_back(std::to_string(res.checked) + " distinct U-equal pairs with |u|+|v| <= "
                        + std::to_string(max_total));
    if (!worst_pair.empty()) {
      res.notes.push_back("largest distance " + std::to_string(worst) + ": " + worst_pair);
    }
    return res;
  }

  SuiteResult suite_left_cancel(SuiteOptions const& opts) {
    SuiteResult       res = named("left-cancel");
    std::size_t const max_len = full(opts) ? 6 : 4;
    auto const        words   = words_upto("abc", max_len);
    ClassIds          classes;
    std::vector<std::uint32_t> plain(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      plain[i] = classes.id(nf_U(Word::dense(words[i])));
    }
    std::size_t antecedents = 0;
    for (char x : std::string("abc")) {
      std::vector<std::uint32_t> prefixed(words.size());
      for (std::size_t i = 0; i < words.size(); ++i) {
        prefixed[i] = classes.id(nf_U(Word::dense(std::string(1, x) + words[i])));
      }
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
          ++res.checked;
          if (prefixed[i] == prefixed[j]) {
            ++antecedents;
            if (plain[i] != plain[j]) {
              fail(res, "x=" + std::string(1, x) + ", u=" + show(words[i]) + ", v="
                            + show(words[j]));
            }
          }
        }
      }
    }
    res.notes.push_back(std::to_string(res.checked) + " triples (x, u, v), "
                        + std::to_string(antecedents) + " with nf_U(xu) = nf_U(xv)");
    return res;
  }

  SuiteResult suite_noregcs(SuiteOptions const& opts) {
    SuiteResult            res = named("noregcs");
    RewritingSystem const& S     = builtin_system(SystemId::S);
    int const              max_q = full(opts) ? 3 : 2;
    for (int q = 1; q <= max_q; ++q) {
      Word const u = noregcs_word(q);
      ++res.checked;
      if (!is_irreducible(S, u) || nf_S(u) != u || u == zero()) {
        fail(res, "noregcs_word(" + std::to_string(q) + ") is not S-irreducible");
      }
      for (int delta = 1; delta <= 5; ++delta) {
        ++res.checked;
        Word const p = pump_word(u, 0, delta);
        if (nf_S(p) != zero()) {
          fail(res, "pumping noregcs_word(" + std::to_string(q) + ") by "
                        + std::to_string(delta) + " gives normal form " + show(nf_S(p)));
        }
      }
    }

    Dfa const  dfa = irreducible_words_dfa(builtin_system(SystemId::R));
    auto const rep = check_cross_section(dfa, 8);
    ++res.checked;
    bool witness = false;
    for (auto const& d : rep.duplicates) {
      witness = witness || (d.first == zero() && d.second == Word::dense("aaacac"));
    }
    if (rep.verdict != CrossSectionVerdict::refuted || !witness) {
      fail(res, "R-irreducibles not refuted by (0, a^3 c a c) at horizon 8");
    }
    res.notes.push_back("R-irreducibles DFA (" + std::to_string(dfa.states())
                        + " states) at horizon 8: " + to_string(rep.verdict) + ", "
                        + std::to_string(rep.duplicates.size()) + " duplicates, e.g. 0 / a^3 c a c");
    for (int q = 1; q <= max_q; ++q) {
      ++res.checked;
      auto const v = pumping_falsifier(dfa, q);
      if (!v) {
        fail(res, "no pumping violation for Q=" + std::to_string(q));
      } else {
        res.notes.push_back("Q=" + std::to_string(q) + ": " + show(v->first) + " / "
                            + show(v->second));
      }
    }
    return res;
  }

  SuiteResult suite_context(SuiteOptions const& opts) {
    SuiteResult            res = named("context");
    RewritingSystem const& R       = builtin_system(SystemId::R);
    std::size_t const      samples = full(opts) ? 1000 : 100;
    std::mt19937_64        rng(opts.seed);
    std::string const      sym = "abc0";
    auto random_word = [&](std::size_t len) {
      std::string w;
      for (std::size_t i = 0; i < len; ++i) {
        w += sym[rng() % sym.size()];
      }
      return Word::dense(w);
    };
    std::size_t attempts = 0, strict = 0;
    while (res.checked < samples) {
      if (++attempts > 1000 * samples) {
        fail(res, "could not sample enough congruent pairs");
        break;
      }
      std::size_t const lu = rng() % 7;
      std::size_t const lv = rng() % (7 - lu);
      Word const        u  = random_word(lu);
      Word const        v  = random_word(lv);
      if (u == v || nf_S(u) != nf_S(v)) {
        continue;
      }
      Word const p = random_word(rng() % 3);
      Word const q = random_word(rng() % 3);
      ++res.checked;
      DistanceOptions o;
      o.witness    = false;
      auto const c = check_context_monotonicity(R, u, v, p, q, o);
      if (!c.holds) {
        fail(res, "u=" + show(u) + ", v=" + show(v) + ", p=" + show(p) + ", q=" + show(q)
                      + ": inner " + to_string(c.inner.status) + ", outer "
                      + to_string(c.outer.status));
      } else if (*c.outer.distance < *c.inner.distance) {
        ++strict;
      }
    }
    res.notes.push_back(std::to_string(res.checked) + " samples (seed "
                        + std::to_string(opts.seed) + "), " + std::to_string(strict)
                        + " with d(puq, pvq) < d(u, v)");
    return res;
  }

}  // namespace thuekit
