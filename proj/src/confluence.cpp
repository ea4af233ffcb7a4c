#include "thuekit/confluence.hpp"

#include <set>
#include <tuple>

#include "thuekit/errors.hpp"

namespace thuekit {

  char const* to_string(OverlapKind k) noexcept {
    return k == OverlapKind::suffix_prefix ? "suffix-prefix" : "containment";
  }

  char const* to_string(Measure m) noexcept {
    switch (m) {
      case Measure::length:
        return "length";
      case Measure::b_count:
        return "b-count";
      case Measure::theta:
        return "theta";
    }
    return "?";
  }

  std::string RuleRef::to_string() const {
    if (!param) {
      return rule_id;
    }
    return rule_id + "(n=" + std::to_string(*param) + ")";
  }

  std::vector<CriticalPair> enumerate_critical_pairs(
      RewritingSystem const& system, std::int64_t param_bound) {
    auto const inst = system.instances(param_bound);
    std::vector<std::string> lhs, rhs;
    for (auto const& i : inst) {
      lhs.push_back(i.rule.lhs.to_dense());
      rhs.push_back(i.rule.rhs.to_dense());
    }

    std::vector<CriticalPair> out;
    // (source, occurrence a, occurrence b) with occurrences (rule, position)
    // ordered, so the mirror image of a pair is recognised.
    using Occ = std::pair<std::size_t, std::size_t>;
    std::set<std::tuple<std::string, Occ, Occ>> seen;

    auto emit = [&](std::string const& source, std::size_t i, std::size_t j,
                    std::size_t pos_j, OverlapKind kind) {
      Occ a{i, 0}, b{j, pos_j};
      if (!seen.emplace(source, std::min(a, b), std::max(a, b)).second) {
        return;
      }
      std::string left  = rhs[i] + source.substr(lhs[i].size());
      std::string right = source.substr(0, pos_j) + rhs[j]
                          + source.substr(pos_j + lhs[j].size());
      RuleRef const first{inst[i].rule.id, inst[i].param};
      RuleRef const second{inst[j].rule.id, inst[j].param};
      out.push_back({Word::dense(source), Word::dense(left), Word::dense(right),
                     kind, first, second,
                     Redex{first.rule_id, first.param, 0, Direction::forward},
                     Redex{second.rule_id, second.param, pos_j,
                           Direction::forward}});
    };

    for (std::size_t i = 0; i < inst.size(); ++i) {
      std::string const& l1 = lhs[i];
      for (std::size_t j = 0; j < inst.size(); ++j) {
        std::string const& l2 = lhs[j];
        // l1 = x y, l2 = y z with y, x, z non-empty.
        for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
          if (l1.compare(l1.size() - k, k, l2, 0, k) == 0) {
            emit(l1 + l2.substr(k), i, j, l1.size() - k,
                 OverlapKind::suffix_prefix);
          }
        }
        // l1 = x l2 y.
        if (l2.size() <= l1.size()) {
          for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
            if (i == j && p == 0) {
              continue;
            }
            if (l1.compare(p, l2.size(), l2) == 0) {
              emit(l1, i, j, p, OverlapKind::containment);
            }
          }
        }
      }
    }
    return out;
  }

  ResolutionReport resolve_critical_pair(RewritingSystem const& system,
                                         CriticalPair const&    p,
                                         std::size_t            max_steps) {
    auto const     l = reduce_to_normal_form(system, p.left_reduct,
                                             Strategy::leftmost(), max_steps);
    auto const     r = reduce_to_normal_form(system, p.right_reduct,
                                             Strategy::leftmost(), max_steps);
    ResolutionReport rep;
    rep.left     = l.derivation;
    rep.right    = r.derivation;
    rep.resolved = l.normal_form == r.normal_form;
    if (rep.resolved) {
      rep.common_word = l.normal_form;
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Theta
  ////////////////////////////////////////////////////////////////////////

  ThetaTuple ThetaTuple::of_block(Word const& block) {
    ThetaTuple t;
    BigInt     cur = 0;
    for (auto const& r : block.runs()) {
      if (r.symbol == 'a') {
        cur += r.exponent;
      } else if (r.symbol == 'b') {
        std::size_t const m = to_size(r.exponent);
        for (std::size_t i = 0; i < m; ++i) {
          t.exponents.push_back(cur);
          cur = 0;
        }
      } else {
        throw std::invalid_argument("block " + block.to_string()
                                    + " is not over {a, b}");
      }
    }
    t.exponents.push_back(cur);
    return t;
  }

  Word ThetaTuple::block() const {
    Word w;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (i != 0) {
        w.append('b', 1);
      }
      w.append('a', exponents[i]);
    }
    return w;
  }

  bool theta_less(ThetaTuple const& x, ThetaTuple const& y) {
    if (x.exponents.size() != y.exponents.size()) {
      return false;
    }
    for (std::size_t i = x.exponents.size(); i-- > 0;) {
      if (x.exponents[i] != y.exponents[i]) {
        return x.exponents[i] < y.exponents[i];
      }
    }
    return false;
  }

  Word ab_block_at(Word const& w, BigInt const& position) {
    auto const& runs = w.runs();
    BigInt      start = 0;
    std::size_t k     = 0;
    while (k < runs.size() && start + runs[k].exponent <= position) {
      start += runs[k].exponent;
      ++k;
    }
    if (k == runs.size()) {
      throw std::out_of_range("position outside word");
    }
    auto in_block = [&](std::size_t i) {
      return runs[i].symbol == 'a' || runs[i].symbol == 'b';
    };
    if (!in_block(k)) {
      return Word();
    }
    std::size_t lo = k, hi = k;
    while (lo > 0 && in_block(lo - 1)) {
      --lo;
    }
    while (hi + 1 < runs.size() && in_block(hi + 1)) {
      ++hi;
    }
    return Word(std::vector<Run>(runs.begin() + static_cast<std::ptrdiff_t>(lo),
                                 runs.begin() + static_cast<std::ptrdiff_t>(hi) + 1));
  }

  bool check_theta_decrease(Word const& before, Word const& after,
                            Redex const& step) {
    if (step.direction != Direction::forward
        || before.drop(step.position).prefix(2) != Word::dense("ba")) {
      throw std::invalid_argument(step.to_string()
                                  + " is not a forward ba -> aab step");
    }
    Word expect = before.prefix(step.position);
    expect.append(Word::dense("aab"));
    expect.append(before.drop(step.position + 2));
    if (after != expect) {
      return false;
    }
    return theta_less(ThetaTuple::of_block(ab_block_at(after, step.position)),
                      ThetaTuple::of_block(ab_block_at(before, step.position)));
  }

  TerminationCertificate certify_termination_trace(RewritingSystem const& system,
                                                   Derivation const&      d) {
    if (auto v = verify_derivation(system, d); !v) {
      throw std::invalid_argument("derivation does not verify: " + v.reason);
    }
    Word const ba  = Word::dense("ba");
    Word const aab = Word::dense("aab");

    TerminationCertificate cert;
    Word                   cur = d.start;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      Redex const& r = d.steps[i].redex;
      if (r.direction != Direction::forward) {
        throw std::invalid_argument("step " + std::to_string(i)
                                    + " is a reverse step");
      }
      Rule const rule = system.instance(r.rule_id, r.param);
      Word const next = apply_redex(system, cur, r);
      bool       ok   = false;
      if (rule.rhs.length() < rule.lhs.length()) {
        cert.measures.push_back(Measure::length);
        ok = next.length() < cur.length();
      } else if (rule.rhs.count('b') < rule.lhs.count('b')) {
        cert.measures.push_back(Measure::b_count);
        ok = next.count('b') < cur.count('b');
      } else if (rule.lhs == ba && rule.rhs == aab) {
        cert.measures.push_back(Measure::theta);
        ok = check_theta_decrease(cur, next, r);
      }
      if (!ok) {
        cert.ok            = false;
        cert.first_failure = i;
        return cert;
      }
      cur = next;
    }
    return cert;
  }

}  // namespace thuekit
