#include "thuekit/cross_section.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "thuekit/builtin.hpp"
#include "thuekit/constructions.hpp"
#include "thuekit/errors.hpp"
#include "thuekit/rewriting.hpp"

namespace thuekit {

  namespace {

    constexpr std::string_view kFullAlphabet = "abc0";
    constexpr std::size_t      kMaxLayer     = 20'000'000;

    std::size_t symbol_index(std::string const& alphabet, char c) {
      return alphabet.find(c);
    }

    std::optional<std::size_t> parse_index(std::string_view s) {
      std::size_t v   = 0;
      auto const  res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        return std::nullopt;
      }
      return v;
    }

    std::vector<std::string_view> split_ws(std::string_view s) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') {
          ++j;
        }
        if (j > i) {
          out.push_back(s.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    // Automaton given by an explicit successor function over string-labelled
    // states, built breadth first from `start`.
    template <class Next, class Accept>
    Dfa build_from_labels(std::string const& alphabet, std::string const& start,
                          Next next, Accept accept) {
      std::map<std::string, std::size_t> id{{start, 0}};
      std::vector<std::string>           label{start};
      std::vector<std::size_t>           delta;
      for (std::size_t s = 0; s < label.size(); ++s) {
        for (char c : alphabet) {
          std::string const t = next(label[s], c);
          auto [it, fresh]    = id.emplace(t, label.size());
          if (fresh) {
            label.push_back(t);
          }
          delta.push_back(it->second);
        }
      }
      std::vector<bool> acc;
      for (auto const& l : label) {
        acc.push_back(accept(l));
      }
      return minimize(Dfa(alphabet, label.size(), 0, std::move(acc), std::move(delta)));
    }

    bool in_full_alphabet(std::string const& alphabet) {
      return std::all_of(alphabet.begin(), alphabet.end(), [](char c) {
        return kFullAlphabet.find(c) != std::string_view::npos;
      });
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Dfa
  ////////////////////////////////////////////////////////////////////////

  Dfa::Dfa(std::string alphabet, std::size_t states, std::size_t start,
           std::vector<bool> accepting, std::vector<std::size_t> delta)
      : alphabet_(std::move(alphabet)),
        states_(states),
        start_(start),
        accepting_(std::move(accepting)),
        delta_(std::move(delta)) {
    if (states_ == 0) {
      throw std::invalid_argument("a DFA needs at least one state");
    }
    if (start_ >= states_) {
      throw std::invalid_argument("start state out of range");
    }
    if (accepting_.size() != states_ || delta_.size() != states_ * alphabet_.size()) {
      throw std::invalid_argument("DFA tables do not match the state count");
    }
    for (auto t : delta_) {
      if (t >= states_) {
        throw std::invalid_argument("DFA transition target out of range");
      }
    }
    Alphabet const check(alphabet_);  // rejects duplicates and bad symbols
  }

  std::optional<std::size_t> Dfa::step(std::size_t s, char symbol) const {
    std::size_t const i = symbol_index(alphabet_, symbol);
    if (i == std::string::npos) {
      return std::nullopt;
    }
    return delta_[s * alphabet_.size() + i];
  }

  std::optional<std::size_t> Dfa::step_run(std::size_t s, char symbol,
                                           BigInt const& count) const {
    std::size_t const i = symbol_index(alphabet_, symbol);
    if (i == std::string::npos) {
      return std::nullopt;
    }
    auto next = [&](std::size_t q) {
      return delta_[q * alphabet_.size() + i];
    };
    std::vector<std::size_t> seen(states_, SIZE_MAX);
    std::size_t              cur = s;
    for (std::size_t k = 0; k < count; ++k) {
      if (seen[cur] != SIZE_MAX) {
        std::size_t const cycle = k - seen[cur];
        BigInt const      rest  = (count - k) % cycle;
        for (std::size_t r = to_size(rest); r > 0; --r) {
          cur = next(cur);
        }
        return cur;
      }
      seen[cur] = k;
      cur       = next(cur);
    }
    return cur;
  }

  std::optional<std::size_t> Dfa::run(Word const& w) const {
    std::size_t s = start_;
    for (auto const& r : w.runs()) {
      auto const t = step_run(s, r.symbol, r.exponent);
      if (!t) {
        return std::nullopt;
      }
      s = *t;
    }
    return s;
  }

  bool Dfa::accepts(Word const& w) const {
    auto const s = run(w);
    return s && accepting_[*s];
  }

  bool Dfa::accepts(std::string_view dense) const {
    std::size_t s = start_;
    for (char c : dense) {
      auto const t = step(s, c);
      if (!t) {
        return false;
      }
      s = *t;
    }
    return accepting_[s];
  }

  std::vector<bool> Dfa::live_states() const {
    std::vector<std::vector<std::size_t>> pred(states_);
    for (std::size_t s = 0; s < states_; ++s) {
      for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        pred[delta_[s * alphabet_.size() + i]].push_back(s);
      }
    }
    std::vector<bool>       live(accepting_);
    std::deque<std::size_t> queue;
    for (std::size_t s = 0; s < states_; ++s) {
      if (live[s]) {
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      std::size_t const s = queue.front();
      queue.pop_front();
      for (auto p : pred[s]) {
        if (!live[p]) {
          live[p] = true;
          queue.push_back(p);
        }
      }
    }
    return live;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  Dfa load_dfa(std::string_view text) {
    std::string                alphabet(kFullAlphabet);
    std::optional<std::size_t> states, start;
    std::vector<std::size_t>   accept;
    std::size_t                accept_line = 0;
    struct Edge {
      std::size_t from;
      char        symbol;
      std::size_t to;
      std::size_t line;
    };
    std::vector<Edge> edges;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      std::size_t const eol = std::min(text.find('\n', pos), text.size());
      std::string_view  line = text.substr(pos, eol - pos);
      pos                    = eol + 1;
      ++line_no;
      if (auto h = line.find('#'); h != std::string_view::npos) {
        line = line.substr(0, h);
      }
      auto const tok = split_ws(line);
      if (tok.empty()) {
        continue;
      }
      auto const& key = tok[0];
      auto one_index  = [&](char const* what) {
        if (tok.size() != 2) {
          throw ParseError(std::string("expected '") + what + " <index>'", line_no);
        }
        auto v = parse_index(tok[1]);
        if (!v) {
          throw ParseError("bad number '" + std::string(tok[1]) + "'", line_no);
        }
        return *v;
      };
      if (key == "alphabet:") {
        if (tok.size() != 2) {
          throw ParseError("expected 'alphabet: <symbols>'", line_no);
        }
        alphabet = std::string(tok[1]);
        for (char c : alphabet) {
          if (kFullAlphabet.find(c) == std::string_view::npos) {
            throw UnknownSymbol(c, line_no);
          }
        }
        if (std::set<char>(alphabet.begin(), alphabet.end()).size() != alphabet.size()) {
          throw ParseError("repeated symbol in alphabet", line_no);
        }
      } else if (key == "states:") {
        states = one_index("states:");
        if (*states == 0) {
          throw ParseError("a DFA needs at least one state", line_no);
        }
      } else if (key == "start:") {
        start = one_index("start:");
      } else if (key == "accept:") {
        accept_line = line_no;
        for (std::size_t i = 1; i < tok.size(); ++i) {
          auto v = parse_index(tok[i]);
          if (!v) {
            throw ParseError("bad state index '" + std::string(tok[i]) + "'", line_no);
          }
          accept.push_back(*v);
        }
      } else {
        if (tok.size() != 3 || tok[1].size() != 1) {
          throw ParseError("expected a transition 'i sym j'", line_no);
        }
        auto from = parse_index(tok[0]);
        auto to   = parse_index(tok[2]);
        if (!from || !to) {
          throw ParseError("bad state index in transition", line_no);
        }
        edges.push_back({*from, tok[1][0], *to, line_no});
      }
    }

    if (!states) {
      throw ParseError("missing 'states:' line");
    }
    if (!start) {
      throw ParseError("missing 'start:' line");
    }
    std::size_t const n = *states;
    if (*start >= n) {
      throw ParseError("start state " + std::to_string(*start) + " out of range");
    }
    std::vector<bool> acc(n, false);
    for (auto s : accept) {
      if (s >= n) {
        throw ParseError("accepting state " + std::to_string(s) + " out of range",
                         accept_line);
      }
      acc[s] = true;
    }
    std::vector<std::size_t> delta(n * alphabet.size(), SIZE_MAX);
    for (auto const& e : edges) {
      std::size_t const i = symbol_index(alphabet, e.symbol);
      if (i == std::string::npos) {
        throw UnknownSymbol(e.symbol, e.line);
      }
      if (e.from >= n || e.to >= n) {
        throw ParseError("state index out of range", e.line);
      }
      auto& slot = delta[e.from * alphabet.size() + i];
      if (slot != SIZE_MAX) {
        throw ParseError("duplicate transition", e.line);
      }
      slot = e.to;
    }
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (delta[s * alphabet.size() + i] == SIZE_MAX) {
          throw ParseError("state " + std::to_string(s) + " has no transition on '"
                           + alphabet[i] + "'");
        }
      }
    }
    return Dfa(alphabet, n, *start, std::move(acc), std::move(delta));
  }

  Dfa load_dfa_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_dfa(ss.str());
  }

  std::string format_dfa(Dfa const& dfa) {
    std::string out = "alphabet: " + dfa.alphabet() + "\n";
    out += "states: " + std::to_string(dfa.states()) + "\n";
    out += "start: " + std::to_string(dfa.start()) + "\n";
    out += "accept:";
    for (std::size_t s = 0; s < dfa.states(); ++s) {
      if (dfa.accepting(s)) {
        out += " " + std::to_string(s);
      }
    }
    out += "\n";
    for (std::size_t s = 0; s < dfa.states(); ++s) {
      for (char c : dfa.alphabet()) {
        out += std::to_string(s) + " " + c + " " + std::to_string(*dfa.step(s, c))
               + "\n";
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  Dfa minimize(Dfa const& dfa) {
    std::vector<std::size_t> order{dfa.start()};
    std::vector<bool>        reached(dfa.states(), false);
    reached[dfa.start()] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (char c : dfa.alphabet()) {
        std::size_t const t = *dfa.step(order[i], c);
        if (!reached[t]) {
          reached[t] = true;
          order.push_back(t);
        }
      }
    }

    // Moore refinement over reachable states.
    std::vector<std::size_t> cls(dfa.states(), 0);
    for (auto s : order) {
      cls[s] = dfa.accepting(s) ? 1 : 0;
    }
    std::size_t classes = 0;
    for (;;) {
      std::map<std::vector<std::size_t>, std::size_t> sig_id;
      std::vector<std::size_t>                        next(dfa.states(), 0);
      for (auto s : order) {
        std::vector<std::size_t> sig{cls[s]};
        for (char c : dfa.alphabet()) {
          sig.push_back(cls[*dfa.step(s, c)]);
        }
        next[s] = sig_id.emplace(std::move(sig), sig_id.size()).first->second;
      }
      cls.swap(next);
      if (sig_id.size() == classes) {
        break;
      }
      classes = sig_id.size();
    }

    // Renumber classes breadth first from the start state.
    std::vector<std::size_t> id(classes, SIZE_MAX);
    std::vector<std::size_t> rep;
    id[cls[dfa.start()]] = 0;
    rep.push_back(dfa.start());
    std::vector<std::size_t> delta;
    for (std::size_t i = 0; i < rep.size(); ++i) {
      for (char c : dfa.alphabet()) {
        std::size_t const t = *dfa.step(rep[i], c);
        if (id[cls[t]] == SIZE_MAX) {
          id[cls[t]] = rep.size();
          rep.push_back(t);
        }
        delta.push_back(id[cls[t]]);
      }
    }
    std::vector<bool> acc;
    for (auto s : rep) {
      acc.push_back(dfa.accepting(s));
    }
    return Dfa(dfa.alphabet(), rep.size(), 0, std::move(acc), std::move(delta));
  }

  Dfa factor_avoiding_dfa(std::string const&              alphabet,
                          std::vector<std::string> const& factors) {
    std::set<std::string> prefixes;
    for (auto const& f : factors) {
      if (f.empty()) {
        throw std::invalid_argument("empty factor excludes every word");
      }
      for (std::size_t i = 0; i < f.size(); ++i) {
        prefixes.insert(f.substr(0, i));
      }
    }
    std::string const dead = "#";
    // A state is the longest suffix of the input read so far that is a
    // proper prefix of some factor.
    auto next = [&](std::string const& s, char c) -> std::string {
      if (s == dead) {
        return dead;
      }
      std::string const t = s + c;
      for (auto const& f : factors) {
        if (t.size() >= f.size() && t.compare(t.size() - f.size(), f.size(), f) == 0) {
          return dead;
        }
      }
      for (std::size_t i = 0; i <= t.size(); ++i) {
        if (prefixes.count(t.substr(i))) {
          return t.substr(i);
        }
      }
      return "";
    };
    return build_from_labels(alphabet, "", next,
                             [&](std::string const& s) { return s != dead; });
  }

  Dfa finite_language_dfa(std::string const&              alphabet,
                          std::vector<std::string> const& words) {
    std::set<std::string> prefixes, members(words.begin(), words.end());
    for (auto const& w : words) {
      for (char c : w) {
        if (alphabet.find(c) == std::string::npos) {
          throw UnknownSymbol(c);
        }
      }
      for (std::size_t i = 0; i <= w.size(); ++i) {
        prefixes.insert(w.substr(0, i));
      }
    }
    std::string const dead = "#";
    auto next = [&](std::string const& s, char c) -> std::string {
      if (s == dead || !prefixes.count(s + c)) {
        return dead;
      }
      return s + c;
    };
    return build_from_labels(alphabet, "", next, [&](std::string const& s) {
      return s != dead && members.count(s) > 0;
    });
  }

  Dfa irreducible_words_dfa(RewritingSystem const& system) {
    if (!system.schemas().empty()) {
      throw std::invalid_argument("irreducible_words_dfa needs a system without schemas");
    }
    std::vector<std::string> factors;
    for (auto const& r : system.rules()) {
      factors.push_back(r.lhs.to_dense());
    }
    return factor_avoiding_dfa(system.alphabet().symbols(), factors);
  }

  ////////////////////////////////////////////////////////////////////////
  // Cross-section check
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(CrossSectionVerdict v) noexcept {
    return v == CrossSectionVerdict::refuted ? "refuted" : "consistent-within-horizon";
  }

  namespace {

    void check_pair(Dfa const& dfa, Word const& x, Word const& y, Word const* nf) {
      bool const ok = dfa.accepts(x) && dfa.accepts(y) && x != y
                      && nf_S(x) == nf_S(y) && (nf == nullptr || nf_S(x) == *nf);
      if (!ok) {
        throw std::logic_error("unsound pair " + x.to_string() + " / " + y.to_string());
      }
    }

    // Accepted words in shortlex order, stopping when visit returns false or
    // the words get longer than max_len.
    template <class Visit>
    void for_each_accepted(Dfa const& dfa, std::size_t max_len, Visit visit) {
      auto const live = dfa.live_states();
      if (!live[dfa.start()]) {
        return;
      }
      std::string sorted = dfa.alphabet();
      std::sort(sorted.begin(), sorted.end(), [](char x, char y) {
        return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
      });
      std::vector<std::pair<std::string, std::size_t>> layer{{"", dfa.start()}};
      for (std::size_t len = 0; len <= max_len && !layer.empty(); ++len) {
        for (auto const& [w, s] : layer) {
          if (dfa.accepting(s) && !visit(w)) {
            return;
          }
        }
        if (len == max_len) {
          break;
        }
        std::vector<std::pair<std::string, std::size_t>> next;
        for (auto const& [w, s] : layer) {
          for (char c : sorted) {
            std::size_t const t = *dfa.step(s, c);
            if (live[t]) {
              next.emplace_back(w + c, t);
            }
          }
        }
        if (next.size() > kMaxLayer) {
          throw Error("more than " + std::to_string(kMaxLayer)
                      + " live words of length " + std::to_string(len + 1));
        }
        layer.swap(next);
      }
    }

  }  // namespace

  CrossSectionReport check_cross_section(Dfa const& dfa, std::size_t horizon) {
    if (!in_full_alphabet(dfa.alphabet())) {
      throw std::invalid_argument("DFA alphabet must lie within {a, b, c, 0}");
    }
    CrossSectionReport rep;
    rep.horizon = horizon;
    std::unordered_map<Word, Word> first;
    for_each_accepted(dfa, horizon, [&](std::string const& w) {
      ++rep.accepted;
      Word const word = Word::dense(w);
      Word       nf   = nf_S(word);
      auto [it, fresh] = first.emplace(nf, word);
      if (!fresh) {
        rep.duplicates.push_back({it->second, word, std::move(nf)});
      }
      return true;
    });
    for (auto const& d : rep.duplicates) {
      check_pair(dfa, d.first, d.second, &d.normal_form);
    }

    RewritingSystem const& S = builtin_system(SystemId::S);
    if (horizon >= 2) {
      std::vector<std::string> layer{""};
      for (std::size_t len = 0; len + 2 <= horizon; ++len) {
        for (auto const& w : layer) {
          Word const word = Word::dense(w);
          if (is_irreducible(S, word) && !first.count(word)) {
            rep.unreached_classes.push_back(word);
          }
        }
        std::vector<std::string> next;
        for (auto const& w : layer) {
          for (char c : std::string("0abc")) {
            next.push_back(w + c);
          }
        }
        layer.swap(next);
      }
    }
    rep.verdict = rep.duplicates.empty() ? CrossSectionVerdict::consistent_within_horizon
                                         : CrossSectionVerdict::refuted;
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pumping
  ////////////////////////////////////////////////////////////////////////

  std::optional<PumpViolation> pumping_falsifier(Dfa const& dfa, std::int64_t Q,
                                                 std::size_t samples) {
    if (Q < 1 || Q > 3) {
      throw std::invalid_argument("pumping_falsifier needs 1 <= Q <= 3");
    }
    if (!in_full_alphabet(dfa.alphabet())) {
      throw std::invalid_argument("DFA alphabet must lie within {a, b, c, 0}");
    }
    Word const zero = Word::dense("0");
    Word const u    = noregcs_word(Q);

    // A cycle of the DFA inside an a-run of w, as (run index, cycle length).
    auto pump_in = [&](Word const& w) -> std::optional<PumpViolation> {
      std::size_t s = dfa.start();
      for (std::size_t ri = 0; ri < w.run_count(); ++ri) {
        Run const& r = w.runs()[ri];
        if (r.symbol == 'a') {
          std::vector<std::size_t> seen(dfa.states(), SIZE_MAX);
          std::size_t              cur = s;
          for (std::size_t k = 0; k < r.exponent && k <= dfa.states(); ++k) {
            if (seen[cur] != SIZE_MAX) {
              BigInt const q      = k - seen[cur];
              Word const   pumped = pump_word(w, ri, q);
              if (dfa.accepts(pumped) && nf_S(pumped) == zero) {
                return PumpViolation{w, pumped, "pump", ri, q};
              }
              break;
            }
            seen[cur] = k;
            cur       = *dfa.step(cur, 'a');
          }
        }
        auto const t = dfa.step_run(s, r.symbol, r.exponent);
        if (!t) {
          return std::nullopt;
        }
        s = *t;
      }
      return std::nullopt;
    };

    std::optional<PumpViolation> found;
    for (std::size_t delta = 0; delta < samples && !found; ++delta) {
      for (std::size_t site : {std::size_t{0}, std::size_t{2}}) {
        Word const w = pump_word(u, site, delta);
        if (dfa.accepts(w) && nf_S(w) == zero) {
          found = pump_in(w);
          if (found) {
            break;
          }
        }
      }
    }
    if (!found) {
      std::optional<Word> first_zero;
      std::size_t         seen = 0;
      for_each_accepted(dfa, 32, [&](std::string const& w) {
        Word const word = Word::dense(w);
        if (nf_S(word) == zero) {
          if (first_zero) {
            found = PumpViolation{*first_zero, word, "enumeration", std::nullopt,
                                  std::nullopt};
            return false;
          }
          first_zero = word;
        }
        return ++seen < samples;
      });
    }
    if (found) {
      check_pair(dfa, found->first, found->second, &zero);
    }
    return found;
  }

  bool pumping_threshold_holds(BigInt const& N, std::int64_t Q, BigInt const& k) {
    if (Q < 1 || Q > 30 || N < 0 || k < 0) {
      throw std::invalid_argument("pumping_threshold_holds needs N, k >= 0 and 1 <= Q <= 30");
    }
    if (k > N) {
      return true;
    }
    // Here k <= N, so 2^{k+1} is small enough to build.
    BigInt const lhs = (N + 1) * (pow2(to_size(k) + 1) - 1);
    BigInt const rhs = pow2((std::uint64_t{1} << (Q + 1)) - 1) - 2;
    return lhs < rhs;
  }

}  // namespace thuekit
