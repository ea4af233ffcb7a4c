#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thuekit/bignat.hpp"
#include "thuekit/system.hpp"
#include "thuekit/word.hpp"

namespace thuekit {

  // Complete deterministic automaton over a subset of {a, b, c, 0}.
  class Dfa {
   public:
    // delta[s * alphabet.size() + i] is the successor of s on alphabet[i].
    Dfa(std::string alphabet, std::size_t states, std::size_t start,
        std::vector<bool> accepting, std::vector<std::size_t> delta);

    std::string const& alphabet() const noexcept {
      return alphabet_;
    }
    std::size_t states() const noexcept {
      return states_;
    }
    std::size_t start() const noexcept {
      return start_;
    }
    bool accepting(std::size_t s) const {
      return accepting_.at(s);
    }

    // Successor state, or nullopt for a symbol outside the alphabet.
    std::optional<std::size_t> step(std::size_t s, char symbol) const;

    // State after reading `count` copies of symbol; runs of any length are
    // handled by cycle detection.
    std::optional<std::size_t> step_run(std::size_t s, char symbol,
                                        BigInt const& count) const;

    // State after w, nullopt if w leaves the alphabet.
    std::optional<std::size_t> run(Word const& w) const;

    bool accepts(Word const& w) const;
    bool accepts(std::string_view dense) const;

    // States from which an accepting state is reachable.
    std::vector<bool> live_states() const;

   private:
    std::string              alphabet_;
    std::size_t              states_;
    std::size_t              start_;
    std::vector<bool>        accepting_;
    std::vector<std::size_t> delta_;
  };

  // Text format, one item per line, '#' starts a comment:
  //   alphabet: abc0        (optional, default abc0)
  //   states: N
  //   start: i
  //   accept: i j k         (possibly empty)
  //   i sym j               (one line per state and symbol)
  // Throws ParseError for malformed lines, bad state indices, duplicate or
  // missing transitions, and UnknownSymbol for symbols outside the alphabet.
  Dfa         load_dfa(std::string_view text);
  Dfa         load_dfa_file(std::string const& path);
  std::string format_dfa(Dfa const& dfa);

  // Minimal automaton for the same language (unreachable states dropped).
  Dfa minimize(Dfa const& dfa);

  // Words over `alphabet` containing none of `factors` as a subword.
  Dfa factor_avoiding_dfa(std::string const& alphabet,
                          std::vector<std::string> const& factors);

  // Exactly the given words.
  Dfa finite_language_dfa(std::string const& alphabet,
                          std::vector<std::string> const& words);

  // Words irreducible under a system without schemas, minimized. For R these
  // are the 0-free words avoiding ba, bc, acc together with the word 0.
  Dfa irreducible_words_dfa(RewritingSystem const& system);

  struct DuplicatePair {
    Word first;
    Word second;
    Word normal_form;
  };

  enum class CrossSectionVerdict : std::uint8_t { refuted, consistent_within_horizon };

  char const* to_string(CrossSectionVerdict v) noexcept;

  struct CrossSectionReport {
    std::size_t                horizon = 0;
    std::size_t                accepted = 0;  // accepted words up to horizon
    std::vector<DuplicatePair> duplicates;
    std::vector<Word>          unreached_classes;
    CrossSectionVerdict        verdict = CrossSectionVerdict::consistent_within_horizon;
  };

  // Groups the accepted words of length <= horizon by S-normal form. Each
  // extra member of a group is reported as a duplicate of the group's
  // shortlex-first member. S-irreducible words of length <= horizon - 2
  // whose class has no accepted word up to horizon are listed as unreached.
  // The DFA alphabet must lie within {a, b, c, 0}.
  CrossSectionReport check_cross_section(Dfa const& dfa, std::size_t horizon);

  struct PumpViolation {
    Word        first;
    Word        second;
    std::string method;  // "pump" or "enumeration"
    // For method "pump": the a-run of `first` that was pumped and the cycle
    // length added to it.
    std::optional<std::size_t> run_index;
    std::optional<BigInt>      cycle_length;
  };

  // Searches for two distinct accepted words in the class of 0 under S.
  // First, for delta < samples and both a-runs of noregcs_word(Q) that carry
  // the construction (the leading run and the a^{2^{Q+1}-2} run), the word w
  // obtained by pumping that run by delta is tested; if w is accepted with
  // nf_S(w) = 0, a state cycle of length q <= states() inside one of its
  // a-runs longer than states() gives a second accepted word. Failing that,
  // the first `samples` accepted words in shortlex order are scanned for two
  // in the class of 0. Every returned pair is re-checked for acceptance and
  // equivalence. Requires 1 <= Q <= 3.
  std::optional<PumpViolation> pumping_falsifier(Dfa const& dfa, std::int64_t Q,
                                                 std::size_t samples = 64);

  // The implication (N + 1)(2^{k+1} - 1) >= 2^{2^{Q+1}-1} - 2  =>  k > N.
  bool pumping_threshold_holds(BigInt const& N, std::int64_t Q, BigInt const& k);

}  // namespace thuekit
