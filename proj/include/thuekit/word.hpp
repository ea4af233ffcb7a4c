#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "thuekit/bignat.hpp"

namespace thuekit {

  // Dense expansions beyond this many symbols are refused unless a caller
  // passes a larger cap.
  inline constexpr std::size_t kDefaultDenseCap = 1'000'000;

  // Characters reserved by the word, rule, and DFA syntaxes.
  bool is_valid_symbol(char c) noexcept;

  class Word;

  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::string symbols);

    bool contains(char c) const noexcept {
      return symbols_.find(c) != std::string::npos;
    }

    std::string const& symbols() const noexcept {
      return symbols_;
    }

    std::size_t size() const noexcept {
      return symbols_.size();
    }

    // Throws UnknownSymbol on the first symbol outside the alphabet.
    void check(Word const& w) const;
    void check(std::string_view dense) const;

    friend bool operator==(Alphabet const&, Alphabet const&) = default;

   private:
    std::string symbols_;
  };

  struct Run {
    char   symbol;
    BigInt exponent;

    friend bool operator==(Run const&, Run const&) = default;
  };

  // A word stored as maximal runs. Adjacent runs always carry distinct
  // symbols and every exponent is positive; the empty word has no runs.
  class Word {
   public:
    Word() = default;
    explicit Word(std::vector<Run> runs);

    static Word dense(std::string_view symbols);
    static Word power(char symbol, BigInt const& exponent);

    void append(char symbol, BigInt const& exponent);
    void append(Word const& other);

    Word& operator+=(Word const& other) {
      append(other);
      return *this;
    }

    friend Word operator+(Word lhs, Word const& rhs) {
      lhs.append(rhs);
      return lhs;
    }

    std::vector<Run> const& runs() const noexcept {
      return runs_;
    }

    std::size_t run_count() const noexcept {
      return runs_.size();
    }

    bool empty() const noexcept {
      return runs_.empty();
    }

    BigInt length() const;
    BigInt count(char symbol) const;
    bool   contains_symbol(char symbol) const noexcept;

    // The first n symbols, and everything after the first n symbols.
    Word prefix(BigInt const& n) const;
    Word drop(BigInt const& n) const;

    // Throws DenseCapExceeded when the length is above `cap`.
    std::string to_dense(std::size_t cap = kDefaultDenseCap) const;

    // "a^3 c a c"; the empty word prints as "".
    std::string to_string() const;

    std::uint64_t hash() const noexcept;

    friend bool operator==(Word const&, Word const&) = default;
    friend bool operator<(Word const& x, Word const& y);

   private:
    std::vector<Run> runs_;
  };

  // Length first, then lexicographic by symbol code. Words whose lengths are
  // equal are compared run by run, which agrees with the dense order.
  bool shortlex_less(Word const& x, Word const& y);

}  // namespace thuekit

template <>
struct std::hash<thuekit::Word> {
  std::size_t operator()(thuekit::Word const& w) const noexcept {
    return static_cast<std::size_t>(w.hash());
  }
};
