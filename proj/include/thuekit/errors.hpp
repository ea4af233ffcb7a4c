#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thuekit {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed system file, word, exponent expression, or DFA file. `line` is
  // 1-based, 0 when the input is not line oriented.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t line = 0)
        : Error(line == 0 ? msg : "line " + std::to_string(line) + ": " + msg),
          line_(line) {}

    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

  class UnknownSymbol : public Error {
   public:
    explicit UnknownSymbol(char c, std::size_t line = 0)
        : Error((line == 0 ? std::string() : "line " + std::to_string(line) + ": ")
                + "symbol '" + c + "' is not in the alphabet"),
          symbol_(c) {}

    char symbol() const noexcept {
      return symbol_;
    }

   private:
    char symbol_;
  };

  class NotARedex : public Error {
   public:
    using Error::Error;
  };

  class StepBudgetExhausted : public Error {
   public:
    explicit StepBudgetExhausted(std::size_t budget)
        : Error("step budget of " + std::to_string(budget) + " exhausted"),
          budget_(budget) {}

    std::size_t budget() const noexcept {
      return budget_;
    }

   private:
    std::size_t budget_;
  };

  // A dense (one byte per symbol) expansion would exceed the configured cap.
  class DenseCapExceeded : public Error {
   public:
    using Error::Error;
  };

}  // namespace thuekit
