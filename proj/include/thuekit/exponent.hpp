#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thuekit/bignat.hpp"

namespace thuekit {

  // c0 + c1*n + c2 * 2^(c3*n + c4), with c3 >= 0. A schema parameter n ranges
  // over n >= n_min; the expression must be non-negative on that range.
  class ExponentExpr {
   public:
    ExponentExpr() = default;
    ExponentExpr(BigInt c0, BigInt c1, BigInt c2, std::int64_t c3,
                 std::int64_t c4);

    static ExponentExpr constant(BigInt c);
    static ExponentExpr parameter();  // n

    BigInt const& c0() const noexcept {
      return c0_;
    }
    BigInt const& c1() const noexcept {
      return c1_;
    }
    BigInt const& c2() const noexcept {
      return c2_;
    }
    std::int64_t c3() const noexcept {
      return c3_;
    }
    std::int64_t c4() const noexcept {
      return c4_;
    }

    bool is_constant() const noexcept {
      return c1_ == 0 && (c2_ == 0 || c3_ == 0);
    }

    // Exact value; n must satisfy c3*n + c4 >= 0.
    BigInt eval(std::int64_t n) const;

    // Checks the expression is well formed and non-negative for all
    // n >= n_min. Throws ParseError otherwise.
    void validate(std::int64_t n_min) const;

    // From this parameter on the expression is strictly monotone (or
    // constant). Values below it are checked one by one by the solver.
    std::int64_t monotone_from(std::int64_t n_min) const;

    struct Solutions {
      bool                      all = false;  // every n >= n_min
      std::vector<std::int64_t> values;       // ascending
    };

    // All n >= n_min with eval(n) == target, found by run arithmetic.
    Solutions solve(BigInt const& target, std::int64_t n_min) const;

    // Sum of two expressions, when the result stays in the grammar.
    std::optional<ExponentExpr> plus(ExponentExpr const& other) const;

    std::string to_string() const;

    friend bool operator==(ExponentExpr const&, ExponentExpr const&)
        = default;

   private:
    void fold();

    BigInt       c0_ = 0;
    BigInt       c1_ = 0;
    BigInt       c2_ = 0;
    std::int64_t c3_ = 0;
    std::int64_t c4_ = 0;
  };

  // Parses e.g. "2^(n+1)-1", "2n+1", "n", "7", "2^(15)-2". When
  // `allow_parameter` is false, any occurrence of n is an error.
  ExponentExpr parse_exponent(std::string_view text,
                              bool             allow_parameter = true);

}  // namespace thuekit
