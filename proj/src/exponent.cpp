#include "thuekit/exponent.hpp"

#include <cctype>
#include <limits>

#include "thuekit/errors.hpp"

namespace thuekit {

  namespace {
    BigInt abs(BigInt const& x) {
      return x < 0 ? BigInt(-x) : x;
    }

    int sign(BigInt const& x) {
      return x < 0 ? -1 : (x > 0 ? 1 : 0);
    }
  }  // namespace

  ExponentExpr::ExponentExpr(BigInt c0, BigInt c1, BigInt c2, std::int64_t c3,
                             std::int64_t c4)
      : c0_(std::move(c0)),
        c1_(std::move(c1)),
        c2_(std::move(c2)),
        c3_(c3),
        c4_(c4) {
    if (c3_ < 0) {
      throw ParseError("exponent expression outside supported form: "
                       "negative slope inside 2^(...)");
    }
    fold();
  }

  ExponentExpr ExponentExpr::constant(BigInt c) {
    return ExponentExpr(std::move(c), 0, 0, 0, 0);
  }

  ExponentExpr ExponentExpr::parameter() {
    return ExponentExpr(0, 1, 0, 0, 0);
  }

  void ExponentExpr::fold() {
    if (c2_ != 0 && c3_ == 0) {
      if (c4_ < 0) {
        throw ParseError(
            "exponent expression outside supported form: 2^(negative)");
      }
      c0_ += c2_ * pow2(static_cast<std::uint64_t>(c4_));
      c2_ = 0;
    }
    if (c2_ == 0) {
      c3_ = 0;
      c4_ = 0;
    }
  }

  BigInt ExponentExpr::eval(std::int64_t n) const {
    BigInt v = c0_ + c1_ * n;
    if (c2_ != 0) {
      std::int64_t const e = c3_ * n + c4_;
      if (e < 0) {
        throw std::domain_error("2^(" + std::to_string(e)
                                + ") is not an integer");
      }
      v += c2_ * pow2(static_cast<std::uint64_t>(e));
    }
    return v;
  }

  std::int64_t ExponentExpr::monotone_from(std::int64_t n_min) const {
    if (c2_ == 0) {
      return n_min;
    }
    // eval(n+1) - eval(n) = c1 + c2 * (2^c3 - 1) * 2^(c3 n + c4); the second
    // term dominates once it exceeds |c1| and keeps dominating after.
    BigInt const       growth = abs(c2_) * (pow2(c3_) - 1);
    BigInt const       bound  = abs(c1_);
    std::int64_t       n      = n_min;
    std::int64_t const lowest = (c4_ < 0) ? (-c4_ + c3_ - 1) / c3_ : 0;
    if (n < lowest) {
      n = lowest;
    }
    while (growth * pow2(static_cast<std::uint64_t>(c3_ * n + c4_))
           <= bound) {
      ++n;
    }
    return n;
  }

  void ExponentExpr::validate(std::int64_t n_min) const {
    if (c2_ != 0) {
      if (c3_ * n_min + c4_ < 0) {
        throw ParseError("exponent expression " + to_string()
                         + " is not an integer at n = "
                         + std::to_string(n_min));
      }
    }
    std::int64_t const from = monotone_from(n_min);
    for (std::int64_t n = n_min; n <= from; ++n) {
      if (eval(n) < 0) {
        throw ParseError("exponent expression " + to_string()
                         + " is negative at n = " + std::to_string(n));
      }
    }
    int const direction = c2_ != 0 ? sign(c2_) : sign(c1_);
    if (direction < 0) {
      throw ParseError("exponent expression " + to_string()
                       + " becomes negative for large n");
    }
  }

  ExponentExpr::Solutions ExponentExpr::solve(BigInt const& target,
                                              std::int64_t  n_min) const {
    Solutions out;
    auto      push = [&](BigInt const& n) {
      if (n >= n_min && n <= std::numeric_limits<std::int64_t>::max()) {
        out.values.push_back(static_cast<std::int64_t>(n));
      }
    };

    if (is_constant()) {
      out.all = (c0_ == target);
      return out;
    }
    if (c2_ == 0) {
      BigInt const diff = target - c0_;
      if (diff % c1_ == 0) {
        push(diff / c1_);
      }
      return out;
    }
    if (c1_ == 0) {
      BigInt const r = target - c0_;
      if (r % c2_ != 0) {
        return out;
      }
      auto const e = exact_log2(r / c2_);
      if (!e) {
        return out;
      }
      BigInt const shifted = BigInt(*e) - c4_;
      if (shifted >= 0 && shifted % c3_ == 0) {
        push(shifted / c3_);
      }
      return out;
    }

    // General case: scan the short non-monotone prefix, then bisect.
    std::int64_t const from = monotone_from(n_min);
    for (std::int64_t n = n_min; n < from; ++n) {
      if (eval(n) == target) {
        out.values.push_back(n);
      }
    }
    int const dir = sign(c2_);
    auto      cmp = [&](std::int64_t n) {
      BigInt const v = eval(n);
      return v == target ? 0 : ((v < target) == (dir > 0) ? -1 : 1);
    };
    if (cmp(from) > 0) {
      return out;
    }
    std::int64_t step = 1;
    while (cmp(from + step) < 0) {
      step *= 2;
    }
    std::int64_t lo = from, hi = from + step;
    while (lo < hi) {
      std::int64_t const mid = lo + (hi - lo) / 2;
      if (cmp(mid) < 0) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (cmp(lo) == 0) {
      out.values.push_back(lo);
    }
    return out;
  }

  std::optional<ExponentExpr> ExponentExpr::plus(ExponentExpr const& o) const {
    if (c2_ != 0 && o.c2_ != 0 && (c3_ != o.c3_ || c4_ != o.c4_)) {
      return std::nullopt;
    }
    BigInt       c2 = c2_ + o.c2_;
    std::int64_t c3 = c2_ != 0 ? c3_ : o.c3_;
    std::int64_t c4 = c2_ != 0 ? c4_ : o.c4_;
    return ExponentExpr(c0_ + o.c0_, c1_ + o.c1_, std::move(c2), c3, c4);
  }

  std::string ExponentExpr::to_string() const {
    std::string s;
    auto        term = [&s](BigInt const& coeff, std::string const& body) {
      if (coeff == 0) {
        return;
      }
      if (s.empty()) {
        if (coeff < 0) {
          s += '-';
        }
      } else {
        s += coeff < 0 ? '-' : '+';
      }
      BigInt const a = abs(coeff);
      if (body.empty()) {
        s += a.str();
      } else {
        if (a != 1) {
          s += a.str();
          s += '*';
        }
        s += body;
      }
    };
    if (c2_ != 0) {
      std::string lin;
      if (c3_ != 0) {
        lin = (c3_ == 1 ? std::string() : std::to_string(c3_) + "*") + "n";
      }
      if (c4_ != 0 || lin.empty()) {
        if (!lin.empty() && c4_ > 0) {
          lin += '+';
        }
        lin += std::to_string(c4_);
      }
      term(c2_, "2^(" + lin + ")");
    }
    term(c1_, "n");
    term(c0_, "");
    return s.empty() ? "0" : s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parser
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class ExprParser {
     public:
      ExprParser(std::string_view text, bool allow_n)
          : text_(text), allow_n_(allow_n) {}

      ExponentExpr parse() {
        ExponentExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) {
          fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return e;
      }

     private:
      [[noreturn]] void fail(std::string const& why) const {
        throw ParseError("bad exponent expression \"" + std::string(text_)
                         + "\": " + why);
      }

      void skip_ws() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
      }

      ExponentExpr expr() {
        ExponentExpr acc = term();
        for (;;) {
          char const c = peek();
          if (c != '+' && c != '-') {
            return acc;
          }
          ++pos_;
          ExponentExpr rhs = term();
          if (c == '-') {
            rhs = scale(rhs, -1);
          }
          auto sum = acc.plus(rhs);
          if (!sum) {
            fail("outside supported form (two distinct powers of 2)");
          }
          acc = *sum;
        }
      }

      ExponentExpr term() {
        ExponentExpr acc = unary();
        for (;;) {
          char const c = peek();
          if (c == '*') {
            ++pos_;
          } else if (!(std::isdigit(static_cast<unsigned char>(c)) || c == 'n'
                       || c == '(')) {
            return acc;
          }
          acc = multiply(acc, power());
        }
      }

      ExponentExpr unary() {
        char const c = peek();
        if (c == '-') {
          ++pos_;
          return scale(unary(), -1);
        }
        if (c == '+') {
          ++pos_;
          return unary();
        }
        return power();
      }

      ExponentExpr power() {
        ExponentExpr base = atom();
        if (peek() != '^') {
          return base;
        }
        ++pos_;
        ExponentExpr exponent = power();
        return raise(base, exponent);
      }

      ExponentExpr atom() {
        char const c = peek();
        if (c == '(') {
          ++pos_;
          ExponentExpr e = expr();
          if (peek() != ')') {
            fail("missing ')'");
          }
          ++pos_;
          return e;
        }
        if (c == 'n') {
          if (!allow_n_) {
            fail("parameter n not allowed here");
          }
          ++pos_;
          return ExponentExpr::parameter();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
          std::size_t const start = pos_;
          while (pos_ < text_.size()
                 && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
          }
          return ExponentExpr::constant(
              BigInt(std::string(text_.substr(start, pos_ - start))));
        }
        if (c == '\0') {
          fail("unexpected end of input");
        }
        fail("unexpected '" + std::string(1, c) + "'");
      }

      static ExponentExpr scale(ExponentExpr const& e, BigInt const& k) {
        return ExponentExpr(e.c0() * k, e.c1() * k, e.c2() * k, e.c3(),
                            e.c4());
      }

      ExponentExpr multiply(ExponentExpr const& x, ExponentExpr const& y) {
        if (x.is_constant()) {
          return scale(y, x.c0());
        }
        if (y.is_constant()) {
          return scale(x, y.c0());
        }
        fail("outside supported form (product of two non-constant terms)");
      }

      ExponentExpr raise(ExponentExpr const& base,
                         ExponentExpr const& exponent) {
        if (!base.is_constant()) {
          fail("outside supported form (non-constant base)");
        }
        BigInt const& b = base.c0();
        if (exponent.is_constant()) {
          BigInt const& e = exponent.c0();
          if (e < 0) {
            fail("negative power");
          }
          if (e > 1u << 31) {
            fail("power too large");
          }
          auto const ue = static_cast<unsigned>(e);
          if (b == 2) {
            return ExponentExpr::constant(pow2(ue));
          }
          return ExponentExpr::constant(boost::multiprecision::pow(b, ue));
        }
        auto const log_b = exact_log2(b);
        if (!log_b || *log_b == 0 || exponent.c2() != 0) {
          fail("outside supported form (only 2^(linear in n) is allowed)");
        }
        auto const j = static_cast<std::int64_t>(*log_b);
        return ExponentExpr(0, 0, 1, j * to_int64(exponent.c1()),
                            j * to_int64(exponent.c0()));
      }

      std::string_view text_;
      bool             allow_n_;
      std::size_t      pos_ = 0;
    };

  }  // namespace

  ExponentExpr parse_exponent(std::string_view text, bool allow_parameter) {
    return ExprParser(text, allow_parameter).parse();
  }

}  // namespace thuekit
