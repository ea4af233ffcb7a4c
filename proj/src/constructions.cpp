#include "thuekit/constructions.hpp"

#include <stdexcept>
#include <string>

#include "thuekit/builtin.hpp"
#include "thuekit/errors.hpp"

namespace thuekit {

  namespace {

    void check_tuple(std::vector<BigInt> const& t) {
      if (t.empty()) {
        throw std::invalid_argument("f needs a tuple with k >= 1");
      }
      for (auto const& d : t) {
        if (d < 0) {
          throw std::invalid_argument("f is defined on non-negative tuples");
        }
      }
    }

  }  // namespace

  char const* to_string(FMode m) noexcept {
    switch (m) {
      case FMode::closed:
        return "closed";
      case FMode::recursive:
        return "recursive";
      case FMode::simulate:
        return "simulate";
    }
    return "?";
  }

  Word f_word(std::vector<BigInt> const& tuple) {
    check_tuple(tuple);
    Word w;
    for (auto const& d : tuple) {
      w.append('b', 1);
      w.append('a', d);
    }
    w.append('c', 1);
    return w;
  }

  BigInt f_eval(std::vector<BigInt> const& tuple, FMode mode,
                std::size_t dense_cap) {
    check_tuple(tuple);
    std::size_t const k = tuple.size();
    switch (mode) {
      case FMode::closed: {
        BigInt f = pow2(k) - 1;
        for (std::size_t j = 0; j < k; ++j) {
          f += pow2(j + 1) * tuple[j];
        }
        return f;
      }
      case FMode::recursive: {
        BigInt f = 2 * tuple[k - 1] + 1;
        for (std::size_t j = k - 1; j-- > 0;) {
          f = 2 * f + 2 * tuple[j] + 1;
        }
        return f;
      }
      case FMode::simulate:
        break;
    }
    Word const   start  = f_word(tuple);
    BigInt const expect = f_eval(tuple, FMode::closed);
    if (start.length() > dense_cap || expect + k + 1 > dense_cap) {
      throw DenseCapExceeded("f simulation exceeds the dense cap of "
                             + std::to_string(dense_cap));
    }
    Word const nf   = normal_form(builtin_system(SystemId::U), start);
    auto const& r   = nf.runs();
    bool const shape = r.size() == 3 && r[0].symbol == 'a' && r[1] == Run{'c', 1}
                       && r[2] == Run{'a', BigInt(k)};
    if (!shape) {
      throw std::logic_error("U-normal form of " + start.to_string() + " is "
                             + nf.to_string() + ", not a^f c a^k");
    }
    return r[0].exponent;
  }

  Word acac_word(std::int64_t n) {
    if (n < 0) {
      throw std::invalid_argument("acac_word needs n >= 0");
    }
    return Word::power('a', pow2(static_cast<std::uint64_t>(n) + 1) - 1)
           + Word::dense("c") + Word::power('a', n) + Word::dense("c");
  }

  Derivation acac_derivation(std::int64_t n, std::size_t dense_cap) {
    Word const start = acac_word(n);
    if (start.length() > dense_cap) {
      throw DenseCapExceeded("acac_word(" + std::to_string(n) + ") has length "
                             + start.length().str() + " > dense cap "
                             + std::to_string(dense_cap));
    }
    DerivationBuilder b(builtin_system(SystemId::R), start);
    // At offset o the word reads ... a^{2^{k+1}-1} c a^k c ... ; every level
    // leaves one b in front, so level k sits at offset n - k.
    for (std::int64_t k = n; k >= 1; --k) {
      BigInt const o    = n - k;
      BigInt const head = pow2(static_cast<std::uint64_t>(k) + 1) - 2;
      b.apply("BC", std::nullopt, o + head, Direction::reverse);
      BigInt const shifts = pow2(static_cast<std::uint64_t>(k)) - 1;
      for (BigInt j = 0; j < shifts; ++j) {
        b.apply("BA", std::nullopt, o + head - 2 - 2 * j, Direction::reverse);
      }
    }
    b.apply("ACC", std::nullopt, n, Direction::forward);
    for (std::int64_t o = n - 1; o >= 0; --o) {
      b.apply("ZL_b", std::nullopt, o, Direction::forward);
    }
    return b.finish();
  }

  Derivation case1_reduce(Word const& w) {
    RewritingSystem const& S = builtin_system(SystemId::S);
    S.alphabet().check(w);
    std::size_t const len    = to_size(w.length());
    std::size_t const budget = 8 * len + 16;
    DerivationBuilder b(S, w);
    auto              step = [&](std::string id, std::optional<std::int64_t> param,
                    std::size_t pos, Direction dir) {
      if (b.size() >= budget) {
        throw StepBudgetExhausted(budget);
      }
      b.apply(std::move(id), param, pos, dir);
    };
    auto collapse = [&] {
      for (;;) {
        std::string const s = b.current().to_dense();
        std::size_t const z = s.find('0');
        if (s.size() == 1) {
          return;
        }
        if (z > 0) {
          step(std::string("ZL_") + s[z - 1], std::nullopt, z - 1,
               Direction::forward);
        } else {
          step(std::string("ZR_") + s[1], std::nullopt, 0, Direction::forward);
        }
      }
    };

    if (w.contains_symbol('0')) {
      collapse();
      return b.finish();
    }
    for (;;) {
      std::size_t const p = b.current().to_dense().find("aab");
      if (p == std::string::npos) {
        break;
      }
      step("BA", std::nullopt, p, Direction::reverse);
    }
    for (;;) {
      std::optional<Redex> acac;
      for (auto const& r : find_redexes(S, b.current())) {
        if (r.rule_id == "ACAC") {
          acac = r;
          break;
        }
      }
      if (acac) {
        step(acac->rule_id, acac->param, to_size(acac->position),
             Direction::forward);
        collapse();
        return b.finish();
      }
      std::string const s      = b.current().to_dense();
      std::size_t const last_c = s.rfind('c');
      if (last_c == std::string::npos || last_c == 0) {
        break;
      }
      std::size_t pos = s.rfind('b', last_c - 1);
      if (pos == std::string::npos) {
        break;
      }
      // Only a's and c's lie between this b and the last c.
      for (std::size_t i = pos + 1; s[i] == 'a'; ++i) {
        step("BA", std::nullopt, pos, Direction::forward);
        pos += 2;
      }
      step("BC", std::nullopt, pos, Direction::forward);
    }
    if (b.size() >= budget && !is_irreducible(S, b.current())) {
      throw StepBudgetExhausted(budget);
    }
    auto const rest = reduce_to_normal_form(
        S, b.current(), Strategy::leftmost(),
        std::max<std::size_t>(budget - b.size(), 1));
    if (b.size() + rest.derivation.size() > budget) {
      throw StepBudgetExhausted(budget);
    }
    b.append(rest.derivation);
    return b.finish();
  }

  bool left_cancel_check(char x, Word const& u, Word const& v) {
    if (x != 'a' && x != 'b' && x != 'c') {
      throw std::invalid_argument("left_cancel_check needs x in {a, b, c}");
    }
    RewritingSystem const& U = builtin_system(SystemId::U);
    U.alphabet().check(u);
    U.alphabet().check(v);
    Word const xw = Word::dense(std::string(1, x));
    if (nf_U(xw + u) != nf_U(xw + v)) {
      return true;
    }
    return nf_U(u) == nf_U(v);
  }

  Word noregcs_word(std::int64_t Q) {
    if (Q < 1 || Q > 30) {
      throw std::invalid_argument("noregcs_word needs 1 <= Q <= 30");
    }
    auto const   q     = static_cast<std::uint64_t>(Q);
    std::uint64_t const inner = (std::uint64_t{1} << (q + 1)) - 1;
    return Word::power('a', pow2(inner) - 2) + Word::dense("c")
           + Word::power('a', BigInt(inner) - 1) + Word::dense("c")
           + Word::power('a', Q) + Word::dense("c");
  }

  Word pump_word(Word const& w, std::size_t run_index, BigInt const& delta) {
    if (delta < 0) {
      throw std::invalid_argument("pump delta must be non-negative");
    }
    if (run_index >= w.run_count() || w.runs()[run_index].symbol != 'a') {
      throw std::invalid_argument("run " + std::to_string(run_index) + " of "
                                  + w.to_string() + " is not an a-run");
    }
    std::vector<Run> runs = w.runs();
    runs[run_index].exponent += delta;
    return Word(std::move(runs));
  }

}  // namespace thuekit
