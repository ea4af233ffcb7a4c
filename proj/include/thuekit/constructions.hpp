#pragma once

#include <cstdint>
#include <vector>

#include "thuekit/bignat.hpp"
#include "thuekit/rewriting.hpp"
#include "thuekit/word.hpp"

namespace thuekit {

  enum class FMode : std::uint8_t { closed, recursive, simulate };

  char const* to_string(FMode m) noexcept;

  // f(d_k, ..., d_1) = 2 d_k + 2^2 d_{k-1} + ... + 2^k d_1 + 2^k - 1, with
  // the tuple given in that order (d_k first). In simulate mode the word
  // b a^{d_k} ... b a^{d_1} c is reduced under U, which must give
  // a^f c a^k; its length must fit dense_cap.
  BigInt f_eval(std::vector<BigInt> const& tuple, FMode mode,
                std::size_t dense_cap = kDefaultDenseCap);

  // b a^{d_k} ... b a^{d_1} c.
  Word f_word(std::vector<BigInt> const& tuple);

  // a^{2^{n+1}-1} c a^n c.
  Word acac_word(std::int64_t n);

  // Derivation over R from acac_word(n) to 0 with 2^{n+1} + n - 1 steps:
  // for n > 0, reverse BC on the c with its neighbouring a's, 2^n - 1
  // reverse BA steps carry the new b to the front, the same construction
  // for n - 1 rewrites the remainder to 0, and b0 -> 0 finishes. Throws
  // DenseCapExceeded if the start word is longer than dense_cap.
  Derivation acac_derivation(std::int64_t n,
                             std::size_t  dense_cap = kDefaultDenseCap);

  // Reduction of w over {a, b, c, 0} to its S-normal form, using forward S
  // steps and reverse BA steps:
  //   - a word containing 0 collapses to 0 by zero rules;
  //   - otherwise aab -> ba (reverse BA) is applied while possible, then
  //     repeatedly: if some ACAC left-hand side occurs, fire it and collapse
  //     to 0; else take the rightmost b that has a c after it, move it right
  //     with BA until it meets the c and remove it with BC;
  //   - any remaining S-redexes are then reduced leftmost.
  // The derivation is over S. Throws StepBudgetExhausted beyond
  // 8|w| + 16 steps.
  Derivation case1_reduce(Word const& w);

  // nf_U(xu) = nf_U(xv) implies nf_U(u) = nf_U(v).
  bool left_cancel_check(char x, Word const& u, Word const& v);

  // a^{2^{2^{Q+1}-1}-2} c a^{2^{Q+1}-2} c a^Q c, for 1 <= Q <= 30.
  Word noregcs_word(std::int64_t Q);

  // w with the exponent of run `run_index` increased by delta. The run must
  // be an a-run and delta >= 0.
  Word pump_word(Word const& w, std::size_t run_index, BigInt const& delta);

}  // namespace thuekit
