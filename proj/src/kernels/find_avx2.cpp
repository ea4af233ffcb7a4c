#include <immintrin.h>

#include <string>

#include "thuekit/kernels.hpp"

namespace thuekit::kernels::avx2 {

  // 32 candidate start positions per iteration: AND together the byte
  // equality masks of text[p + i] == pattern[i] for each i.
  void find_all(std::string_view text, std::string_view pattern,
                std::vector<std::uint32_t>& out) {
    std::size_t const n = text.size();
    std::size_t const m = pattern.size();
    if (m > n) {
      return;
    }
    if (m == 0) {
      for (std::size_t p = 0; p <= n; ++p) {
        out.push_back(static_cast<std::uint32_t>(p));
      }
      return;
    }
    // Zero padding lets every load read a full vector; symbols are never
    // NUL, so padded bytes never match.
    thread_local std::string buf;
    buf.assign(text);
    buf.append(m + 32, '\0');
    char const* const s = buf.data();

    std::size_t const last = n - m;  // final valid start
    for (std::size_t base = 0; base <= last; base += 32) {
      std::uint32_t mask = ~0u;
      for (std::size_t i = 0; i < m && mask != 0; ++i) {
        __m256i const v = _mm256_loadu_si256(
            reinterpret_cast<__m256i const*>(s + base + i));
        __m256i const eq = _mm256_cmpeq_epi8(v, _mm256_set1_epi8(pattern[i]));
        mask &= static_cast<std::uint32_t>(_mm256_movemask_epi8(eq));
      }
      if (last - base < 31) {
        mask &= (1u << (last - base + 1)) - 1;
      }
      while (mask != 0) {
        out.push_back(
            static_cast<std::uint32_t>(base + __builtin_ctz(mask)));
        mask &= mask - 1;
      }
    }
  }

}  // namespace thuekit::kernels::avx2
