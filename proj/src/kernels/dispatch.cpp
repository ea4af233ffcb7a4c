#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "thuekit/kernels.hpp"

namespace thuekit::kernels {

  namespace {

    Isa initial_isa() noexcept {
      if (char const* env = std::getenv("THUEKIT_KERNEL");
          env != nullptr && std::strcmp(env, "scalar") == 0) {
        return Isa::scalar;
      }
      return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
    }

    std::atomic<Isa>& current() noexcept {
      static std::atomic<Isa> isa{initial_isa()};
      return isa;
    }

  }  // namespace

  char const* to_string(Isa isa) noexcept {
    return isa == Isa::avx2 ? "avx2" : "scalar";
  }

  bool isa_available(Isa isa) noexcept {
    switch (isa) {
      case Isa::scalar:
        return true;
      case Isa::avx2:
#if defined(THUEKIT_HAVE_AVX2)
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    }
    return false;
  }

  Isa active_isa() noexcept {
    return current().load(std::memory_order_relaxed);
  }

  void set_isa(Isa isa) {
    if (!isa_available(isa)) {
      throw std::invalid_argument(std::string("kernel ISA not available: ")
                                  + to_string(isa));
    }
    current().store(isa, std::memory_order_relaxed);
  }

  void find_all(std::string_view text, std::string_view pattern,
                std::vector<std::uint32_t>& out) {
#if defined(THUEKIT_HAVE_AVX2)
    if (active_isa() == Isa::avx2) {
      avx2::find_all(text, pattern, out);
      return;
    }
#endif
    scalar::find_all(text, pattern, out);
  }

  namespace scalar {

    void find_all(std::string_view text, std::string_view pattern,
                  std::vector<std::uint32_t>& out) {
      std::size_t const n = text.size();
      std::size_t const m = pattern.size();
      if (m > n) {
        return;
      }
      for (std::size_t p = 0; p + m <= n; ++p) {
        if (text.compare(p, m, pattern) == 0) {
          out.push_back(static_cast<std::uint32_t>(p));
        }
      }
    }

  }  // namespace scalar

#if !defined(THUEKIT_HAVE_AVX2)
  namespace avx2 {

    void find_all(std::string_view, std::string_view,
                  std::vector<std::uint32_t>&) {
      throw std::logic_error("built without AVX2 kernels");
    }

  }  // namespace avx2
#endif

}  // namespace thuekit::kernels
