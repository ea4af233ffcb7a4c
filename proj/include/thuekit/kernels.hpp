#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

// Substring-occurrence kernels over dense words (one byte per symbol). The
// scalar versions are the reference; the AVX2 versions must produce the same
// output for every input.
namespace thuekit::kernels {

  enum class Isa : std::uint8_t { scalar, avx2 };

  char const* to_string(Isa isa) noexcept;

  bool isa_available(Isa isa) noexcept;

  // Best available ISA, unless THUEKIT_KERNEL=scalar is set in the
  // environment or set_isa was called.
  Isa active_isa() noexcept;

  // Throws std::invalid_argument if the ISA is not available here.
  void set_isa(Isa isa);

  // Appends every p with text.substr(p, pattern.size()) == pattern, in
  // ascending order. An empty pattern occurs at 0..text.size().
  void find_all(std::string_view text, std::string_view pattern,
                std::vector<std::uint32_t>& out);

  namespace scalar {
    void find_all(std::string_view text, std::string_view pattern,
                  std::vector<std::uint32_t>& out);
  }

  namespace avx2 {
    void find_all(std::string_view text, std::string_view pattern,
                  std::vector<std::uint32_t>& out);
  }

}  // namespace thuekit::kernels
