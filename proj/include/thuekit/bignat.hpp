#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace thuekit {

  // Exponents and positions. Signed so that intermediate differences are
  // representable; every stored exponent is non-negative.
  using BigInt = boost::multiprecision::cpp_int;

  BigInt pow2(std::uint64_t e);

  // If x == 2^e for some e >= 0, returns e.
  std::optional<std::uint64_t> exact_log2(BigInt const& x);

  std::string to_string(BigInt const& x);

  // Narrowing that throws std::overflow_error when x does not fit.
  std::size_t to_size(BigInt const& x);
  std::int64_t to_int64(BigInt const& x);

}  // namespace thuekit
