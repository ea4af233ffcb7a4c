#include "thuekit/bignat.hpp"

#include <limits>
#include <stdexcept>

namespace thuekit {

  BigInt pow2(std::uint64_t e) {
    BigInt r = 0;
    boost::multiprecision::bit_set(r, static_cast<unsigned>(e));
    return r;
  }

  std::optional<std::uint64_t> exact_log2(BigInt const& x) {
    if (x <= 0) {
      return std::nullopt;
    }
    auto lsb = boost::multiprecision::lsb(x);
    auto msb = boost::multiprecision::msb(x);
    if (lsb != msb) {
      return std::nullopt;
    }
    return static_cast<std::uint64_t>(msb);
  }

  std::string to_string(BigInt const& x) {
    return x.str();
  }

  std::size_t to_size(BigInt const& x) {
    if (x < 0 || x > std::numeric_limits<std::size_t>::max()) {
      throw std::overflow_error("value does not fit in size_t: " + x.str());
    }
    return static_cast<std::size_t>(x);
  }

  std::int64_t to_int64(BigInt const& x) {
    if (x < std::numeric_limits<std::int64_t>::min()
        || x > std::numeric_limits<std::int64_t>::max()) {
      throw std::overflow_error("value does not fit in int64: " + x.str());
    }
    return static_cast<std::int64_t>(x);
  }

}  // namespace thuekit
