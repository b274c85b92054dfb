#include "netmatch/random.hpp"

#include "netmatch/errors.hpp"

namespace netmatch {

std::uint64_t RandomSource::uniform_index(std::uint64_t bound) {
  if (bound == 0) {
    throw InvalidParameter("uniform_index bound must be positive");
  }
  // Lemire's multiply-shift with rejection of the biased low region.
  std::uint64_t x = engine_();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = engine_();
      m = static_cast<__uint128_t>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace netmatch
