#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace netmatch {

// SplitMix64 finalizer. Used to derive independent sub-seeds from a master seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Sub-seed for stream `stream` of `master`. Distinct streams give unrelated seeds.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x5851F42D4C957F2DULL));
}

/// Seeded random stream shared by the generators and the market builder.
///
/// The standard library distributions are implementation-defined, so integer
/// and real draws are derived here directly from the 64-bit engine output.
/// Equal seeds produce equal streams on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound);

  // Uniform real in [0, 1) with 53 bits of resolution.
  double uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform_real() < p; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_index(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace netmatch
