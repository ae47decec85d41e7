#include "tropkex/prng.hpp"

#include <bit>

#include "tropkex/errors.hpp"

namespace tropkex {

std::pair<std::uint64_t, std::uint64_t> prng_next(std::uint64_t state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return {state, z ^ (z >> 31)};
}

std::uint64_t SplitMix64::next() {
  auto [s, out] = prng_next(state_);
  state_ = s;
  return out;
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InputError("uniform: lo must not exceed hi");
  const std::uint64_t width =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (width >= (std::uint64_t{1} << 63)) {
    throw InputError("uniform: range exceeds 2^63 values");
  }
  if (width == 0) return lo;
  const std::uint64_t range = width + 1;
  const std::uint64_t mask = std::bit_ceil(range) - 1;
  std::uint64_t x;
  do {
    x = next() & mask;
  } while (x >= range);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x);
}

}  // namespace tropkex
