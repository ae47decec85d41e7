#pragma once

#include <cstdint>
#include <limits>
#include <utility>

namespace tropkex {

/// SplitMix64. Every random choice in the toolkit flows through this
/// generator so runs are reproducible from their seeds.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t state() const noexcept { return state_; }

  std::uint64_t next();
  std::uint64_t operator()() { return next(); }

  /// Uniform integer in [lo, hi] by rejection on the smallest power-of-two
  /// window covering the range. Requires lo <= hi and a range of at most
  /// 2^63 values (InputError otherwise). lo == hi consumes no output.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

 private:
  std::uint64_t state_;
};

/// Pure form of one generator step: (next state, output).
std::pair<std::uint64_t, std::uint64_t> prng_next(std::uint64_t state);

}  // namespace tropkex
