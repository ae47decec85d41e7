#include <cmath>
#include <unordered_set>
#include <vector>

#include "doctest.h"
#include "tropkex/errors.hpp"
#include "tropkex/prng.hpp"

using namespace tropkex;

TEST_CASE("splitmix64 reference outputs") {
  SplitMix64 g(0);
  CHECK(g.next() == 0xE220A8397B1DCDAFull);
  CHECK(g.next() == 0x6E789E6AA1B965F4ull);
  CHECK(g.next() == 0x06C45D188009454Full);
  SplitMix64 h(1234567);
  CHECK(h.next() == 6457827717110365317ull);
  CHECK(h.next() == 3203168211198807973ull);
}

TEST_CASE("pure step matches the object") {
  SplitMix64 g(99);
  std::uint64_t s = 99;
  for (int i = 0; i < 100; ++i) {
    const auto [ns, out] = prng_next(s);
    CHECK(out == g.next());
    CHECK(ns == g.state());
    s = ns;
  }
}

TEST_CASE("no immediate repeats over a million outputs") {
  SplitMix64 g(7);
  std::uint64_t prev = g.next();
  bool repeat = false;
  for (int i = 0; i < 1000000; ++i) {
    const std::uint64_t v = g.next();
    repeat = repeat || v == prev;
    prev = v;
  }
  CHECK_FALSE(repeat);
}

TEST_CASE("uniform range handling") {
  SplitMix64 g(5);
  const std::uint64_t before = g.state();
  CHECK(g.uniform(17, 17) == 17);
  CHECK(g.state() == before);
  CHECK_THROWS_AS(g.uniform(2, 1), InputError);
  CHECK_THROWS_AS(g.uniform(INT64_MIN, INT64_MAX), InputError);
  for (int i = 0; i < 10000; ++i) {
    const auto v = g.uniform(-3, 4);
    CHECK((v >= -3 && v <= 4));
  }
  SplitMix64 a(8), b(8);
  for (int i = 0; i < 100; ++i) CHECK(a.uniform(-1000, 1000) == b.uniform(-1000, 1000));
}

TEST_CASE("uniform histogram stays within four sigma") {
  constexpr int lo = -1000, hi = 1000, n = 1000000;
  constexpr int buckets = hi - lo + 1;
  std::vector<int> hist(buckets, 0);
  SplitMix64 g(2024);
  for (int i = 0; i < n; ++i) ++hist[static_cast<std::size_t>(g.uniform(lo, hi) - lo)];
  const double p = 1.0 / buckets;
  const double mean = n * p;
  const double sigma = std::sqrt(n * p * (1 - p));
  int outside = 0;
  for (int c : hist)
    if (std::abs(c - mean) > 4 * sigma) ++outside;
  // 2001 buckets at 4 sigma: the expected count outside is about 0.13.
  CHECK(outside <= 1);
}
