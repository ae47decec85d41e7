#pragma once

/**
 * Tropical scalars over the integers extended by epsilon.
 *
 *   a (+) b = min(a, b)        epsilon is the (+)-identity
 *   a (x) b = a + b            epsilon absorbs, 0 is the (x)-identity
 *   a  o  b = a (+) b (+) (a (x) b)
 *
 * Finite values are arbitrary precision; protocol powers routinely carry
 * entries of a few hundred bits.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace tropkex {

using BigInt = mpz_class;

class ExtVal {
 public:
  /// Default-constructed values are epsilon.
  ExtVal() = default;
  ExtVal(long v) : finite_(true), value_(v) {}
  ExtVal(int v) : finite_(true), value_(v) {}
  ExtVal(long long v);
  explicit ExtVal(BigInt v) : finite_(true), value_(std::move(v)) {}

  static ExtVal infinity() { return ExtVal(); }

  bool is_finite() const noexcept { return finite_; }
  bool is_infinity() const noexcept { return !finite_; }

  /// Throws InputError on epsilon.
  const BigInt& value() const;

  std::string to_string() const;

  friend bool operator==(const ExtVal& a, const ExtVal& b);
  /// Total order with epsilon as the greatest element.
  friend std::strong_ordering operator<=>(const ExtVal& a, const ExtVal& b);

  // In-place kernels used by the matrix code; they reuse limb storage.
  void assign_sum(const ExtVal& a, const ExtVal& b);
  /// Swaps `candidate` in when it is strictly smaller.
  void take_min(ExtVal& candidate);
  void min_assign(const ExtVal& other);

 private:
  bool finite_ = false;
  BigInt value_;
};

ExtVal add(const ExtVal& a, const ExtVal& b);
ExtVal mul(const ExtVal& a, const ExtVal& b);
ExtVal adjoint(const ExtVal& a, const ExtVal& b);

std::ostream& operator<<(std::ostream& os, const ExtVal& v);

}  // namespace tropkex
