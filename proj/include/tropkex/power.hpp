#pragma once

#include <cstddef>

#include <gmpxx.h>

#include "tropkex/errors.hpp"

namespace tropkex {

/// Left-to-right binary square-and-multiply in a semigroup given by the
/// associative `op`. Exponent must be >= 1. Uses bitlen(n)-1 squarings and
/// popcount(n)-1 multiplications.
template <typename T, typename Op>
T power(const T& base, const mpz_class& n, Op op) {
  if (sgn(n) <= 0) throw InputError("exponent must be a positive integer");
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  T acc = base;
  for (std::size_t i = bits - 1; i-- > 0;) {
    acc = op(acc, acc);
    if (mpz_tstbit(n.get_mpz_t(), i)) acc = op(acc, base);
  }
  return acc;
}

/// base * base * ... * base, grouped from the left. Reference semantics for
/// products that are not known to be associative.
template <typename T, typename Op>
T power_left_to_right(const T& base, const mpz_class& n, Op op) {
  if (sgn(n) <= 0) throw InputError("exponent must be a positive integer");
  T acc = base;
  for (mpz_class i = 1; i < n; ++i) acc = op(acc, base);
  return acc;
}

}  // namespace tropkex
