#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tropkex/ext_val.hpp"

namespace tropkex {

/// coefficient (x) x_1^{e_1} (x) ... (x) x_v^{e_v}
struct TropMonomial {
  ExtVal coefficient;
  std::vector<std::uint32_t> exponents;

  std::uint64_t degree() const;

  friend bool operator==(const TropMonomial&, const TropMonomial&) = default;
};

/// Canonical form: deglex-descending, unique exponent vectors, no epsilon
/// coefficients. Only constructible through canonicalize().
class TropPolynomial {
 public:
  TropPolynomial() = default;

  const std::vector<TropMonomial>& monomials() const noexcept { return monomials_; }
  bool empty() const noexcept { return monomials_.empty(); }
  std::size_t variable_count() const noexcept { return variables_; }

  friend TropPolynomial canonicalize(std::vector<TropMonomial> raw);
  friend bool operator==(const TropPolynomial&, const TropPolynomial&) = default;

 private:
  std::size_t variables_ = 0;
  std::vector<TropMonomial> monomials_;
};

/// true when `a` precedes `b`: higher total degree first, then
/// lexicographically larger exponent vector (first variable most significant).
bool deglex_before(const TropMonomial& a, const TropMonomial& b);

/// Throws InputError when monomials disagree on the variable count.
TropPolynomial canonicalize(std::vector<TropMonomial> raw);

/// Throws UndefinedDegreeError for the empty polynomial.
std::uint64_t degree(const TropPolynomial& p);

ExtVal evaluate(const TropMonomial& m, std::span<const ExtVal> point);
/// Throws InputError when the point has the wrong dimension.
ExtVal evaluate(const TropPolynomial& p, std::span<const ExtVal> point);

}  // namespace tropkex
