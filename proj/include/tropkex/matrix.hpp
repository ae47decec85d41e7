#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "tropkex/ext_val.hpp"

namespace tropkex {

/// Dense row-major k x k matrix over Z extended by epsilon.
class TropMatrix {
 public:
  /// All-epsilon k x k matrix. Throws InputError for k == 0.
  explicit TropMatrix(std::size_t k);
  TropMatrix(std::initializer_list<std::initializer_list<ExtVal>> rows);

  std::size_t size() const noexcept { return k_; }

  ExtVal& operator()(std::size_t i, std::size_t j) { return entries_[i * k_ + j]; }
  const ExtVal& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * k_ + j];
  }

  std::span<const ExtVal> entries() const noexcept { return entries_; }
  std::span<ExtVal> entries() noexcept { return entries_; }

  bool all_finite() const;

  friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

 private:
  std::size_t k_;
  std::vector<ExtVal> entries_;
};

/// An invertible matrix: row i holds diag[i] in column perm[i], epsilon elsewhere.
struct PermDiag {
  std::vector<std::size_t> perm;
  std::vector<ExtVal> diag;

  friend bool operator==(const PermDiag&, const PermDiag&) = default;
};

TropMatrix identity(std::size_t k);
TropMatrix diagonal(std::span<const ExtVal> d);
TropMatrix scalar_matrix(std::size_t k, const ExtVal& lambda);
TropMatrix transpose(const TropMatrix& x);

// Binary operations throw InputError on a size mismatch.
TropMatrix add(const TropMatrix& x, const TropMatrix& y);
TropMatrix mul(const TropMatrix& x, const TropMatrix& y);
TropMatrix scalar_mul(const ExtVal& lambda, const TropMatrix& x);
/// x o y = x (+) y (+) (x (x) y). Associative, not commutative.
TropMatrix adjoint(const TropMatrix& x, const TropMatrix& y);

std::optional<PermDiag> is_invertible(const TropMatrix& x);
TropMatrix to_matrix(const PermDiag& pd);
/// Throws NotInvertibleError unless x is a permuted diagonal.
TropMatrix inverse(const TropMatrix& x);
/// d^-1 (x) x (x) d.
TropMatrix conjugate(const TropMatrix& d, const TropMatrix& x);

/// n-fold (x)-power and o-power by square-and-multiply; n >= 1.
TropMatrix mul_power(const TropMatrix& h, const BigInt& n);
TropMatrix adjoint_power(const TropMatrix& h, const BigInt& n);

/// Min-plus matrix-vector product; v.size() must equal x.size().
std::vector<ExtVal> mat_vec(const TropMatrix& x, std::span<const ExtVal> v);

std::ostream& operator<<(std::ostream& os, const TropMatrix& x);

}  // namespace tropkex
