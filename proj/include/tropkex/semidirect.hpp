#pragma once

/**
 * Semidirect products T x| G of tropical matrix semigroups.
 *
 *   (x, g)(y, h) = (x^h * y, combine(g, h))
 *
 * where x^h is the action and * is (+) for additive actions, (x) for
 * multiplicative ones. Three actions are provided:
 *
 *   adjoint      x^h = x o h                   combine = o    additive
 *   sandwich     x^h = (h (x) x^T) (+) (x^T (x) h)
 *                                              combine = (x)  additive
 *   conjugation  x^h = h^-1 (x) x (x) h        combine = (x)  multiplicative
 *
 * The sandwich action is additive but does not compose
 * (x^{g (x) h} != (x^g)^h in general), so its pair product is not
 * associative. Powers are defined left to right, p^{n+1} = p^n p, and every
 * fast path must agree with that bit for bit.
 */

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tropkex/matrix.hpp"

namespace tropkex {

struct SemidirectPair {
  TropMatrix x;
  TropMatrix g;

  friend bool operator==(const SemidirectPair&, const SemidirectPair&) = default;
};

enum class ActionMode { additive, multiplicative };

struct Action {
  using MatrixFn = std::function<TropMatrix(const TropMatrix&, const TropMatrix&)>;

  std::string name;
  MatrixFn apply;
  MatrixFn combine;
  ActionMode mode;
  /// The action is only defined for invertible group elements.
  bool needs_invertible = false;

  static Action adjoint();
  static Action sandwich();
  static Action conjugation();
};

TropMatrix adjoint_action(const TropMatrix& x, const TropMatrix& g);
TropMatrix sandwich_action(const TropMatrix& m, const TropMatrix& h);
TropMatrix conj_action(const TropMatrix& x, const TropMatrix& h);

SemidirectPair sd_mul(const SemidirectPair& p, const SemidirectPair& q, const Action& a);

/// Reference semantics: p^1 = p, p^{n+1} = p^n p. O(n) products.
SemidirectPair sd_power_ltr(const SemidirectPair& p, const BigInt& n, const Action& a);

/// Square-and-multiply over sd_mul. Equals sd_power_ltr only when the pair
/// product is associative (adjoint, conjugation). For the sandwich action it
/// computes a different, bracketing-dependent value.
SemidirectPair sd_power_fast(const SemidirectPair& p, const BigInt& n, const Action& a);

/// Row-major vectorisation: index (i, j) -> i * k + j.
std::vector<ExtVal> vec(const TropMatrix& m);
TropMatrix unvec(std::span<const ExtVal> v, std::size_t k);

/// The k^2 x k^2 min-plus matrix of M -> sandwich_action(M, h):
///   Phi[(i,j),(p,q)] = min({h(i,q) : p == j} u {h(p,j) : q == i})
TropMatrix phi_operator(const TropMatrix& h);

/// I (+) Phi (+) ... (+) Phi^{n-1}, by doubling; n >= 1.
TropMatrix phi_series(const TropMatrix& phi, const BigInt& n);

/// Sandwich-action power with left-to-right semantics in O(log n) operator
/// products: (M, H)^n = (sum_{j<n} phi^j(M), H^n).
SemidirectPair sandwich_power_fast(const TropMatrix& m, const TropMatrix& h,
                                   const BigInt& n);

struct AxiomReport {
  std::string action;
  std::size_t trials = 0;
  std::size_t additivity_pass = 0;
  /// Only exercised for multiplicative actions.
  std::size_t multiplicativity_pass = 0;
  bool multiplicativity_tested = false;
  std::size_t composition_pass = 0;

  bool additivity_holds() const { return additivity_pass == trials; }
  bool composition_holds() const { return composition_pass == trials; }
};

/// Seeded random check of (x (+) y)^g = x^g (+) y^g and
/// x^{combine(g,h)} = (x^g)^h. Entries are drawn from [lo, hi] with an
/// occasional epsilon in x and y; group elements are permuted diagonals when
/// the action needs invertibility.
AxiomReport action_axiom_report(const Action& a, std::size_t trials, std::size_t k,
                                std::int64_t lo, std::int64_t hi, std::uint64_t seed);

}  // namespace tropkex
