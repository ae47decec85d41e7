#pragma once

/**
 * Two-party key exchange over semidirect products of tropical matrices.
 *
 * Both parties share public M, H. A party with private exponent m computes
 * (M, H)^m = (A, H^m), publishes A only, and combines the peer's matrix B
 * with its own (A, H^m):
 *
 *   scheme 1 (adjoint)   K = (B o H^m) (+) A
 *   scheme 2 (sandwich)  literal:  K = (B (x) H^m) (+) A
 *                        action:   K = B^{H^m} (+) A
 *
 * Scheme 1 keys always agree and equal the first component of (M, H)^{m+n}.
 * Scheme 2 agreement for m != n is not guaranteed; agreement_check measures it.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropkex/matrix.hpp"
#include "tropkex/semidirect.hpp"

namespace tropkex {

enum class Scheme { adjoint = 1, sandwich = 2 };
enum class Variant { literal, action };

/// Throws InputError for anything other than 1 or 2.
Scheme scheme_from_int(int s);
std::string to_string(Variant v);
/// Accepts "literal" or "action".
Variant variant_from_string(const std::string& s);

/// Public parameters before the matrices are drawn.
struct ParamSpec {
  Scheme scheme = Scheme::adjoint;
  std::size_t k = 30;
  std::int64_t lo = -1000;
  std::int64_t hi = 1000;
  unsigned exp_bits = 200;

  /// Throws InputError when an invariant fails.
  void validate() const;
};

struct ParamSet {
  ParamSpec spec;
  std::uint64_t seed = 0;
  TropMatrix m;
  TropMatrix h;
};

/// k = 30, entries in [-1000, 1000], 200-bit exponents, for either scheme.
ParamSpec param_default(int scheme);

/// M then H, each row-major, uniform in [lo, hi] from SplitMix64(seed).
ParamSet gen_params(const ParamSpec& spec, std::uint64_t seed);

/// Explicit matrices; checks shape and that entries lie in [lo, hi].
ParamSet make_params(const ParamSpec& spec, TropMatrix m, TropMatrix h);

class PrivateKey {
 public:
  /// Throws InputError for exponents below 1.
  explicit PrivateKey(BigInt exponent);

  const BigInt& exponent() const noexcept { return exponent_; }

 private:
  BigInt exponent_;
};

/// Uniform in [2^(bits-1), 2^bits - 1]. The low 64-bit words come from the
/// generator first.
PrivateKey gen_private(unsigned exp_bits, std::uint64_t seed);

struct PublicMessage {
  TropMatrix a;
};

struct SharedKey {
  TropMatrix k;

  friend bool operator==(const SharedKey&, const SharedKey&) = default;
};

/// The scheme's action on pairs.
Action scheme_action(Scheme s);

/// (M, H)^m for the scheme: adjoint uses square-and-multiply, sandwich the
/// Phi-series doubling. Both agree with left-to-right powers.
SemidirectPair public_power(const ParamSet& p, const PrivateKey& sk);

PublicMessage compute_public(const ParamSet& p, const PrivateKey& sk);

SharedKey derive_shared_p1(const ParamSet& p, const PrivateKey& sk, const PublicMessage& peer);
SharedKey derive_shared_p2_literal(const ParamSet& p, const PrivateKey& sk,
                                   const PublicMessage& peer);
SharedKey derive_shared_p2_action(const ParamSet& p, const PrivateKey& sk,
                                  const PublicMessage& peer);

/// Dispatches on the scheme; `variant` only matters for scheme 2.
SharedKey derive_shared(const ParamSet& p, const PrivateKey& sk, const PublicMessage& peer,
                        Variant variant);

struct EntryDiff {
  std::size_t row;
  std::size_t col;
  ExtVal alice;
  ExtVal bob;
};

struct AgreementReport {
  bool equal = false;
  TropMatrix alice;
  TropMatrix bob;
  /// First component of the left-to-right (M, H)^{m+n}, when m+n is within
  /// the oracle bound.
  std::optional<TropMatrix> reference;
  std::vector<EntryDiff> diffs;

  bool alice_matches_reference() const { return reference && *reference == alice; }
  bool bob_matches_reference() const { return reference && *reference == bob; }
};

std::vector<EntryDiff> entry_diff(const TropMatrix& a, const TropMatrix& b);

AgreementReport agreement_check(const ParamSet& p, const BigInt& m, const BigInt& n,
                                Variant variant, std::uint64_t oracle_bound = 64);

}  // namespace tropkex
