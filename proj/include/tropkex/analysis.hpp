#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tropkex/protocol.hpp"

namespace tropkex {

struct EntryStats {
  std::size_t finite = 0;
  std::size_t epsilon = 0;
  BigInt min = 0;
  BigInt max = 0;
  double mean = 0.0;
  std::size_t distinct = 0;
};

/// Statistics over the finite entries.
EntryStats entry_stats(const TropMatrix& x);

struct PowerRow {
  std::size_t power;
  EntryStats stats;
  /// Entry-wise A_j - A_{j-1}; absent for j = 1.
  std::optional<EntryStats> delta;
};

/// First components of (M, H)^j, j = 1..max_power, left to right.
std::vector<PowerRow> power_pattern_table(const ParamSet& p, std::size_t max_power);

void print_power_table(std::ostream& os, const std::vector<PowerRow>& rows);

/// Bits needed for an entry: magnitude bits plus one sign bit; 1 for zero.
std::size_t entry_bits(const ExtVal& v);
std::size_t matrix_entry_bits(const TropMatrix& x);

struct BenchReport {
  ParamSpec spec;
  std::uint64_t seed = 0;
  BigInt alice_exponent;
  BigInt bob_exponent;
  double public_seconds = 0.0;  // both compute_public calls
  double derive_seconds = 0.0;  // both derivations
  bool keys_equal = false;
  std::size_t pub_payload_bytes = 0;  // both PUB payloads, canonical text
  std::size_t pub_entry_bits = 0;     // both public matrices, sum of entry_bits
  std::size_t max_entry_bits = 0;
  /// |A| <= c (m + 1), |B| <= c (n + 1), |K| <= c (m + n + 1), c = max(|lo|, |hi|).
  bool bounds_hold = false;
  BigInt bound_public;  // c * (max(m, n) + 1)
};

BenchReport run_bench(const ParamSpec& spec, std::uint64_t seed, std::uint64_t alice_seed,
                      std::uint64_t bob_seed, Variant variant);

void print_bench(std::ostream& os, const BenchReport& r);

/// Size figure quoted for the recommended parameters.
inline constexpr std::size_t kClaimedMessageBits = 20000;

struct AgreementTrial {
  std::size_t index;
  std::uint64_t seed;
  BigInt m;
  BigInt n;
  AgreementReport report;
};

struct AgreementStats {
  Variant variant;
  std::size_t trials = 0;
  std::size_t equal_exp_trials = 0;
  std::size_t equal_exp_agree = 0;
  std::size_t distinct_exp_trials = 0;
  std::size_t distinct_exp_agree = 0;
  std::size_t alice_matches_reference = 0;
  std::size_t bob_matches_reference = 0;
  std::optional<AgreementTrial> first_disagreement;

  double distinct_rate() const {
    return distinct_exp_trials ? static_cast<double>(distinct_exp_agree) / distinct_exp_trials
                               : 0.0;
  }
};

/// Trial t draws M, H from seed + t. Even trials use m == n, odd trials
/// m != n, with exponents uniform in [1, max_exp].
AgreementStats run_agreement_harness(const ParamSpec& spec, std::size_t trials,
                                     std::uint64_t seed, Variant variant,
                                     std::uint64_t max_exp);

void print_agreement(std::ostream& os, const AgreementStats& s);
void print_diff(std::ostream& os, const std::vector<EntryDiff>& diffs, std::size_t limit = 8);

}  // namespace tropkex
