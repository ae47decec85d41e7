#include "tropkex/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <set>

#include "tropkex/codec.hpp"
#include "tropkex/prng.hpp"

namespace tropkex {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool within(const TropMatrix& x, const BigInt& bound) {
  for (const auto& v : x.entries()) {
    if (v.is_finite() && abs(v.value()) > bound) return false;
  }
  return true;
}

}  // namespace

EntryStats entry_stats(const TropMatrix& x) {
  EntryStats s;
  std::set<BigInt> seen;
  BigInt sum = 0;
  for (const auto& v : x.entries()) {
    if (v.is_infinity()) {
      ++s.epsilon;
      continue;
    }
    const BigInt& e = v.value();
    if (s.finite == 0 || e < s.min) s.min = e;
    if (s.finite == 0 || e > s.max) s.max = e;
    ++s.finite;
    sum += e;
    seen.insert(e);
  }
  s.distinct = seen.size();
  if (s.finite) {
    mpq_class mean(sum, static_cast<unsigned long>(s.finite));
    s.mean = mean.get_d();
  }
  return s;
}

std::vector<PowerRow> power_pattern_table(const ParamSet& p, std::size_t max_power) {
  std::vector<PowerRow> rows;
  const Action action = scheme_action(p.spec.scheme);
  const SemidirectPair base{p.m, p.h};
  SemidirectPair cur = base;
  std::optional<TropMatrix> prev;
  for (std::size_t j = 1; j <= max_power; ++j) {
    if (j > 1) cur = sd_mul(cur, base, action);
    PowerRow row{j, entry_stats(cur.x), std::nullopt};
    if (prev) {
      TropMatrix delta(cur.x.size());
      for (std::size_t t = 0; t < delta.entries().size(); ++t) {
        const ExtVal& a = cur.x.entries()[t];
        const ExtVal& b = prev->entries()[t];
        if (a.is_finite() && b.is_finite()) delta.entries()[t] = ExtVal(BigInt(a.value() - b.value()));
      }
      row.delta = entry_stats(delta);
    }
    prev = cur.x;
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_power_table(std::ostream& os, const std::vector<PowerRow>& rows) {
  os << "power  min  max  mean  distinct  delta_min  delta_max  delta_distinct\n";
  for (const auto& r : rows) {
    os << r.power << "  " << r.stats.min << "  " << r.stats.max << "  " << r.stats.mean << "  "
       << r.stats.distinct;
    if (r.delta) {
      os << "  " << r.delta->min << "  " << r.delta->max << "  " << r.delta->distinct;
    } else {
      os << "  -  -  -";
    }
    os << '\n';
  }
}

std::size_t entry_bits(const ExtVal& v) {
  if (v.is_infinity()) return 0;
  if (sgn(v.value()) == 0) return 1;
  return mpz_sizeinbase(v.value().get_mpz_t(), 2) + 1;
}

std::size_t matrix_entry_bits(const TropMatrix& x) {
  std::size_t bits = 0;
  for (const auto& v : x.entries()) bits += entry_bits(v);
  return bits;
}

BenchReport run_bench(const ParamSpec& spec, std::uint64_t seed, std::uint64_t alice_seed,
                      std::uint64_t bob_seed, Variant variant) {
  const ParamSet p = gen_params(spec, seed);
  const PrivateKey alice = gen_private(spec.exp_bits, alice_seed);
  const PrivateKey bob = gen_private(spec.exp_bits, bob_seed);

  BenchReport r;
  r.spec = spec;
  r.seed = seed;
  r.alice_exponent = alice.exponent();
  r.bob_exponent = bob.exponent();

  auto t0 = std::chrono::steady_clock::now();
  const PublicMessage a = compute_public(p, alice);
  const PublicMessage b = compute_public(p, bob);
  r.public_seconds = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const SharedKey ka = derive_shared(p, alice, b, variant);
  const SharedKey kb = derive_shared(p, bob, a, variant);
  r.derive_seconds = seconds_since(t0);
  r.keys_equal = ka == kb;

  r.pub_payload_bytes = encode_matrix(a.a).size() + encode_matrix(b.a).size();
  r.pub_entry_bits = matrix_entry_bits(a.a) + matrix_entry_bits(b.a);
  for (const TropMatrix* x : {&a.a, &b.a}) {
    for (const auto& v : x->entries()) r.max_entry_bits = std::max(r.max_entry_bits, entry_bits(v));
  }

  const BigInt lo_abs = abs(BigInt(static_cast<long>(spec.lo)));
  const BigInt hi_abs = abs(BigInt(static_cast<long>(spec.hi)));
  const BigInt c = lo_abs > hi_abs ? lo_abs : hi_abs;
  const BigInt& m = alice.exponent();
  const BigInt& n = bob.exponent();
  r.bound_public = c * ((m > n ? m : n) + 1);
  r.bounds_hold = within(a.a, c * (m + 1)) && within(b.a, c * (n + 1)) &&
                  within(ka.k, c * (m + n + 1)) && within(kb.k, c * (m + n + 1));
  return r;
}

void print_bench(std::ostream& os, const BenchReport& r) {
  os << "scheme " << static_cast<int>(r.spec.scheme) << "  k=" << r.spec.k << "  entries ["
     << r.spec.lo << ", " << r.spec.hi << "]  exp_bits=" << r.spec.exp_bits
     << "  seed=" << r.seed << '\n';
  os << "compute_public x2: " << r.public_seconds << " s\n";
  os << "derive_shared x2:  " << r.derive_seconds << " s\n";
  os << "keys equal: " << (r.keys_equal ? "yes" : "no") << '\n';
  os << "PUB payload total: " << r.pub_payload_bytes << " bytes = " << r.pub_payload_bytes * 8
     << " bits (canonical text)\n";
  os << "PUB entry bits total: " << r.pub_entry_bits << " bits (binary, sign + magnitude)\n";
  os << "per message: " << r.pub_payload_bytes * 4 << " text bits, " << r.pub_entry_bits / 2
     << " entry bits; quoted figure: almost " << kClaimedMessageBits << " bits\n";
  os << "largest entry: " << r.max_entry_bits << " bits (sign + magnitude)\n";
  os << "analytic bound |entry| <= c*(exponent+1) = " << r.bound_public << " ("
     << mpz_sizeinbase(r.bound_public.get_mpz_t(), 2) + 1 << " bits with sign): "
     << (r.bounds_hold ? "holds" : "VIOLATED") << '\n';
}

AgreementStats run_agreement_harness(const ParamSpec& spec, std::size_t trials,
                                     std::uint64_t seed, Variant variant,
                                     std::uint64_t max_exp) {
  AgreementStats s;
  s.variant = variant;
  s.trials = trials;
  SplitMix64 rng(seed ^ 0x5eedULL);
  const auto hi = static_cast<std::int64_t>(std::max<std::uint64_t>(max_exp, 2));
  for (std::size_t t = 0; t < trials; ++t) {
    const ParamSet p = gen_params(spec, seed + t);
    const std::int64_t m = rng.uniform(1, hi);
    std::int64_t n = m;
    if (t % 2 == 1) {
      while (n == m) n = rng.uniform(1, hi);
    }
    AgreementReport rep = agreement_check(p, BigInt(static_cast<long>(m)),
                                          BigInt(static_cast<long>(n)), variant,
                                          static_cast<std::uint64_t>(2 * hi));
    if (m == n) {
      ++s.equal_exp_trials;
      if (rep.equal) ++s.equal_exp_agree;
    } else {
      ++s.distinct_exp_trials;
      if (rep.equal) ++s.distinct_exp_agree;
    }
    if (rep.alice_matches_reference()) ++s.alice_matches_reference;
    if (rep.bob_matches_reference()) ++s.bob_matches_reference;
    if (!rep.equal && !s.first_disagreement) {
      s.first_disagreement = AgreementTrial{t, seed + t, BigInt(static_cast<long>(m)),
                                            BigInt(static_cast<long>(n)), std::move(rep)};
    }
  }
  return s;
}

void print_diff(std::ostream& os, const std::vector<EntryDiff>& diffs, std::size_t limit) {
  os << diffs.size() << " differing entries\n";
  for (std::size_t i = 0; i < diffs.size() && i < limit; ++i) {
    const auto& d = diffs[i];
    os << "  (" << d.row << "," << d.col << "): alice " << d.alice << "  bob " << d.bob << '\n';
  }
}

void print_agreement(std::ostream& os, const AgreementStats& s) {
  os << "variant " << to_string(s.variant) << ": " << s.trials << " trials\n";
  os << "  m == n: " << s.equal_exp_agree << "/" << s.equal_exp_trials << " agree\n";
  os << "  m != n: " << s.distinct_exp_agree << "/" << s.distinct_exp_trials << " agree (rate "
     << s.distinct_rate() << ")\n";
  os << "  alice key = first component of (M,H)^(m+n): " << s.alice_matches_reference << "/"
     << s.trials << '\n';
  os << "  bob key   = first component of (M,H)^(m+n): " << s.bob_matches_reference << "/"
     << s.trials << '\n';
  if (s.first_disagreement) {
    const auto& d = *s.first_disagreement;
    os << "  first disagreement: trial " << d.index << " seed " << d.seed << " m=" << d.m
       << " n=" << d.n << ", ";
    print_diff(os, d.report.diffs);
  }
}

}  // namespace tropkex
