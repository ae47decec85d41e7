#include "tropkex/protocol.hpp"

#include "tropkex/errors.hpp"
#include "tropkex/prng.hpp"
#include "tropkex/sampling.hpp"

namespace tropkex {

Scheme scheme_from_int(int s) {
  if (s == 1) return Scheme::adjoint;
  if (s == 2) return Scheme::sandwich;
  throw InputError("unknown scheme " + std::to_string(s) + " (expected 1 or 2)");
}

std::string to_string(Variant v) { return v == Variant::literal ? "literal" : "action"; }

Variant variant_from_string(const std::string& s) {
  if (s == "literal") return Variant::literal;
  if (s == "action") return Variant::action;
  throw InputError("unknown variant '" + s + "' (expected literal or action)");
}

void ParamSpec::validate() const {
  if (k == 0) throw InputError("k must be at least 1");
  if (lo > hi) throw InputError("entry range is empty: lo > hi");
  if (static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) >=
      (std::uint64_t{1} << 63)) {
    throw InputError("entry range exceeds 2^63 values");
  }
  if (exp_bits == 0) throw InputError("exp_bits must be at least 1");
}

ParamSpec param_default(int scheme) {
  ParamSpec spec;
  spec.scheme = scheme_from_int(scheme);
  return spec;
}

ParamSet gen_params(const ParamSpec& spec, std::uint64_t seed) {
  spec.validate();
  SplitMix64 rng(seed);
  TropMatrix m = random_matrix(rng, spec.k, spec.lo, spec.hi);
  TropMatrix h = random_matrix(rng, spec.k, spec.lo, spec.hi);
  return {spec, seed, std::move(m), std::move(h)};
}

ParamSet make_params(const ParamSpec& spec, TropMatrix m, TropMatrix h) {
  spec.validate();
  const ExtVal lo(static_cast<long>(spec.lo));
  const ExtVal hi(static_cast<long>(spec.hi));
  for (const TropMatrix* x : {&m, &h}) {
    if (x->size() != spec.k) throw InputError("public matrix is not k x k");
    for (const auto& v : x->entries()) {
      if (v.is_infinity() || v < lo || v > hi) {
        throw InputError("public matrix entry " + v.to_string() + " outside [lo, hi]");
      }
    }
  }
  return {spec, 0, std::move(m), std::move(h)};
}

PrivateKey::PrivateKey(BigInt exponent) : exponent_(std::move(exponent)) {
  if (exponent_ < 1) throw InputError("private exponent must be at least 1");
}

PrivateKey gen_private(unsigned exp_bits, std::uint64_t seed) {
  if (exp_bits == 0) throw InputError("exp_bits must be at least 1");
  SplitMix64 rng(seed);
  const unsigned free_bits = exp_bits - 1;
  BigInt value = 0;
  for (unsigned word = 0; word * 64 < free_bits; ++word) {
    const std::uint64_t r = rng.next();
    BigInt part;
    mpz_import(part.get_mpz_t(), 1, 1, sizeof(r), 0, 0, &r);
    value += part << (64 * word);
  }
  BigInt mask = (BigInt(1) << free_bits) - 1;
  value &= mask;
  value |= BigInt(1) << free_bits;
  return PrivateKey(std::move(value));
}

Action scheme_action(Scheme s) {
  return s == Scheme::adjoint ? Action::adjoint() : Action::sandwich();
}

SemidirectPair public_power(const ParamSet& p, const PrivateKey& sk) {
  if (p.spec.scheme == Scheme::adjoint) {
    return sd_power_fast({p.m, p.h}, sk.exponent(), Action::adjoint());
  }
  return sandwich_power_fast(p.m, p.h, sk.exponent());
}

PublicMessage compute_public(const ParamSet& p, const PrivateKey& sk) {
  return {public_power(p, sk).x};
}

namespace {

void require_scheme(const ParamSet& p, Scheme s) {
  if (p.spec.scheme != s) throw InputError("derivation does not match the parameter scheme");
}

void require_peer_shape(const ParamSet& p, const PublicMessage& peer) {
  if (peer.a.size() != p.spec.k) throw InputError("peer matrix is not k x k");
}

}  // namespace

SharedKey derive_shared_p1(const ParamSet& p, const PrivateKey& sk, const PublicMessage& peer) {
  require_scheme(p, Scheme::adjoint);
  require_peer_shape(p, peer);
  const SemidirectPair own = public_power(p, sk);  // (A, H^{o m})
  return {add(adjoint(peer.a, own.g), own.x)};
}

SharedKey derive_shared_p2_literal(const ParamSet& p, const PrivateKey& sk,
                                   const PublicMessage& peer) {
  require_scheme(p, Scheme::sandwich);
  require_peer_shape(p, peer);
  const SemidirectPair own = public_power(p, sk);  // (A, H^{(x) m})
  return {add(mul(peer.a, own.g), own.x)};
}

SharedKey derive_shared_p2_action(const ParamSet& p, const PrivateKey& sk,
                                  const PublicMessage& peer) {
  require_scheme(p, Scheme::sandwich);
  require_peer_shape(p, peer);
  const SemidirectPair own = public_power(p, sk);
  return {add(sandwich_action(peer.a, own.g), own.x)};
}

SharedKey derive_shared(const ParamSet& p, const PrivateKey& sk, const PublicMessage& peer,
                        Variant variant) {
  if (p.spec.scheme == Scheme::adjoint) return derive_shared_p1(p, sk, peer);
  return variant == Variant::literal ? derive_shared_p2_literal(p, sk, peer)
                                     : derive_shared_p2_action(p, sk, peer);
}

std::vector<EntryDiff> entry_diff(const TropMatrix& a, const TropMatrix& b) {
  if (a.size() != b.size()) throw InputError("matrix size mismatch");
  std::vector<EntryDiff> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a(i, j) != b(i, j)) out.push_back({i, j, a(i, j), b(i, j)});
    }
  }
  return out;
}

AgreementReport agreement_check(const ParamSet& p, const BigInt& m, const BigInt& n,
                                Variant variant, std::uint64_t oracle_bound) {
  const PrivateKey alice_sk(m);
  const PrivateKey bob_sk(n);
  const PublicMessage a = compute_public(p, alice_sk);
  const PublicMessage b = compute_public(p, bob_sk);
  AgreementReport report{
      .equal = false,
      .alice = derive_shared(p, alice_sk, b, variant).k,
      .bob = derive_shared(p, bob_sk, a, variant).k,
      .reference = std::nullopt,
      .diffs = {},
  };
  report.diffs = entry_diff(report.alice, report.bob);
  report.equal = report.diffs.empty();
  const BigInt total = m + n;
  if (total <= BigInt(static_cast<unsigned long>(oracle_bound))) {
    report.reference =
        sd_power_ltr({p.m, p.h}, total, scheme_action(p.spec.scheme)).x;
  }
  return report;
}

}  // namespace tropkex
