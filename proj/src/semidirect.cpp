#include "tropkex/semidirect.hpp"

#include "tropkex/errors.hpp"
#include "tropkex/power.hpp"
#include "tropkex/sampling.hpp"

namespace tropkex {

TropMatrix adjoint_action(const TropMatrix& x, const TropMatrix& g) { return adjoint(x, g); }

TropMatrix sandwich_action(const TropMatrix& m, const TropMatrix& h) {
  if (m.size() != h.size()) throw InputError("matrix size mismatch");
  const TropMatrix mt = transpose(m);
  return add(mul(h, mt), mul(mt, h));
}

TropMatrix conj_action(const TropMatrix& x, const TropMatrix& h) { return conjugate(h, x); }

Action Action::adjoint() {
  return {"adjoint", adjoint_action,
          [](const TropMatrix& g, const TropMatrix& h) { return tropkex::adjoint(g, h); },
          ActionMode::additive, false};
}

Action Action::sandwich() {
  return {"sandwich", sandwich_action,
          [](const TropMatrix& g, const TropMatrix& h) { return mul(g, h); },
          ActionMode::additive, false};
}

Action Action::conjugation() {
  return {"conjugation", conj_action,
          [](const TropMatrix& g, const TropMatrix& h) { return mul(g, h); },
          ActionMode::multiplicative, true};
}

SemidirectPair sd_mul(const SemidirectPair& p, const SemidirectPair& q, const Action& a) {
  if (p.x.size() != q.x.size() || p.x.size() != p.g.size() || q.x.size() != q.g.size()) {
    throw InputError("semidirect pair size mismatch");
  }
  TropMatrix acted = a.apply(p.x, q.g);
  TropMatrix x = a.mode == ActionMode::additive ? add(acted, q.x) : mul(acted, q.x);
  return {std::move(x), a.combine(p.g, q.g)};
}

SemidirectPair sd_power_ltr(const SemidirectPair& p, const BigInt& n, const Action& a) {
  return power_left_to_right(
      p, n, [&a](const SemidirectPair& l, const SemidirectPair& r) { return sd_mul(l, r, a); });
}

SemidirectPair sd_power_fast(const SemidirectPair& p, const BigInt& n, const Action& a) {
  return power(p, n,
               [&a](const SemidirectPair& l, const SemidirectPair& r) { return sd_mul(l, r, a); });
}

std::vector<ExtVal> vec(const TropMatrix& m) {
  auto e = m.entries();
  return {e.begin(), e.end()};
}

TropMatrix unvec(std::span<const ExtVal> v, std::size_t k) {
  if (v.size() != k * k) throw InputError("vector length is not k^2");
  TropMatrix out(k);
  std::copy(v.begin(), v.end(), out.entries().begin());
  return out;
}

TropMatrix phi_operator(const TropMatrix& h) {
  const std::size_t k = h.size();
  TropMatrix phi(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t row = i * k + j;
      // (h (x) m^T)(i,j) = min_q h(i,q) + m(j,q)
      for (std::size_t q = 0; q < k; ++q) phi(row, j * k + q).min_assign(h(i, q));
      // (m^T (x) h)(i,j) = min_p m(p,i) + h(p,j)
      for (std::size_t p = 0; p < k; ++p) phi(row, p * k + i).min_assign(h(p, j));
    }
  }
  return phi;
}

TropMatrix phi_series(const TropMatrix& phi, const BigInt& n) {
  if (sgn(n) <= 0) throw InputError("exponent must be a positive integer");
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  const TropMatrix id = identity(phi.size());
  TropMatrix series = id;  // T_1
  TropMatrix pw = phi;     // Phi^1
  for (std::size_t i = bits - 1; i-- > 0;) {
    series = add(series, mul(pw, series));  // T_2n = T_n (+) Phi^n T_n
    pw = mul(pw, pw);
    if (mpz_tstbit(n.get_mpz_t(), i)) {
      series = add(id, mul(phi, series));  // T_n+1 = I (+) Phi T_n
      pw = mul(pw, phi);
    }
  }
  return series;
}

SemidirectPair sandwich_power_fast(const TropMatrix& m, const TropMatrix& h,
                                   const BigInt& n) {
  if (m.size() != h.size()) throw InputError("matrix size mismatch");
  if (sgn(n) <= 0) throw InputError("exponent must be a positive integer");
  // Same doubling as phi_series, carried on T_n vec(m) so only the operator
  // power needs full products.
  const TropMatrix phi = phi_operator(h);
  const std::vector<ExtVal> base = vec(m);
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  std::vector<ExtVal> acc = base;
  TropMatrix pw = phi;
  for (std::size_t i = bits - 1; i-- > 0;) {
    const bool last = i == 0;
    const bool set = mpz_tstbit(n.get_mpz_t(), i);
    std::vector<ExtVal> shifted = mat_vec(pw, acc);
    for (std::size_t t = 0; t < acc.size(); ++t) acc[t].min_assign(shifted[t]);
    if (!last) pw = mul(pw, pw);
    if (set) {
      acc = mat_vec(phi, acc);
      for (std::size_t t = 0; t < acc.size(); ++t) acc[t].min_assign(base[t]);
      if (!last) pw = mul(pw, phi);
    }
  }
  return {unvec(acc, m.size()), mul_power(h, n)};
}

AxiomReport action_axiom_report(const Action& a, std::size_t trials, std::size_t k,
                                std::int64_t lo, std::int64_t hi, std::uint64_t seed) {
  SplitMix64 rng(seed);
  AxiomReport report;
  report.action = a.name;
  report.trials = trials;
  report.multiplicativity_tested = a.mode == ActionMode::multiplicative;
  auto group_element = [&] {
    return a.needs_invertible ? to_matrix(random_perm_diag(rng, k, lo, hi))
                              : random_matrix_with_eps(rng, k, lo, hi, 8);
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const TropMatrix x = random_matrix_with_eps(rng, k, lo, hi, 8);
    const TropMatrix y = random_matrix_with_eps(rng, k, lo, hi, 8);
    const TropMatrix g = group_element();
    const TropMatrix h = group_element();
    const TropMatrix xg = a.apply(x, g);
    const TropMatrix yg = a.apply(y, g);
    if (a.apply(add(x, y), g) == add(xg, yg)) ++report.additivity_pass;
    if (report.multiplicativity_tested && a.apply(mul(x, y), g) == mul(xg, yg)) {
      ++report.multiplicativity_pass;
    }
    if (a.apply(x, a.combine(g, h)) == a.apply(xg, h)) ++report.composition_pass;
  }
  return report;
}

}  // namespace tropkex
