#include "tropkex/replay.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "tropkex/matrix.hpp"
#include "tropkex/polynomial.hpp"
#include "tropkex/sampling.hpp"
#include "tropkex/semidirect.hpp"

namespace tropkex {

namespace {

using Expansion = std::function<TropMatrix(const TropMatrix& m, const TropMatrix& h)>;

TropMatrix sum_of(std::initializer_list<TropMatrix> terms) {
  auto it = terms.begin();
  TropMatrix acc = *it;
  for (++it; it != terms.end(); ++it) acc = add(acc, *it);
  return acc;
}

TropMatrix prod(std::initializer_list<TropMatrix> factors) {
  auto it = factors.begin();
  TropMatrix acc = *it;
  for (++it; it != factors.end(); ++it) acc = mul(acc, *it);
  return acc;
}

ReplayCheck exact(std::string name, const TropMatrix& got, const TropMatrix& want) {
  std::ostringstream os;
  if (got != want) os << "got " << got << ", expected " << want;
  return {std::move(name), got == want, os.str()};
}

// Compares the left-to-right power against a closed-form expansion on random
// instances; reports the first counterexample.
ReplayCheck expansion(std::string name, const Action& action, long power,
                      const Expansion& formula, std::uint64_t seed, std::size_t instances) {
  SplitMix64 rng(seed);
  for (std::size_t t = 0; t < 2 * instances; ++t) {
    const std::size_t k = t % 2 == 0 ? 2 : 3;
    const TropMatrix m = random_matrix(rng, k, -10, 10);
    const TropMatrix h = random_matrix(rng, k, -10, 10);
    const TropMatrix got = sd_power_ltr({m, h}, BigInt(power), action).x;
    const TropMatrix want = formula(m, h);
    if (got != want) {
      std::ostringstream os;
      os << "M=" << m << " H=" << h << ": power gives " << got << ", expansion gives " << want;
      return {std::move(name), false, os.str()};
    }
  }
  return {std::move(name), true, std::to_string(2 * instances) + " instances"};
}

}  // namespace

std::vector<ReplayCheck> replay_worked_examples(std::uint64_t seed, std::size_t instances) {
  std::vector<ReplayCheck> out;
  const ExtVal eps = ExtVal::infinity();

  out.push_back({"scalar: eps (+) 7 = 7, 5 (+) 5 = 5, 9 (x) 0 = 9, eps (x) 4 = eps",
                 add(eps, ExtVal(7)) == ExtVal(7) && add(ExtVal(5), ExtVal(5)) == ExtVal(5) &&
                     mul(ExtVal(9), ExtVal(0)) == ExtVal(9) && mul(eps, ExtVal(4)) == eps,
                 ""});

  const TropMatrix x{{1, 2}, {5, -1}};
  const TropMatrix y{{0, 3}, {2, 8}};
  out.push_back(exact("matrix sum", add(x, y), TropMatrix{{0, 2}, {2, -1}}));
  out.push_back(exact("matrix product", mul(x, y), TropMatrix{{1, 4}, {1, 7}}));
  out.push_back(exact("scalar multiple 2 (x) X", scalar_mul(ExtVal(2), x),
                      TropMatrix{{3, 4}, {7, 1}}));
  out.push_back(exact("scalar matrix product diag(2,2) (x) X",
                      mul(scalar_matrix(2, ExtVal(2)), x), TropMatrix{{3, 4}, {7, 1}}));

  {
    SplitMix64 rng(seed ^ 0xd1a6ULL);
    bool inv_ok = true;
    bool conj_ok = true;
    std::string detail;
    for (std::size_t t = 0; t < instances; ++t) {
      const long a = rng.uniform(-1000, 1000);
      const long b = rng.uniform(-1000, 1000);
      const TropMatrix d{{a, eps}, {eps, b}};
      if (inverse(d) != TropMatrix{{-a, eps}, {eps, -b}}) inv_ok = false;
      const long xx = rng.uniform(-1000, 1000), yy = rng.uniform(-1000, 1000);
      const long zz = rng.uniform(-1000, 1000), tt = rng.uniform(-1000, 1000);
      const TropMatrix got = conjugate(d, TropMatrix{{xx, yy}, {zz, tt}});
      const TropMatrix want{{xx, yy + (b - a)}, {zz + (a - b), tt}};
      if (got != want && conj_ok) {
        conj_ok = false;
        std::ostringstream os;
        os << "a=" << a << " b=" << b << ": " << got << " vs " << want;
        detail = os.str();
      }
    }
    out.push_back({"diagonal inverse diag(a,b)^-1 = diag(-a,-b)", inv_ok, ""});
    out.push_back({"conjugation diag(a,b)^-1 X diag(a,b)", conj_ok, detail});
  }

  {
    auto mono = [](long c, std::vector<std::uint32_t> e) { return TropMonomial{ExtVal(c), e}; };
    const TropPolynomial p =
        canonicalize({mono(0, {2, 0, 0}), mono(17, {0, 0, 0}), mono(2, {0, 0, 1}),
                      mono(5, {1, 1, 1})});
    const TropPolynomial q = canonicalize({mono(0, {2, 1, 2})});
    const bool order = p.monomials().size() == 4 && p.monomials()[0].exponents == std::vector<std::uint32_t>{1, 1, 1} &&
                       p.monomials()[1].exponents == std::vector<std::uint32_t>{2, 0, 0} &&
                       p.monomials()[2].exponents == std::vector<std::uint32_t>{0, 0, 1} &&
                       p.monomials()[3].exponents == std::vector<std::uint32_t>{0, 0, 0};
    out.push_back({"polynomial deglex order and degree 3; monomial degree 5",
                   order && degree(p) == 3 && degree(q) == 5, ""});
  }

  const Action adj = Action::adjoint();
  const Action sw = Action::sandwich();

  out.push_back(expansion(
      "scheme 1 (M,H)^2 = M (+) H (+) MH", adj, 2,
      [](const TropMatrix& m, const TropMatrix& h) { return sum_of({m, h, mul(m, h)}); }, seed,
      instances));
  out.push_back(expansion(
      "scheme 1 (M,H)^3 = M (+) H (+) M^2 (+) MH (+) HM (+) MHM (reference expansion)", adj, 3,
      [](const TropMatrix& m, const TropMatrix& h) {
        return sum_of({m, h, mul(m, m), mul(m, h), mul(h, m), prod({m, h, m})});
      },
      seed, instances));
  out.push_back(expansion(
      "scheme 1 (M,H)^3 = M (+) H (+) MH (+) H^2 (+) MH^2 (expansion of the pair product)", adj,
      3,
      [](const TropMatrix& m, const TropMatrix& h) {
        return sum_of({m, h, mul(m, h), mul(h, h), prod({m, h, h})});
      },
      seed, instances));
  out.push_back(expansion(
      "scheme 2 (M,H)^2 = HM^T (+) M^TH (+) M", sw, 2,
      [](const TropMatrix& m, const TropMatrix& h) {
        const TropMatrix mt = transpose(m);
        return sum_of({mul(h, mt), mul(mt, h), m});
      },
      seed, instances));
  out.push_back(expansion(
      "scheme 2 (M,H)^3 seven-term expansion", sw, 3,
      [](const TropMatrix& m, const TropMatrix& h) {
        const TropMatrix mt = transpose(m);
        const TropMatrix ht = transpose(h);
        return sum_of({prod({h, m, ht}), prod({h, ht, m}), mul(h, mt), prod({m, ht, h}),
                       prod({ht, m, h}), mul(mt, h), m});
      },
      seed, instances));
  return out;
}

void print_replay(std::ostream& os, const std::vector<ReplayCheck>& checks) {
  for (const auto& c : checks) {
    os << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << '\n';
  }
}

}  // namespace tropkex
