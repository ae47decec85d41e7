#include "doctest.h"
#include "oracle.hpp"
#include "tropkex/errors.hpp"
#include "tropkex/sampling.hpp"
#include "tropkex/semidirect.hpp"

using namespace tropkex;

namespace {

const ExtVal eps = ExtVal::infinity();
const TropMatrix M{{1, 2}, {5, -1}};
const TropMatrix H{{0, 3}, {2, 8}};

TropMatrix sum_of(std::initializer_list<TropMatrix> terms) {
  auto it = terms.begin();
  TropMatrix acc = *it;
  for (++it; it != terms.end(); ++it) acc = add(acc, *it);
  return acc;
}

}  // namespace

TEST_CASE("adjoint action") {
  CHECK(adjoint_action(M, TropMatrix(2)) == M);
  SplitMix64 rng(1);
  for (int t = 0; t < 100; ++t) {
    const TropMatrix x = random_matrix_with_eps(rng, 3, -9, 9, 7);
    const TropMatrix y = random_matrix_with_eps(rng, 3, -9, 9, 7);
    const TropMatrix g = random_matrix_with_eps(rng, 3, -9, 9, 7);
    const TropMatrix h = random_matrix_with_eps(rng, 3, -9, 9, 7);
    CHECK(adjoint_action(add(x, y), h) == add(adjoint_action(x, h), adjoint_action(y, h)));
    CHECK(adjoint_action(x, adjoint(g, h)) == adjoint_action(adjoint_action(x, g), h));
  }
}

TEST_CASE("sandwich action") {
  CHECK(sandwich_action(M, TropMatrix(2)) == TropMatrix(2));
  // H M^T = [[1,2],[3,7]], M^T H = [[1,4],[1,5]].
  CHECK(sandwich_action(M, H) == TropMatrix{{1, 2}, {1, 5}});
  CHECK_THROWS_AS(sandwich_action(M, TropMatrix(3)), InputError);
  SplitMix64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const TropMatrix x = random_matrix_with_eps(rng, 3, -9, 9, 7);
    const TropMatrix y = random_matrix_with_eps(rng, 3, -9, 9, 7);
    const TropMatrix h = random_matrix_with_eps(rng, 3, -9, 9, 7);
    CHECK(sandwich_action(add(x, y), h) == add(sandwich_action(x, h), sandwich_action(y, h)));
    CHECK(oracle::from(sandwich_action(x, h)) ==
          oracle::sandwich(oracle::from(x), oracle::from(h)));
  }
}

TEST_CASE("the sandwich action does not compose") {
  // 1x1: x^h = 2h + x, so x^{gh} = x + 2g + 2h but (x^g)^h = x + 2g + 2h as
  // well; the failure needs k >= 2.
  const TropMatrix x{{0, 9}, {9, 9}};
  const TropMatrix g{{9, 0}, {9, 9}};
  const TropMatrix h{{9, 9}, {0, 9}};
  CHECK(sandwich_action(x, mul(g, h)) != sandwich_action(sandwich_action(x, g), h));
}

TEST_CASE("conjugation action") {
  CHECK(conj_action(M, identity(2)) == M);
  CHECK(conj_action(TropMatrix{{1, 2}, {3, 4}}, TropMatrix{{10, eps}, {eps, 4}}) ==
        TropMatrix{{1, -4}, {9, 4}});
  CHECK_THROWS_AS(conj_action(M, H), NotInvertibleError);
  SplitMix64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const TropMatrix x = random_matrix_with_eps(rng, 4, -50, 50, 5);
    const TropMatrix g = to_matrix(random_perm_diag(rng, 4, -50, 50));
    const TropMatrix h = to_matrix(random_perm_diag(rng, 4, -50, 50));
    CHECK(conj_action(x, mul(g, h)) == conj_action(conj_action(x, g), h));
  }
}

TEST_CASE("pair product") {
  const SemidirectPair p{M, H};
  const SemidirectPair sq = sd_mul(p, p, Action::adjoint());
  CHECK(sq.x == sum_of({M, H, mul(M, H)}));
  CHECK(sq.g == adjoint(H, H));

  const SemidirectPair sw = sd_mul(p, p, Action::sandwich());
  CHECK(sw.x == sum_of({mul(H, transpose(M)), mul(transpose(M), H), M}));
  CHECK(sw.g == mul(H, H));

  const SemidirectPair z{TropMatrix(2), H};
  // eps o H = H, so a zero first component does not stay zero.
  CHECK(sd_mul(z, z, Action::adjoint()).x == H);

  // Multiplicative mode multiplies on the T side.
  const TropMatrix d{{3, eps}, {eps, -2}};
  const SemidirectPair c = sd_mul({M, d}, {H, d}, Action::conjugation());
  CHECK(c.x == mul(conjugate(d, M), H));
  CHECK(c.g == mul(d, d));

  CHECK_THROWS_AS(sd_mul(p, {TropMatrix(3), TropMatrix(3)}, Action::adjoint()), InputError);
}

TEST_CASE("adjoint semidirect product is associative") {
  SplitMix64 rng(4);
  const Action a = Action::adjoint();
  for (int t = 0; t < 300; ++t) {
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 4));
    auto pair = [&] {
      return SemidirectPair{random_matrix_with_eps(rng, k, -10, 10, 8),
                            random_matrix_with_eps(rng, k, -10, 10, 8)};
    };
    const auto p = pair(), q = pair(), r = pair();
    CHECK(sd_mul(sd_mul(p, q, a), r, a) == sd_mul(p, sd_mul(q, r, a), a));
  }
}

TEST_CASE("left-to-right cubes") {
  const SemidirectPair p{M, H};
  CHECK(sd_power_ltr(p, 1, Action::adjoint()) == p);

  const SemidirectPair cube = sd_power_ltr(p, 3, Action::adjoint());
  CHECK(cube.x == sum_of({M, H, mul(M, H), mul(H, H), mul(mul(M, H), H)}));
  CHECK(cube.g == adjoint_power(H, 3));

  const TropMatrix mt = transpose(M), ht = transpose(H);
  const SemidirectPair scube = sd_power_ltr(p, 3, Action::sandwich());
  CHECK(scube.x == sum_of({mul(mul(H, M), ht), mul(mul(H, ht), M), mul(H, mt), mul(mul(M, ht), H),
                           mul(mul(ht, M), H), mul(mt, H), M}));
  CHECK(scube.g == mul_power(H, 3));
}

TEST_CASE("the six-term adjoint cube M+H+M^2+MH+HM+MHM is not the pair-product cube") {
  // 1x1, M = 0, H = -1: the pair product gives min(0,-1,-1,-2,-2) = -2 and
  // the six-term form min(0,-1,0,-1,-1,-1) = -1.
  const TropMatrix m{{0}}, h{{-1}};
  const TropMatrix cube = sd_power_ltr({m, h}, 3, Action::adjoint()).x;
  CHECK(cube == TropMatrix{{-2}});
  const TropMatrix six = sum_of({m, h, mul(m, m), mul(m, h), mul(h, m), mul(mul(m, h), m)});
  CHECK(six == TropMatrix{{-1}});
}

TEST_CASE("fast adjoint powers match left-to-right") {
  SplitMix64 rng(5);
  const Action a = Action::adjoint();
  for (int n = 1; n <= 64; ++n) {
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 4));
    const SemidirectPair p{random_matrix(rng, k, -10, 10), random_matrix(rng, k, -10, 10)};
    const SemidirectPair fast = sd_power_fast(p, n, a);
    CHECK(fast == sd_power_ltr(p, n, a));
    const auto ref = oracle::pair_power(oracle::from(p.x), oracle::from(p.g), n,
                                        oracle::adjoint, oracle::adjoint);
    CHECK(oracle::from(fast.x) == ref.first);
  }
  CHECK_THROWS_AS(sd_power_fast({M, H}, 0, a), InputError);
  CHECK_THROWS_AS(sd_power_ltr({M, H}, 0, a), InputError);
}

TEST_CASE("phi operator") {
  const TropMatrix h1{{7}};
  CHECK(phi_operator(h1) == TropMatrix{{7}});
  CHECK(mat_vec(phi_operator(h1), vec(TropMatrix{{-3}})) == std::vector<ExtVal>{4});
  // 1x1 sandwich: min(h + m, m + h).
  CHECK(sandwich_action(TropMatrix{{-3}}, h1) == TropMatrix{{4}});

  CHECK(phi_operator(TropMatrix(3)) == TropMatrix(9));

  SplitMix64 rng(6);
  const TropMatrix h = random_matrix(rng, 2, -10, 10);
  const TropMatrix phi = phi_operator(h);
  for (int t = 0; t < 100; ++t) {
    const TropMatrix m = random_matrix_with_eps(rng, 2, -10, 10, 6);
    CHECK(unvec(mat_vec(phi, vec(m)), 2) == sandwich_action(m, h));
  }
}

TEST_CASE("phi operator is min-plus linear") {
  SplitMix64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 4));
    const TropMatrix phi = phi_operator(random_matrix_with_eps(rng, k, -10, 10, 6));
    const TropMatrix x = random_matrix_with_eps(rng, k, -10, 10, 6);
    const TropMatrix y = random_matrix_with_eps(rng, k, -10, 10, 6);
    CHECK(mat_vec(phi, vec(add(x, y))) ==
          vec(add(unvec(mat_vec(phi, vec(x)), k), unvec(mat_vec(phi, vec(y)), k))));
    CHECK(unvec(vec(x), k) == x);
  }
}

TEST_CASE("sandwich powers unroll to a geometric series") {
  SplitMix64 rng(8);
  for (int n = 1; n <= 16; ++n) {
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 3));
    const TropMatrix m = random_matrix(rng, k, -10, 10);
    const TropMatrix h = random_matrix(rng, k, -10, 10);
    TropMatrix term = m, series = m;
    for (int j = 1; j < n; ++j) {
      term = sandwich_action(term, h);
      series = add(series, term);
    }
    CHECK(sd_power_ltr({m, h}, n, Action::sandwich()).x == series);
    CHECK(unvec(mat_vec(phi_series(phi_operator(h), n), vec(m)), k) == series);
  }
}

TEST_CASE("fast sandwich powers match left-to-right") {
  SplitMix64 rng(9);
  CHECK(sandwich_power_fast(M, H, 1) == SemidirectPair{M, H});
  CHECK(sandwich_power_fast(M, H, 2).x ==
        sum_of({mul(H, transpose(M)), mul(transpose(M), H), M}));
  for (int t = 0; t < 100; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 64));
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 4));
    const TropMatrix m = random_matrix(rng, k, -10, 10);
    const TropMatrix h = random_matrix(rng, k, -10, 10);
    const SemidirectPair fast = sandwich_power_fast(m, h, n);
    CHECK(fast == sd_power_ltr({m, h}, n, Action::sandwich()));
    const auto ref = oracle::pair_power(oracle::from(m), oracle::from(h), n, oracle::sandwich,
                                        oracle::mul);
    CHECK(oracle::from(fast.x) == ref.first);
    CHECK(oracle::from(fast.g) == ref.second);
  }
  CHECK_THROWS_AS(sandwich_power_fast(M, H, 0), InputError);
}

TEST_CASE("pair-level square-and-multiply is wrong for the sandwich action") {
  // Squaring brackets (p p)(p p); the product is not associative, so the
  // result drifts from the left-to-right power.
  SplitMix64 rng(10);
  int differ = 0;
  for (int t = 0; t < 50; ++t) {
    const TropMatrix m = random_matrix(rng, 3, -10, 10);
    const TropMatrix h = random_matrix(rng, 3, -10, 10);
    if (sd_power_fast({m, h}, 4, Action::sandwich()) != sd_power_ltr({m, h}, 4, Action::sandwich()))
      ++differ;
  }
  CHECK(differ > 0);
}

TEST_CASE("action axiom reports") {
  const AxiomReport adj = action_axiom_report(Action::adjoint(), 200, 3, -10, 10, 11);
  CHECK(adj.trials == 200);
  CHECK(adj.additivity_holds());
  CHECK(adj.composition_holds());
  CHECK_FALSE(adj.multiplicativity_tested);

  const AxiomReport sw = action_axiom_report(Action::sandwich(), 200, 3, -10, 10, 11);
  CHECK(sw.additivity_holds());
  CHECK(sw.composition_pass < sw.trials);

  const AxiomReport conj = action_axiom_report(Action::conjugation(), 200, 3, -10, 10, 11);
  CHECK(conj.additivity_holds());
  CHECK(conj.composition_holds());
  CHECK(conj.multiplicativity_tested);
  CHECK(conj.multiplicativity_pass == conj.trials);

  const AxiomReport again = action_axiom_report(Action::sandwich(), 200, 3, -10, 10, 11);
  CHECK(again.composition_pass == sw.composition_pass);
}
