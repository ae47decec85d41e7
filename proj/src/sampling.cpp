#include "tropkex/sampling.hpp"

#include <numeric>
#include <utility>

namespace tropkex {

TropMatrix random_matrix(SplitMix64& rng, std::size_t k, std::int64_t lo,
                         std::int64_t hi) {
  TropMatrix out(k);
  for (auto& v : out.entries()) v = ExtVal(static_cast<long>(rng.uniform(lo, hi)));
  return out;
}

TropMatrix random_matrix_with_eps(SplitMix64& rng, std::size_t k, std::int64_t lo,
                                  std::int64_t hi, std::uint64_t eps_one_in) {
  TropMatrix out(k);
  for (auto& v : out.entries()) {
    if (eps_one_in != 0 && rng.next() % eps_one_in == 0) continue;
    v = ExtVal(static_cast<long>(rng.uniform(lo, hi)));
  }
  return out;
}

PermDiag random_perm_diag(SplitMix64& rng, std::size_t k, std::int64_t lo,
                          std::int64_t hi) {
  PermDiag pd;
  pd.perm.resize(k);
  std::iota(pd.perm.begin(), pd.perm.end(), std::size_t{0});
  for (std::size_t i = k; i > 1; --i) {
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1));
    std::swap(pd.perm[i - 1], pd.perm[j]);
  }
  pd.diag.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    pd.diag.emplace_back(static_cast<long>(rng.uniform(lo, hi)));
  }
  return pd;
}

}  // namespace tropkex
