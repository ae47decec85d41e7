#pragma once

#include <cstddef>
#include <cstdint>

#include "tropkex/matrix.hpp"
#include "tropkex/prng.hpp"

namespace tropkex {

/// Row-major fill with uniform integers in [lo, hi].
TropMatrix random_matrix(SplitMix64& rng, std::size_t k, std::int64_t lo, std::int64_t hi);

/// As random_matrix, but each entry is epsilon with probability 1/eps_one_in.
TropMatrix random_matrix_with_eps(SplitMix64& rng, std::size_t k, std::int64_t lo,
                                  std::int64_t hi, std::uint64_t eps_one_in);

/// Uniform permutation (Fisher-Yates) with a uniform finite diagonal.
PermDiag random_perm_diag(SplitMix64& rng, std::size_t k, std::int64_t lo,
                          std::int64_t hi);

}  // namespace tropkex
