#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tropkex {

struct ReplayCheck {
  std::string name;
  bool passed;
  /// Counterexample or short note.
  std::string detail;
};

/// Replays the reference worked examples: scalar laws, 2x2 matrix sum,
/// product, scalar multiple, diagonal inverse and conjugation, polynomial
/// degrees, and the low-order expansions of (M, H)^2 and (M, H)^3 for both
/// schemes. Symbolic examples are instantiated on `instances` seeded random
/// 2x2 and 3x3 matrices with entries in [-10, 10].
std::vector<ReplayCheck> replay_worked_examples(std::uint64_t seed = 1,
                                                std::size_t instances = 50);

void print_replay(std::ostream& os, const std::vector<ReplayCheck>& checks);

}  // namespace tropkex
