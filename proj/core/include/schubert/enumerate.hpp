#pragma once

#include <vector>

#include "schubert/pipe_dream.hpp"

namespace schubert {

/// PD(w), sorted by cross list. Generated as the ladder-move closure of the
/// bottom pipe dream (row i holds crosses in columns 1..code_i(w)).
std::vector<PipeDream> enumerate(const Permutation& w);

/// Largest window enumerate_bruteforce accepts.
inline constexpr int kBruteForceMaxWindow = 7;

/// PD(w) by filtering every l(w)-subset of the staircase {i + j <= n}.
/// Independent of `enumerate`; throws PreconditionError for windows above 7.
std::vector<PipeDream> enumerate_bruteforce(const Permutation& w);

}  // namespace schubert
