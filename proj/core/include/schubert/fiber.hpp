#pragma once

#include <array>
#include <vector>

#include "schubert/phi.hpp"

namespace schubert {

/// One preimage of Q under Phi, with the class and emphasized pipe of its run.
struct FiberMember {
  MarkedPipeDream pair;
  MarkClass kind = MarkClass::P0;
  int k = 0;

  friend bool operator==(const FiberMember&, const FiberMember&) = default;
  friend auto operator<=>(const FiberMember& a, const FiberMember& b) { return a.pair <=> b.pair; }
};

/// Phi^{-1}(Q) for Q in PD(t w), computed twice.
struct Fiber {
  Permutation w;
  Transposition cover;
  StatisticSets stats;
  /// Brute force: every pair of delta_pairs(w, pi) that Phi sends to Q.
  std::vector<FiberMember> forward;
  /// Inverse chains seeded at phi0_inverse(Q), one per k in A and B.
  std::vector<FiberMember> backward;

  /// Sizes of the P0, PA and PB parts of the forward fiber.
  std::array<int, 3> class_counts() const noexcept;
  /// The two computations agree and the sizes are (1, |A|, |B|).
  bool lawful() const;
};

std::vector<FiberMember> fiber_forward(const PipeDream& q, const Permutation& w, Transposition t,
                                       const Permutation& pi);
std::vector<FiberMember> fiber_backward(const PipeDream& q, const Permutation& w, Transposition t,
                                        const Permutation& pi);

/// Both fibers of Q over the cover w ⋖_pi t w. Requires permutation(Q) = t w.
Fiber fiber(const PipeDream& q, const Permutation& w, Transposition t, const Permutation& pi);

/// Same, recovering t from t = permutation(Q) w^{-1}; it must be a transposition.
Fiber fiber(const PipeDream& q, const Permutation& w, const Permutation& pi);

}  // namespace schubert
