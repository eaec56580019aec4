#pragma once

#include <string_view>
#include <vector>

#include "schubert/moves.hpp"
#include "schubert/pipe_dream.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

// The correspondence Phi from marked pipe dreams of w onto pipe dreams of the
// covers t_ab w below pi. Throughout, the mark p of (P, p) is a bump tile,
// w_p and s_p are the pipes leaving it west and south, w = permutation(P),
// and pi is a dominant permutation with w <=_L pi.

enum class MarkClass { P0, PA, PB };
enum class AlignKind { A, B };

/// "0", "A", "B".
std::string_view to_string(MarkClass c) noexcept;
std::string_view to_string(AlignKind k) noexcept;

/// P0 when (w_p, s_p) in Inv(pi w^{-1}), PA when s_p < w_p, PB when
/// (w_p, s_p) in coInv(pi w^{-1}). Requires the mark to be dominated.
MarkClass classify(const MarkedPipeDream& mpd, const Permutation& pi);

/// Every (P, p) with P in PD(w) and p a dominated bump, sorted.
std::vector<MarkedPipeDream> delta_pairs(const Permutation& w, const Permutation& pi);

/// The mark lies weakly northwest of pipe k, and additionally
///   A: (w_p, k) in Inv(w^{-1});
///   B: (w_p, k) in coInv(pi w^{-1}) and row(p) <= lambda'_{pi w^{-1}(k)}.
bool is_aligned(const MarkedPipeDream& mpd, int k, AlignKind kind, const Permutation& pi);

/// Positions weakly northwest of both pipe w_p and pipe k, cut off below
/// row lambda'_{pi w^{-1}(k)} for kind B. Sorted.
std::vector<Position> sigma(const MarkedPipeDream& mpd, int k, AlignKind kind, const Permutation& pi);

/// One step of the chain: slide, then swap if the slid pair is swappable and
/// the swap is again (kind, k)-aligned. Requires `mpd` to be aligned.
MarkedPipeDream phi_step(const MarkedPipeDream& mpd, int k, AlignKind kind, const Permutation& pi);

struct Phi0Result {
  PipeDream result;
  Transposition cover;
};

/// Turns the mark into a cross. Requires classify(mpd, pi) == P0; the result
/// lies in PD(t_ab w) with (a, b) = (w_p, s_p).
Phi0Result phi0(const MarkedPipeDream& mpd, const Permutation& pi);

/// Inverse of phi0: removes the crossing of pipes t.a and t.b from q.
/// Throws PreconditionError if they do not cross.
MarkedPipeDream phi0_inverse(const PipeDream& q, Transposition t);

/// A full run of Phi on one marked pipe dream.
struct PhiTrace {
  MarkClass kind = MarkClass::P0;
  /// The emphasized pipe; 0 for P0 inputs.
  int k = 0;
  MarkedPipeDream input;
  /// (P_0, p_0), ..., (P_m, p_m). A single entry (the input) for P0.
  std::vector<MarkedPipeDream> steps;
  PipeDream result;
  Transposition cover;

  /// m, the number of phi steps taken.
  int step_count() const noexcept { return static_cast<int>(steps.size()) - 1; }
};

PhiTrace phi(const MarkedPipeDream& mpd, const Permutation& pi);

/// A(w, t w) and B(w, t w) for a cover w ⋖_pi t w, ascending.
struct StatisticSets {
  std::vector<int> A;
  std::vector<int> B;

  int multiplicity() const noexcept { return 1 + static_cast<int>(A.size() + B.size()); }
};

StatisticSets ab_sets(const Permutation& w, Transposition t, const Permutation& pi);

/// (x_i / y_i) times the padded weight of P, with i the row of the mark.
Monomial marked_weight(const MarkedPipeDream& mpd, const DominatedSet& dominated);

/// The unique (kind, k)-aligned pair that phi_step sends to `mpd`.
///
/// `mpd` is either the P0 seed of a fiber with k in the matching statistic
/// set, or an aligned pair with s_q != k. The candidate comes from unsliding
/// q, or from swapping first and then unsliding; it is checked to be aligned
/// and to map back to `mpd`, otherwise InvariantViolation. Any other input
/// raises PreconditionError.
MarkedPipeDream phi_step_inverse(const MarkedPipeDream& mpd, int k, AlignKind kind, const Permutation& pi,
                                 const StatisticSets& stats);

}  // namespace schubert
