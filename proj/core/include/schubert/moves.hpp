#pragma once

#include <optional>
#include <vector>

#include "schubert/partition.hpp"
#include "schubert/pipe_dream.hpp"

namespace schubert {

// Slide and swap on pairs (P, p) with p a bump of P. All of these throw
// PreconditionError when p is a cross.

/// (P, p) is slidable iff w^{-1}(west_p) > row(p), i.e. pipe west_p turns
/// south somewhere west of p in the same row.
bool is_slidable(const PipeDream& pd, Position p);
/// Moves the mark to the first bump due west of p, where pipe west_p turns
/// south. The cross set is unchanged.
MarkedPipeDream slide(const PipeDream& pd, Position p);
inline MarkedPipeDream slide(const MarkedPipeDream& m) { return slide(m.pd(), m.mark()); }

/// The unique q with slide(pd, q) = (pd, p): the first bump due east of p.
Position unslide(const PipeDream& pd, Position p);

/// The cross tile where pipes a and b meet, if they cross.
std::optional<Position> crossing_of(const PipeDream& pd, int a, int b);

/// (P, p) is swappable iff pipes west_p and south_p cross somewhere.
bool is_swappable(const PipeDream& pd, Position p);
/// The label criterion: west_p > south_p or w^{-1}(west_p) > w^{-1}(south_p).
bool is_swappable_by_labels(const PipeDream& pd, Position p);
/// Exchanges the bump at p with the crossing q of pipes west_p and south_p;
/// the mark moves to q.
MarkedPipeDream swap(const PipeDream& pd, Position p);
inline MarkedPipeDream swap(const MarkedPipeDream& m) { return swap(m.pd(), m.mark()); }

/// The pi-dominated positions P(pi) of a pipe dream, with the permutations
/// they were computed against.
class DominatedSet {
 public:
  DominatedSet(std::vector<Position> positions, Permutation pi, Permutation w)
      : positions_(std::move(positions)), pi_(std::move(pi)), w_(std::move(w)) {}

  std::span<const Position> positions() const noexcept { return positions_; }
  bool contains(Position p) const noexcept;
  const Permutation& pi() const noexcept { return pi_; }
  const Permutation& w() const noexcept { return w_; }
  /// Number of positions in rows 1, 2, ... up to the last nonempty row.
  std::vector<int> row_counts() const;

 private:
  std::vector<Position> positions_;
  Permutation pi_;
  Permutation w_;
};

/// p is dominated by pi in pd: row(p) <= lambda'_{pi w^{-1}(south_p)} where
/// lambda' is the conjugate of the shape of pi.
bool is_dominated(const PipeDream& pd, Position p, const Permutation& pi, const Partition& conjugate_shape);

/// P(pi) for pd in PD(w). Requires pi dominant and w <=_L pi; verifies that
/// row i holds exactly lambda_i positions and that every cross is included.
DominatedSet dominated_positions(const PipeDream& pd, const Permutation& pi);

}  // namespace schubert
