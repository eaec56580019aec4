#pragma once

#include <compare>
#include <memory>
#include <span>
#include <vector>

#include "schubert/permutation.hpp"

namespace schubert {

/// Labels of the pipes crossing the four edges of one tile.
///
/// A cross tile carries west == east and south == north; a bump tile turns
/// the northern pipe west (west == north) and the eastern pipe south
/// (south == east).
struct TileLabels {
  int north = 0;
  int east = 0;
  int south = 0;
  int west = 0;

  friend bool operator==(const TileLabels&, const TileLabels&) = default;
};

/// Pipe labels on every tile of the box [1, box]^2.
///
/// Boundary seeding: the north edge of (1, j) carries pipe j and the east edge
/// of (i, box) carries pipe box + i, which is what the all-bump region east of
/// the box delivers. Labels are exact for every tile in the box as long as the
/// crosses lie inside it.
class TileGrid {
 public:
  TileGrid(std::span<const Position> sorted_crosses, int box);

  int box() const noexcept { return box_; }
  bool in_box(Position p) const noexcept { return p.i >= 1 && p.j >= 1 && p.i <= box_ && p.j <= box_; }
  const TileLabels& at(Position p) const;
  bool is_cross(Position p) const;
  /// West-edge labels of column 1 read top to bottom.
  std::vector<int> west_edge() const;

 private:
  std::size_t index(Position p) const noexcept {
    return static_cast<std::size_t>(p.i - 1) * static_cast<std::size_t>(box_) + static_cast<std::size_t>(p.j - 1);
  }

  int box_;
  std::vector<TileLabels> tiles_;
  std::vector<char> cross_;
};

/// The tiles one pipe passes through, from where it enters at the top of
/// its column to where it leaves through the west edge.
struct PipePath {
  int label = 0;
  int exit_row = 0;
  std::vector<Position> tiles;
  /// reach[r - 1] is the largest column the pipe occupies in row r.
  std::vector<int> reach;

  /// Largest column of the pipe in `row`, or 0 if the pipe exits above it.
  int reach_in_row(int row) const noexcept {
    return row >= 1 && row <= exit_row ? reach[static_cast<std::size_t>(row - 1)] : 0;
  }
};

/// p lies weakly northwest of the pipe: some tile of the pipe sits in a row
/// >= p.i and a column >= p.j.
inline bool weakly_northwest(Position p, const PipePath& pipe) noexcept {
  return p.j <= pipe.reach_in_row(p.i);
}

/// Result of tracing an arbitrary finite cross set.
struct Tracing {
  Permutation permutation;
  bool reduced = true;
};

/// Reads the permutation off the west edge and decides reducedness (no two
/// pipes cross twice). Coordinates must be >= 1.
Tracing permutation_of(std::span<const Position> crosses);

namespace detail {
struct TraceCache;
}

/// A reduced pipe dream: the finite set of cross tiles, with its permutation
/// and a memoized label grid. Immutable after construction.
class PipeDream {
 public:
  PipeDream();

  /// Throws PreconditionError on coordinates < 1, duplicates, or a
  /// non-reduced cross set.
  static PipeDream from_crosses(std::vector<Position> crosses);

  std::span<const Position> crosses() const noexcept { return crosses_; }
  int cross_count() const noexcept { return static_cast<int>(crosses_.size()); }
  bool is_cross(Position p) const noexcept;
  bool is_bump(Position p) const noexcept { return p.i >= 1 && p.j >= 1 && !is_cross(p); }
  const Permutation& permutation() const noexcept { return permutation_; }

  /// Smallest N >= 1 with every cross in the staircase {i + j <= N}.
  int bounding_window() const noexcept;

  /// A label grid covering at least [1, min_box]^2. Thread safe.
  std::shared_ptr<const TileGrid> grid(int min_box = 0) const;
  TileLabels labels(Position p) const;
  PipePath pipe(int label) const;

  /// The pipe dream with the tile at p flipped; validated like from_crosses.
  PipeDream toggled(Position p) const;

  friend bool operator==(const PipeDream& a, const PipeDream& b) noexcept { return a.crosses_ == b.crosses_; }
  friend std::strong_ordering operator<=>(const PipeDream& a, const PipeDream& b) noexcept {
    return a.crosses_ <=> b.crosses_;
  }

 private:
  std::vector<Position> crosses_;
  Permutation permutation_;
  std::shared_ptr<detail::TraceCache> cache_;
};

/// Label grid over [1, box]^2. Throws PreconditionError if a cross falls
/// outside the box.
TileGrid trace(const PipeDream& pd, int box);

/// A pipe dream with a distinguished bump tile.
class MarkedPipeDream {
 public:
  /// Throws PreconditionError if `mark` is a cross of `pd`.
  MarkedPipeDream(PipeDream pd, Position mark);

  const PipeDream& pd() const noexcept { return pd_; }
  Position mark() const noexcept { return mark_; }
  TileLabels labels() const { return pd_.labels(mark_); }

  friend bool operator==(const MarkedPipeDream&, const MarkedPipeDream&) = default;
  friend auto operator<=>(const MarkedPipeDream& a, const MarkedPipeDream& b) {
    if (auto c = a.pd_ <=> b.pd_; c != 0) return c;
    return a.mark_ <=> b.mark_;
  }

 private:
  PipeDream pd_;
  Position mark_;
};

}  // namespace schubert
