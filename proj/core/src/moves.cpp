#include "schubert/moves.hpp"

#include <algorithm>
#include <sstream>

#include "schubert/error.hpp"
#include "schubert/weak_order.hpp"

namespace schubert {

namespace {

void require_bump(const PipeDream& pd, Position p) {
  detail::require(pd.is_bump(p), "position is not a bump tile");
}

std::string describe(const PipeDream& pd, Position p) {
  std::ostringstream os;
  os << "mark " << p << " in pipe dream of " << to_string(pd.permutation());
  return os.str();
}

}  // namespace

bool is_slidable(const PipeDream& pd, Position p) {
  require_bump(pd, p);
  const int exit_row = pd.permutation().inverse()(pd.labels(p).west);
  // A pipe leaves weakly below every row it touches.
  detail::ensure(exit_row >= p.i, "pipe exits above a row it passes through");
  return exit_row > p.i;
}

MarkedPipeDream slide(const PipeDream& pd, Position p) {
  detail::require(is_slidable(pd, p), describe(pd, p) + " is not slidable");
  Position q{p.i, p.j - 1};
  while (pd.is_cross(q)) --q.j;
  detail::ensure(q.j >= 1, "slide ran off the west edge");
  detail::ensure(pd.labels(q).south == pd.labels(p).west, "slide target does not turn pipe west_p south");
  return MarkedPipeDream(pd, q);
}

Position unslide(const PipeDream& pd, Position p) {
  require_bump(pd, p);
  Position q{p.i, p.j + 1};
  while (pd.is_cross(q)) ++q.j;
  return q;
}

std::optional<Position> crossing_of(const PipeDream& pd, int a, int b) {
  const auto grid = pd.grid();
  const auto pair = std::minmax(a, b);
  for (const auto& c : pd.crosses()) {
    const auto& t = grid->at(c);
    if (std::minmax(t.north, t.east) == pair) return c;
  }
  return std::nullopt;
}

bool is_swappable(const PipeDream& pd, Position p) {
  require_bump(pd, p);
  const auto t = pd.labels(p);
  const bool result = crossing_of(pd, t.west, t.south).has_value();
  if constexpr (kCrossChecks) {
    detail::ensure(result == is_swappable_by_labels(pd, p), "swappability criteria disagree");
  }
  return result;
}

bool is_swappable_by_labels(const PipeDream& pd, Position p) {
  require_bump(pd, p);
  const auto t = pd.labels(p);
  const auto w_inv = pd.permutation().inverse();
  return (t.west > t.south) != (w_inv(t.west) > w_inv(t.south));
}

MarkedPipeDream swap(const PipeDream& pd, Position p) {
  require_bump(pd, p);
  const auto t = pd.labels(p);
  const auto q = crossing_of(pd, t.west, t.south);
  detail::require(q.has_value(), describe(pd, p) + " is not swappable");
  auto crosses = std::vector<Position>(pd.crosses().begin(), pd.crosses().end());
  std::replace(crosses.begin(), crosses.end(), *q, p);
  auto swapped = PipeDream::from_crosses(std::move(crosses));
  detail::ensure(swapped.permutation() == pd.permutation(), "swap changed the permutation");
  return MarkedPipeDream(std::move(swapped), *q);
}

bool DominatedSet::contains(Position p) const noexcept {
  return std::binary_search(positions_.begin(), positions_.end(), p);
}

std::vector<int> DominatedSet::row_counts() const {
  std::vector<int> counts;
  for (const auto& p : positions_) {
    if (static_cast<int>(counts.size()) < p.i) counts.resize(static_cast<std::size_t>(p.i), 0);
    ++counts[static_cast<std::size_t>(p.i - 1)];
  }
  return counts;
}

bool is_dominated(const PipeDream& pd, Position p, const Permutation& pi, const Partition& conjugate_shape) {
  const int south = pd.labels(p).south;
  return p.i <= conjugate_shape[pi(pd.permutation().inverse()(south))];
}

DominatedSet dominated_positions(const PipeDream& pd, const Permutation& pi) {
  const auto& w = pd.permutation();
  const auto lambda = shape(pi);
  detail::require(leq_weak(w, pi), to_string(w) + " is not below " + to_string(pi) + " in weak order");
  const auto conj = lambda.conjugate();

  // Dominated positions lie on pipes labelled at most max(|w|, |pi|), all of
  // which stay inside this many columns.
  const int cols = std::max({w.size(), pi.size(), pd.bounding_window()}) + 1;
  const auto grid = pd.grid(cols);
  const auto w_inv = w.inverse();
  std::vector<Position> positions;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= cols; ++j)
      if (i <= conj[pi(w_inv(grid->at({i, j}).south))]) positions.push_back({i, j});

  DominatedSet out(std::move(positions), pi, w);
  const auto counts = out.row_counts();
  for (int i = 1; i <= lambda.length(); ++i)
    detail::ensure(counts.size() >= static_cast<std::size_t>(i) && counts[static_cast<std::size_t>(i - 1)] == lambda[i],
                   "dominated set has the wrong number of positions in a row");
  for (const auto& c : pd.crosses())
    detail::ensure(out.contains(c), "dominated set misses a cross");
  return out;
}

}  // namespace schubert
