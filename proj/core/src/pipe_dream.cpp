#include "schubert/pipe_dream.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "schubert/error.hpp"
#include "schubert/weak_order.hpp"

namespace schubert {

namespace detail {

struct TraceCache {
  std::mutex mutex;
  std::shared_ptr<const TileGrid> grid;
};

}  // namespace detail

namespace {

int staircase_window(std::span<const Position> crosses) {
  int n = 1;
  for (const auto& p : crosses) n = std::max(n, p.i + p.j);
  return n;
}

bool contains_sorted(std::span<const Position> sorted, Position p) {
  return std::binary_search(sorted.begin(), sorted.end(), p);
}

std::vector<Position> normalized(std::vector<Position> crosses) {
  for (const auto& p : crosses)
    detail::require(p.i >= 1 && p.j >= 1, "pipe dream coordinates must be positive");
  std::sort(crosses.begin(), crosses.end());
  detail::require(std::adjacent_find(crosses.begin(), crosses.end()) == crosses.end(),
                  "pipe dream has a repeated cross");
  return crosses;
}

Tracing read_grid(const TileGrid& grid, std::span<const Position> crosses) {
  const auto west = grid.west_edge();
  Tracing out;
  out.permutation = Permutation::from_one_line(west);
  std::set<std::pair<int, int>> crossing_pairs;
  for (const auto& p : crosses) {
    const auto& t = grid.at(p);
    const auto pair = std::minmax(t.north, t.east);
    if (!crossing_pairs.insert(pair).second) out.reduced = false;
  }
  if constexpr (kCrossChecks) {
    detail::ensure(out.reduced == (static_cast<int>(crosses.size()) == length(out.permutation)),
                   "reducedness disagrees with the length criterion");
  }
  return out;
}

}  // namespace

TileGrid::TileGrid(std::span<const Position> sorted_crosses, int box) : box_(box) {
  detail::require(box >= 1, "trace box must be at least 1");
  const auto n = static_cast<std::size_t>(box);
  tiles_.resize(n * n);
  cross_.assign(n * n, 0);
  for (const auto& p : sorted_crosses) {
    if (!in_box(p)) throw PreconditionError("trace box too small for the cross set");
    cross_[index(p)] = 1;
  }
  for (int i = 1; i <= box; ++i) {
    int from_east = box + i;
    for (int j = box; j >= 1; --j) {
      const int from_north = i == 1 ? j : tiles_[index({i - 1, j})].south;
      auto& tile = tiles_[index({i, j})];
      tile.north = from_north;
      tile.east = from_east;
      if (cross_[index({i, j})]) {
        tile.west = from_east;
        tile.south = from_north;
      } else {
        tile.west = from_north;
        tile.south = from_east;
      }
      from_east = tile.west;
    }
  }
}

const TileLabels& TileGrid::at(Position p) const {
  if (!in_box(p)) {
    std::ostringstream os;
    os << "tile " << p << " outside trace box " << box_;
    throw PreconditionError(os.str());
  }
  return tiles_[index(p)];
}

bool TileGrid::is_cross(Position p) const { return in_box(p) && cross_[index(p)] != 0; }

std::vector<int> TileGrid::west_edge() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(box_));
  for (int i = 1; i <= box_; ++i) out.push_back(tiles_[index({i, 1})].west);
  return out;
}

Tracing permutation_of(std::span<const Position> crosses) {
  const auto sorted = normalized({crosses.begin(), crosses.end()});
  const TileGrid grid(sorted, staircase_window(sorted));
  return read_grid(grid, sorted);
}

PipeDream::PipeDream() : cache_(std::make_shared<detail::TraceCache>()) {}

PipeDream PipeDream::from_crosses(std::vector<Position> crosses) {
  PipeDream pd;
  pd.crosses_ = normalized(std::move(crosses));
  auto grid = std::make_shared<const TileGrid>(pd.crosses_, pd.bounding_window() + 1);
  const auto tracing = read_grid(*grid, pd.crosses_);
  if (!tracing.reduced) throw PreconditionError("cross set is not a reduced pipe dream");
  pd.permutation_ = tracing.permutation;
  pd.cache_->grid = std::move(grid);
  return pd;
}

bool PipeDream::is_cross(Position p) const noexcept { return contains_sorted(crosses_, p); }

int PipeDream::bounding_window() const noexcept { return staircase_window(crosses_); }

std::shared_ptr<const TileGrid> PipeDream::grid(int min_box) const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->grid || cache_->grid->box() < min_box) {
    const int box = std::max({min_box, bounding_window() + 1, permutation_.size() + 1});
    cache_->grid = std::make_shared<const TileGrid>(crosses_, box);
  }
  return cache_->grid;
}

TileLabels PipeDream::labels(Position p) const {
  detail::require(p.i >= 1 && p.j >= 1, "tile coordinates must be positive");
  return grid(std::max(p.i, p.j))->at(p);
}

PipePath PipeDream::pipe(int label) const {
  detail::require(label >= 1, "pipe labels are positive");
  PipePath path;
  path.label = label;
  int row = 1;
  int col = label;
  bool from_north = true;
  while (true) {
    path.tiles.push_back({row, col});
    if (static_cast<int>(path.reach.size()) < row) path.reach.push_back(col);
    const bool cross = is_cross({row, col});
    const bool go_south = from_north == cross;
    if (go_south) {
      ++row;
      from_north = true;
    } else if (col == 1) {
      break;
    } else {
      --col;
      from_north = false;
    }
  }
  path.exit_row = row;
  if constexpr (kCrossChecks) {
    detail::ensure(permutation_.inverse()(label) == row, "pipe walk disagrees with the permutation");
  }
  return path;
}

PipeDream PipeDream::toggled(Position p) const {
  auto crosses = crosses_;
  if (const auto it = std::lower_bound(crosses.begin(), crosses.end(), p); it != crosses.end() && *it == p)
    crosses.erase(it);
  else
    crosses.insert(it, p);
  return from_crosses(std::move(crosses));
}

TileGrid trace(const PipeDream& pd, int box) {
  detail::require(box >= pd.bounding_window(), "trace box too small for the cross set");
  return TileGrid(pd.crosses(), box);
}

MarkedPipeDream::MarkedPipeDream(PipeDream pd, Position mark) : pd_(std::move(pd)), mark_(mark) {
  detail::require(mark.i >= 1 && mark.j >= 1, "mark coordinates must be positive");
  detail::require(!pd_.is_cross(mark), "mark must sit on a bump tile");
}

}  // namespace schubert
