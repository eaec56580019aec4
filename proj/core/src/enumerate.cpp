#include "schubert/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "schubert/error.hpp"
#include "schubert/weak_order.hpp"

namespace schubert {

namespace {

using CrossSet = std::vector<Position>;

bool has(const CrossSet& s, Position p) { return std::binary_search(s.begin(), s.end(), p); }

CrossSet moved(CrossSet s, Position from, Position to) {
  s.erase(std::lower_bound(s.begin(), s.end(), from));
  s.insert(std::lower_bound(s.begin(), s.end(), to), to);
  return s;
}

// Ladder moves out of `s`: a cross at (i, j) with a bump at (i, j + 1) climbs
// over a column of double crosses in columns j, j + 1 to the first row above
// with bumps at both, landing at (i - m, j + 1).
std::vector<CrossSet> ladder_moves(const CrossSet& s) {
  std::vector<CrossSet> out;
  for (const auto& p : s) {
    if (has(s, {p.i, p.j + 1})) continue;
    for (int r = p.i - 1; r >= 1; --r) {
      const bool left = has(s, {r, p.j});
      const bool right = has(s, {r, p.j + 1});
      if (left && right) continue;
      if (!left && !right) out.push_back(moved(s, p, {r, p.j + 1}));
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<PipeDream> enumerate(const Permutation& w) {
  CrossSet bottom;
  const auto c = code(w);
  for (int i = 1; i <= static_cast<int>(c.size()); ++i)
    for (int j = 1; j <= c[static_cast<std::size_t>(i - 1)]; ++j) bottom.push_back({i, j});

  std::set<CrossSet> seen{bottom};
  std::deque<CrossSet> queue{bottom};
  while (!queue.empty()) {
    const auto s = std::move(queue.front());
    queue.pop_front();
    for (auto& next : ladder_moves(s))
      if (seen.insert(next).second) queue.push_back(std::move(next));
  }

  std::vector<PipeDream> out;
  out.reserve(seen.size());
  for (const auto& s : seen) {
    auto pd = PipeDream::from_crosses(s);
    detail::ensure(pd.permutation() == w, "ladder move changed the permutation");
    out.push_back(std::move(pd));
  }
  return out;
}

std::vector<PipeDream> enumerate_bruteforce(const Permutation& w) {
  detail::require(w.size() <= kBruteForceMaxWindow, "enumerate_bruteforce is limited to windows of size 7");
  const int n = w.size();
  const int ell = length(w);
  std::vector<Position> cells;
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j <= n; ++j) cells.push_back({i, j});

  std::vector<PipeDream> out;
  const int total = static_cast<int>(cells.size());
  if (ell > total) return out;
  // Walk the ell-subsets via a selector mask in lexicographic order.
  std::vector<char> pick(static_cast<std::size_t>(total), 0);
  std::fill(pick.begin(), pick.begin() + ell, 1);
  do {
    std::vector<Position> subset;
    for (int k = 0; k < total; ++k)
      if (pick[static_cast<std::size_t>(k)]) subset.push_back(cells[static_cast<std::size_t>(k)]);
    const auto tracing = permutation_of(subset);
    if (tracing.reduced && tracing.permutation == w) out.push_back(PipeDream::from_crosses(std::move(subset)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace schubert
