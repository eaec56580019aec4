#include "schubert/render.hpp"

#include <algorithm>

#include "schubert/error.hpp"
#include "schubert/moves.hpp"

namespace schubert {

std::string render_ascii(const PipeDream& pd, const std::optional<Permutation>& pi,
                         const std::optional<Position>& mark) {
  int box = std::max(pd.bounding_window(), pd.permutation().size());
  std::optional<DominatedSet> dominated;
  if (pi) {
    box = std::max(box, pi->size());
    dominated = dominated_positions(pd, *pi);
  }
  if (mark) {
    detail::require(!pd.is_cross(*mark), "cannot render a mark on a cross tile");
    box = std::max({box, mark->i, mark->j});
  }

  std::string out;
  for (int i = 1; i <= box; ++i) {
    if (i > 1) out += '\n';
    for (int j = 1; j <= box; ++j) {
      const Position p{i, j};
      if (pd.is_cross(p))
        out += '+';
      else if (mark && *mark == p)
        out += '*';
      else if (dominated && dominated->contains(p))
        out += 'o';
      else
        out += '.';
    }
  }
  return out;
}

}  // namespace schubert
