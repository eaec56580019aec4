#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "schubert/enumerate.hpp"
#include "schubert/error.hpp"
#include "schubert/moves.hpp"
#include "schubert/render.hpp"
#include "schubert/weak_order.hpp"

using namespace schubert;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

PipeDream D(std::vector<Position> crosses) { return PipeDream::from_crosses(std::move(crosses)); }

std::vector<std::pair<int, int>> as_pairs(std::span<const Position> cells) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : cells) out.emplace_back(p.i, p.j);
  return out;
}

// The slide/swap example: a pipe dream of 216543 with a bump at (1,5).
PipeDream slide_swap_example() { return D({{1, 1}, {1, 3}, {1, 4}, {2, 4}, {3, 1}, {3, 2}, {4, 2}}); }

}  // namespace

TEST_CASE("tracing agrees with the reading word on every subset of the 5-staircase") {
  std::vector<Position> stair;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; i + j <= 5; ++j) stair.push_back({i, j});
  const auto n = stair.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Position> crosses;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (1u << b)) crosses.push_back(stair[b]);
    const auto traced = permutation_of(crosses);
    const auto [word, reduced] = oracle::reading_word_permutation(as_pairs(crosses), 6);
    CHECK(traced.reduced == reduced);
    if (reduced) CHECK(traced.permutation == Permutation::from_one_line(word));
  }
}

TEST_CASE("pipe dreams reject non-reduced and malformed cross sets") {
  CHECK_THROWS_AS(D({{1, 2}, {2, 1}}), PreconditionError);
  CHECK_THROWS_AS(D({{0, 1}}), PreconditionError);
  CHECK_THROWS_AS(D({{1, 1}, {1, 1}}), PreconditionError);
  CHECK(PipeDream{}.permutation().is_identity());
  CHECK(PipeDream{}.bounding_window() == 1);
  CHECK(D({{2, 3}}).bounding_window() == 5);
}

TEST_CASE("tile labels follow the cross and bump rules") {
  for (const auto& w : all_permutations(4))
    for (const auto& pd : enumerate(w)) {
      const auto grid = pd.grid(6);
      for (int i = 1; i <= 5; ++i)
        for (int j = 1; i + j <= 6; ++j) {
          const auto t = grid->at({i, j});
          if (pd.is_cross({i, j})) {
            CHECK(t.west == t.east);
            CHECK(t.south == t.north);
          } else {
            CHECK(t.west == t.north);
            CHECK(t.south == t.east);
          }
        }
      // The west edge spells w, whatever the box.
      const auto edge = grid->west_edge();
      for (int i = 1; i <= 6; ++i) CHECK(edge[static_cast<std::size_t>(i - 1)] == w(i));
    }
}

TEST_CASE("the slide/swap example") {
  const auto pd = slide_swap_example();
  CHECK(to_string(pd.permutation()) == "2,1,6,5,4,3");
  CHECK(is_slidable(pd, {1, 5}));
  CHECK(slide(pd, {1, 5}).mark() == Position{1, 2});
  CHECK(slide(pd, {1, 5}).pd() == pd);

  REQUIRE(is_swappable(pd, {1, 5}));
  const auto q = swap(pd, {1, 5});
  CHECK(q.mark() == Position{3, 1});
  CHECK(q.pd() == D({{1, 1}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 2}, {4, 2}}));
  CHECK(q.pd().permutation() == pd.permutation());

  CHECK_FALSE(is_slidable(PipeDream{}, {1, 1}));
  CHECK_FALSE(is_swappable(PipeDream{}, {2, 3}));
  CHECK_THROWS_AS(slide(PipeDream{}, {1, 1}), PreconditionError);
}

TEST_CASE("slide and swap are invertible and swappability has two descriptions") {
  int slid = 0;
  int swapped = 0;
  for (const auto& w : all_permutations(5))
    for (const auto& pd : enumerate(w))
      for (int i = 1; i <= 5; ++i)
        for (int j = 1; i + j <= 6; ++j) {
          const Position p{i, j};
          if (pd.is_cross(p)) continue;
          CHECK(is_swappable(pd, p) == is_swappable_by_labels(pd, p));
          if (is_slidable(pd, p)) {
            ++slid;
            const auto s = slide(pd, p);
            CHECK(s.mark().i == p.i);
            CHECK(s.labels().south == pd.labels(p).west);
            CHECK(unslide(pd, s.mark()) == p);
          }
          if (is_swappable(pd, p)) {
            ++swapped;
            const auto q = swap(pd, p);
            CHECK(q.pd().permutation() == w);
            CHECK(swap(q) == MarkedPipeDream(pd, p));
          }
        }
  CHECK(slid > 0);
  CHECK(swapped > 0);
}

TEST_CASE("pipe paths") {
  const auto pd = D({{1, 1}, {1, 5}, {3, 2}, {3, 4}, {4, 2}, {5, 2}});
  CHECK(to_string(pd.permutation()) == "2,1,3,6,7,5,4");
  const auto path = pd.pipe(7);
  CHECK(path.label == 7);
  CHECK(path.exit_row == pd.permutation().inverse()(7));
  CHECK(path.reach == std::vector<int>{7, 6, 5, 3, 1});
  CHECK(path.reach_in_row(6) == 0);
  CHECK(weakly_northwest({2, 6}, path));
  CHECK_FALSE(weakly_northwest({2, 7}, path));

  for (const auto& w : all_permutations(4))
    for (const auto& pd4 : enumerate(w))
      for (int k = 1; k <= 5; ++k) {
        const auto pk = pd4.pipe(k);
        CHECK(pk.exit_row == w.inverse()(k));
        CHECK(static_cast<int>(pk.reach.size()) == pk.exit_row);
        for (const auto& t : pk.tiles) {
          const auto labels = pd4.labels(t);
          CHECK((labels.north == k || labels.east == k || labels.south == k || labels.west == k));
        }
      }
}

TEST_CASE("enumeration") {
  CHECK(enumerate(Permutation{}).size() == 1);
  CHECK(enumerate(P("1,4,3,2")).size() == 5);
  CHECK(enumerate(P("2,1")).front() == D({{1, 1}}));

  const auto pds = enumerate(P("3,1,5,2,4"));
  CHECK(std::find(pds.begin(), pds.end(), D({{1, 1}, {1, 2}, {1, 4}, {3, 1}})) != pds.end());

  for (const auto& w : all_permutations(5)) {
    const auto found = enumerate(w);
    CHECK(found == enumerate_bruteforce(w));
    // |PD(w)| is the Schubert polynomial at x = (1, ..., 1).
    long long at_ones = 0;
    for (const auto& [e, c] : oracle::schubert_by_divided_differences(w.one_line(5))) at_ones += c;
    CHECK(static_cast<long long>(found.size()) == at_ones);
    for (const auto& pd : found) {
      CHECK(pd.permutation() == w);
      CHECK(pd.cross_count() == length(w));
    }
  }
  CHECK_THROWS_AS(enumerate_bruteforce(P("8,7,6,5,4,3,2,1")), PreconditionError);
}

TEST_CASE("dominated positions") {
  const auto pi = P("3,4,2,1");
  const auto pd = D({{2, 1}, {2, 2}, {3, 1}});
  CHECK(to_string(pd.permutation()) == "1,4,3,2");
  const auto dominated = dominated_positions(pd, pi);
  CHECK(std::vector<Position>(dominated.positions().begin(), dominated.positions().end()) ==
        std::vector<Position>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}});
  CHECK(dominated.row_counts() == std::vector<int>{2, 2, 1});
  CHECK_THROWS_AS(dominated_positions(pd, P("1,3,2")), PreconditionError);

  // Each dominated set holds every cross and has row counts lambda.
  for (const auto& pi5 : dominant_permutations(5)) {
    const auto lambda = shape(pi5);
    for (const auto& w : weak_lower_interval(pi5))
      for (const auto& q : enumerate(w)) {
        const auto d = dominated_positions(q, pi5);
        for (const auto& c : q.crosses()) CHECK(d.contains(c));
        auto counts = d.row_counts();
        CHECK(Partition(counts) == lambda);
      }
  }
}

TEST_CASE("ascii rendering") {
  const auto pi = P("3,4,2,1");
  const auto pd = D({{2, 1}, {2, 2}, {3, 1}});
  CHECK(render_ascii(pd, pi) == "oo..\n++..\n+...\n....");
  CHECK(render_ascii(pd, pi, Position{1, 2}) == "o*..\n++..\n+...\n....");
  CHECK(render_ascii(pd) == "....\n++..\n+...\n....");
  CHECK(render_ascii(PipeDream{}) == ".");
  CHECK_THROWS_AS(render_ascii(pd, pi, Position{2, 1}), PreconditionError);
}
