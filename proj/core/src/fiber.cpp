#include "schubert/fiber.hpp"

#include <algorithm>

#include "schubert/error.hpp"
#include "schubert/weak_order.hpp"

namespace schubert {

namespace {

void require_fiber_domain(const PipeDream& q, const Permutation& w, Transposition t, const Permutation& pi) {
  detail::require(q.permutation() == t * w, "pipe dream does not belong to t w");
  // ab_sets validates the cover and the weak order bound.
  (void)ab_sets(w, t, pi);
}

}  // namespace

std::array<int, 3> Fiber::class_counts() const noexcept {
  std::array<int, 3> counts{0, 0, 0};
  for (const auto& m : forward) ++counts[static_cast<std::size_t>(m.kind)];
  return counts;
}

bool Fiber::lawful() const {
  const auto counts = class_counts();
  return forward == backward && counts[0] == 1 && counts[1] == static_cast<int>(stats.A.size()) &&
         counts[2] == static_cast<int>(stats.B.size());
}

std::vector<FiberMember> fiber_forward(const PipeDream& q, const Permutation& w, Transposition t,
                                       const Permutation& pi) {
  require_fiber_domain(q, w, t, pi);
  std::vector<FiberMember> out;
  for (const auto& pair : delta_pairs(w, pi)) {
    const auto trace = phi(pair, pi);
    if (trace.result == q) {
      detail::ensure(trace.cover == t, "Phi reached Q through the wrong cover");
      out.push_back({pair, trace.kind, trace.k});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiberMember> fiber_backward(const PipeDream& q, const Permutation& w, Transposition t,
                                        const Permutation& pi) {
  require_fiber_domain(q, w, t, pi);
  const auto stats = ab_sets(w, t, pi);
  const auto seed = phi0_inverse(q, t);
  detail::ensure(seed.pd().permutation() == w, "uncrossing Q did not land in PD(w)");
  detail::ensure(classify(seed, pi) == MarkClass::P0, "the seed of a fiber is not in P0");

  std::vector<FiberMember> out{{seed, MarkClass::P0, 0}};
  const auto walk = [&](AlignKind kind, int k) {
    // Sigma grows strictly along the reversed chain and stays inside the
    // region northwest of pipe k, so this many steps always suffice.
    const int side = std::max(q.bounding_window(), k) + 1;
    const int cap = side * side;
    auto cur = seed;
    int steps = 0;
    do {
      cur = phi_step_inverse(cur, k, kind, pi, stats);
      detail::ensure(++steps <= cap, "inverse chain did not reach pipe k");
    } while (cur.labels().south != k);
    auto start = kind == AlignKind::A ? swap(cur) : cur;
    const auto cls = kind == AlignKind::A ? MarkClass::PA : MarkClass::PB;
    detail::ensure(classify(start, pi) == cls, "inverse chain ended in the wrong class");
    out.push_back({std::move(start), cls, k});
  };
  for (int k : stats.A) walk(AlignKind::A, k);
  for (int k : stats.B) walk(AlignKind::B, k);
  std::sort(out.begin(), out.end());
  return out;
}

Fiber fiber(const PipeDream& q, const Permutation& w, Transposition t, const Permutation& pi) {
  require_fiber_domain(q, w, t, pi);
  return Fiber{.w = w,
               .cover = t,
               .stats = ab_sets(w, t, pi),
               .forward = fiber_forward(q, w, t, pi),
               .backward = fiber_backward(q, w, t, pi)};
}

Fiber fiber(const PipeDream& q, const Permutation& w, const Permutation& pi) {
  const auto t = q.permutation() * w.inverse();
  std::vector<int> moved;
  for (int k = 1; k <= t.size(); ++k)
    if (t(k) != k) moved.push_back(k);
  detail::require(moved.size() == 2, to_string(q.permutation()) + " is not a transposition times " + to_string(w));
  return fiber(q, w, Transposition::make(moved[0], moved[1]), pi);
}

}  // namespace schubert
