#include "schubert/phi.hpp"

#include <algorithm>
#include <sstream>

#include "schubert/enumerate.hpp"
#include "schubert/error.hpp"
#include "schubert/padded.hpp"
#include "schubert/weak_order.hpp"

namespace schubert {

namespace {

std::string describe(const MarkedPipeDream& mpd) {
  std::ostringstream os;
  os << "mark " << mpd.mark() << " in pipe dream of " << to_string(mpd.pd().permutation());
  return os.str();
}

/// lambda'_{pi w^{-1}(k)}: the lowest row a mark may occupy in kind B.
int cutoff_row(const Permutation& w_inv, int k, const Permutation& pi) {
  return shape(pi).conjugate()[pi(w_inv(k))];
}

bool contains(const std::vector<int>& sorted, int k) { return std::binary_search(sorted.begin(), sorted.end(), k); }

/// The P0 test without the dominance precondition.
bool is_p0_pair(const MarkedPipeDream& mpd, const Permutation& pi) {
  const auto t = mpd.labels();
  const auto v = pi * mpd.pd().permutation().inverse();
  return is_inversion(v, t.west, t.south) &&
         is_dominated(mpd.pd(), mpd.mark(), pi, shape(pi).conjugate());
}

}  // namespace

std::string_view to_string(MarkClass c) noexcept {
  switch (c) {
    case MarkClass::P0: return "0";
    case MarkClass::PA: return "A";
    case MarkClass::PB: return "B";
  }
  return "?";
}

std::string_view to_string(AlignKind k) noexcept { return k == AlignKind::A ? "A" : "B"; }

MarkClass classify(const MarkedPipeDream& mpd, const Permutation& pi) {
  const auto conj = shape(pi).conjugate();
  detail::require(is_dominated(mpd.pd(), mpd.mark(), pi, conj), describe(mpd) + " is not dominated by " + to_string(pi));
  const auto t = mpd.labels();
  const auto v = pi * mpd.pd().permutation().inverse();
  const bool p0 = is_inversion(v, t.west, t.south);
  const bool pa = t.south < t.west;
  const bool pb = is_coinversion(v, t.west, t.south);
  detail::ensure(int{p0} + int{pa} + int{pb} == 1, describe(mpd) + " does not fall in exactly one class");
  if (pa) return MarkClass::PA;
  return p0 ? MarkClass::P0 : MarkClass::PB;
}

std::vector<MarkedPipeDream> delta_pairs(const Permutation& w, const Permutation& pi) {
  detail::require(is_dominant(pi), to_string(pi) + " is not dominant");
  detail::require(leq_weak(w, pi), to_string(w) + " is not below " + to_string(pi) + " in weak order");
  std::vector<MarkedPipeDream> out;
  for (const auto& pd : enumerate(w)) {
    const auto dominated = dominated_positions(pd, pi);
    for (const auto& p : dominated.positions())
      if (!pd.is_cross(p)) out.emplace_back(pd, p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_aligned(const MarkedPipeDream& mpd, int k, AlignKind kind, const Permutation& pi) {
  const auto& pd = mpd.pd();
  const auto p = mpd.mark();
  if (!weakly_northwest(p, pd.pipe(k))) return false;
  const int west = mpd.labels().west;
  const auto w_inv = pd.permutation().inverse();
  if (kind == AlignKind::A) return is_inversion(w_inv, west, k);
  return is_coinversion(pi * w_inv, west, k) && p.i <= cutoff_row(w_inv, k, pi);
}

std::vector<Position> sigma(const MarkedPipeDream& mpd, int k, AlignKind kind, const Permutation& pi) {
  const auto& pd = mpd.pd();
  const auto west_pipe = pd.pipe(mpd.labels().west);
  const auto k_pipe = pd.pipe(k);
  int rows = std::min(west_pipe.exit_row, k_pipe.exit_row);
  if (kind == AlignKind::B) rows = std::min(rows, cutoff_row(pd.permutation().inverse(), k, pi));
  std::vector<Position> out;
  for (int i = 1; i <= rows; ++i) {
    const int cols = std::min(west_pipe.reach_in_row(i), k_pipe.reach_in_row(i));
    for (int j = 1; j <= cols; ++j) out.push_back({i, j});
  }
  return out;
}

MarkedPipeDream phi_step(const MarkedPipeDream& mpd, int k, AlignKind kind, const Permutation& pi) {
  detail::require(is_aligned(mpd, k, kind, pi),
                   describe(mpd) + " is not (" + std::string(to_string(kind)) + "," + std::to_string(k) + ")-aligned");
  // The swap is taken when it lands on an aligned pair. This is what the
  // worked chains and the invertibility argument both require; asking the
  // slid pair itself to be aligned breaks the first step of the type A chain.
  auto next = slide(mpd);
  if (is_swappable(next.pd(), next.mark())) {
    auto swapped = swap(next);
    if (is_aligned(swapped, k, kind, pi)) next = std::move(swapped);
  }
  if constexpr (kCrossChecks) {
    const auto before = mpd.labels();
    const auto after = next.labels();
    detail::ensure(after.west <= before.west, "phi step increased the west label of the mark");
    detail::ensure(after.south != k, "phi step put pipe k south of the mark");
    const auto s0 = sigma(mpd, k, kind, pi);
    const auto s1 = sigma(next, k, kind, pi);
    detail::ensure(s1.size() < s0.size() && std::includes(s0.begin(), s0.end(), s1.begin(), s1.end()),
                   "phi step did not shrink sigma");
  }
  return next;
}

Phi0Result phi0(const MarkedPipeDream& mpd, const Permutation& pi) {
  detail::require(classify(mpd, pi) == MarkClass::P0, describe(mpd) + " is not in P0");
  const auto t = mpd.labels();
  const auto cover = Transposition::make(t.west, t.south);
  auto q = mpd.pd().toggled(mpd.mark());
  detail::ensure(q.permutation() == cover * mpd.pd().permutation(), "phi0 result has the wrong permutation");
  detail::ensure(leq_weak(q.permutation(), pi), "phi0 result escapes the weak interval below pi");
  return {std::move(q), cover};
}

MarkedPipeDream phi0_inverse(const PipeDream& q, Transposition t) {
  const auto c = crossing_of(q, t.a, t.b);
  detail::require(c.has_value(), "pipes " + std::to_string(t.a) + " and " + std::to_string(t.b) + " do not cross");
  auto p = q.toggled(*c);
  detail::ensure(t * p.permutation() == q.permutation(), "uncrossing did not undo the transposition");
  return MarkedPipeDream(std::move(p), *c);
}

PhiTrace phi(const MarkedPipeDream& mpd, const Permutation& pi) {
  const auto cls = classify(mpd, pi);
  if (cls == MarkClass::P0) {
    auto r = phi0(mpd, pi);
    return PhiTrace{.kind = cls, .k = 0, .input = mpd, .steps = {mpd}, .result = std::move(r.result), .cover = r.cover};
  }

  const auto kind = cls == MarkClass::PA ? AlignKind::A : AlignKind::B;
  const auto labels = mpd.labels();
  const int k = kind == AlignKind::A ? labels.west : labels.south;
  auto start = kind == AlignKind::A ? swap(mpd) : mpd;
  detail::ensure(is_aligned(start, k, kind, pi), describe(start) + " starts a chain but is not aligned");

  const auto cap = sigma(start, k, kind, pi).size();
  std::vector<MarkedPipeDream> steps{start};
  do {
    steps.push_back(phi_step(steps.back(), k, kind, pi));
    detail::ensure(steps.size() - 1 <= cap, "phi chain outran its sigma bound");
  } while (is_aligned(steps.back(), k, kind, pi));

  const auto& last = steps.back();
  detail::ensure(is_p0_pair(last, pi), describe(last) + " ends a chain outside P0");
  auto r = phi0(last, pi);
  return PhiTrace{
      .kind = cls, .k = k, .input = mpd, .steps = std::move(steps), .result = std::move(r.result), .cover = r.cover};
}

StatisticSets ab_sets(const Permutation& w, Transposition t, const Permutation& pi) {
  const auto tw = t * w;
  detail::require(length(tw) == length(w) + 1, to_string(tw) + " does not cover " + to_string(w));
  detail::require(is_dominant(pi), to_string(pi) + " is not dominant");
  detail::require(leq_weak(tw, pi), to_string(tw) + " is not below " + to_string(pi) + " in weak order");
  const auto w_inv = w.inverse();
  const auto v = pi * w_inv;
  const int bound = std::max({w.size(), pi.size(), t.b});
  StatisticSets out;
  for (int k = t.b + 1; k <= bound; ++k) {
    if (w_inv(t.a) < w_inv(k) && w_inv(k) < w_inv(t.b)) out.A.push_back(k);
    if (v(t.b) < v(k) && v(k) < v(t.a)) out.B.push_back(k);
  }
  return out;
}

Monomial marked_weight(const MarkedPipeDream& mpd, const DominatedSet& dominated) {
  const int row = mpd.mark().i;
  return padded_weight(mpd.pd(), dominated).shifted_y(row, -1).shifted_x(row, 1);
}

MarkedPipeDream phi_step_inverse(const MarkedPipeDream& mpd, int k, AlignKind kind, const Permutation& pi,
                                 const StatisticSets& stats) {
  const auto& q_pd = mpd.pd();
  const auto q = mpd.mark();
  const auto& members = kind == AlignKind::A ? stats.A : stats.B;

  std::optional<MarkedPipeDream> candidate;
  if (is_p0_pair(mpd, pi) && contains(members, k)) {
    candidate.emplace(q_pd, unslide(q_pd, q));
  } else if (is_aligned(mpd, k, kind, pi) && mpd.labels().south != k) {
    if (is_swappable(q_pd, q)) {
      const auto swapped = swap(mpd);
      const auto p = swapped.mark();
      const bool northwest = weakly_northwest(p, swapped.pd().pipe(k)) &&
                             (kind == AlignKind::A ||
                              p.i <= cutoff_row(swapped.pd().permutation().inverse(), k, pi));
      if (northwest)
        candidate.emplace(swapped.pd(), unslide(swapped.pd(), p));
      else
        candidate.emplace(q_pd, unslide(q_pd, q));
    } else {
      candidate.emplace(q_pd, unslide(q_pd, q));
    }
  } else {
    detail::require(false, describe(mpd) + " has no aligned preimage for k = " + std::to_string(k));
  }

  detail::ensure(is_aligned(*candidate, k, kind, pi), describe(*candidate) + " is an unaligned preimage");
  detail::ensure(phi_step(*candidate, k, kind, pi) == mpd, describe(*candidate) + " does not step back to the input");
  return *candidate;
}

}  // namespace schubert
