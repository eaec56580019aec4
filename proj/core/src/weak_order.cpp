#include "schubert/weak_order.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "schubert/error.hpp"

namespace schubert {

int length(const Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j) count += w(i) > w(j) ? 1 : 0;
  return count;
}

std::vector<Position> inversions(const Permutation& w) {
  std::vector<Position> out;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) out.push_back({i, j});
  return out;
}

std::vector<Position> coinversions(const Permutation& w, int bound) {
  detail::require(bound >= 1, "coinversions needs a bound >= 1");
  std::vector<Position> out;
  for (int i = 1; i <= bound; ++i)
    for (int j = i + 1; j <= bound; ++j)
      if (w(i) < w(j)) out.push_back({i, j});
  return out;
}

std::vector<Position> diagram(const Permutation& w) {
  std::vector<Position> out;
  for (const auto& [i, j] : inversions(w)) out.push_back({i, w(j)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Position> diagram_by_formula(const Permutation& w) {
  const auto w_inv = w.inverse();
  std::vector<Position> out;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = 1; j <= w.size(); ++j)
      if (i < w_inv(j) && j < w(i)) out.push_back({i, j});
  return out;
}

std::vector<int> code(const Permutation& w) {
  std::vector<int> out(static_cast<std::size_t>(w.size()), 0);
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(j) < w(i)) ++out[static_cast<std::size_t>(i - 1)];
  return out;
}

Permutation dom(const Partition& lambda) {
  const int n = lambda.length() + lambda[1] + 1;
  std::vector<int> unused(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) unused[static_cast<std::size_t>(v - 1)] = v;
  std::vector<int> window;
  for (int i = 1; i <= n; ++i) {
    const auto pick = unused.begin() + lambda[i];
    window.push_back(*pick);
    unused.erase(pick);
  }
  auto pi = Permutation::from_one_line(std::move(window));
  if constexpr (kCrossChecks) {
    detail::ensure(has_partition_code(pi), "dom produced a non-dominant permutation");
  }
  return pi;
}

bool avoids_132(const Permutation& w) {
  const int n = w.size();
  // For each middle index b, a 132 pattern needs some a < b with w(a) < w(b)
  // and some c > b with w(a) < w(c) < w(b); take a with the smallest value.
  int prefix_min = n + 1;
  for (int b = 1; b <= n; ++b) {
    if (prefix_min < w(b)) {
      for (int c = b + 1; c <= n; ++c)
        if (prefix_min < w(c) && w(c) < w(b)) return false;
    }
    prefix_min = std::min(prefix_min, w(b));
  }
  return true;
}

bool has_partition_code(const Permutation& w) {
  const auto c = code(w);
  return std::is_sorted(c.rbegin(), c.rend());
}

bool is_dominant(const Permutation& w) {
  const bool result = avoids_132(w);
  if constexpr (kCrossChecks) {
    detail::ensure(result == has_partition_code(w),
                   "132-avoidance and partition-code characterizations disagree for " + to_string(w));
  }
  return result;
}

Partition shape(const Permutation& pi) {
  detail::require(is_dominant(pi), to_string(pi) + " is not dominant");
  return Partition(code(pi));
}

bool leq_weak(const Permutation& w, const Permutation& u) {
  bool result = true;
  for (int i = 1; i <= w.size() && result; ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j) && !(u(i) > u(j))) {
        result = false;
        break;
      }
  if constexpr (kCrossChecks) {
    detail::ensure(result == leq_weak_by_inverse(w, u),
                   "weak order criteria disagree on " + to_string(w) + " vs " + to_string(u));
  }
  return result;
}

bool leq_weak_by_inverse(const Permutation& w, const Permutation& u) {
  const auto w_inv = w.inverse();
  const auto u_w_inv = u * w_inv;
  const int n = std::max(w.size(), u.size());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (is_inversion(w_inv, i, j) && !is_coinversion(u_w_inv, i, j)) return false;
  return true;
}

std::vector<Transposition> bruhat_covers_up(const Permutation& w, int bound) {
  detail::require(bound >= w.size(), "bruhat_covers_up bound is smaller than the window");
  const int target = length(w) + 1;
  std::vector<Transposition> out;
  for (int a = 1; a <= bound; ++a)
    for (int b = a + 1; b <= bound; ++b) {
      const auto t = Transposition{a, b};
      if (length(t * w) == target) out.push_back(t);
    }
  return out;
}

std::vector<Transposition> covers_below_pi(const Permutation& w, const Permutation& pi) {
  detail::require(is_dominant(pi), to_string(pi) + " is not dominant");
  detail::require(leq_weak(w, pi), to_string(w) + " is not below " + to_string(pi) + " in weak order");
  const auto w_inv = w.inverse();
  std::vector<Transposition> out;
  for (const auto& t : bruhat_covers_up(w, std::max(w.size(), pi.size()))) {
    const bool below = is_inversion(pi, w_inv(t.a), w_inv(t.b));
    if constexpr (kCrossChecks) {
      detail::ensure(below == leq_weak(t * w, pi), "cover test disagrees with the weak order");
    }
    if (below) out.push_back(t);
  }
  return out;
}

std::vector<std::pair<int, Permutation>> weak_lower_covers(const Permutation& w) {
  const auto w_inv = w.inverse();
  std::vector<std::pair<int, Permutation>> out;
  for (int k = 1; k < w.size(); ++k)
    if (w_inv(k) > w_inv(k + 1)) out.emplace_back(k, Transposition::simple(k) * w);
  return out;
}

std::vector<Permutation> weak_lower_interval(const Permutation& pi) {
  std::set<Permutation> seen{pi};
  std::deque<Permutation> queue{pi};
  while (!queue.empty()) {
    const auto w = queue.front();
    queue.pop_front();
    for (auto& [k, lower] : weak_lower_covers(w))
      if (seen.insert(lower).second) queue.push_back(std::move(lower));
  }
  return {seen.begin(), seen.end()};
}

std::vector<Permutation> dominant_permutations(int n) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(n))
    if (is_dominant(w)) out.push_back(std::move(w));
  return out;
}

}  // namespace schubert
