#pragma once

#include <vector>

#include "schubert/partition.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

// Inversion combinatorics. Pairs are reported as Position{i, j} with i < j.

inline bool is_inversion(const Permutation& w, int i, int j) { return i < j && w(i) > w(j); }
inline bool is_coinversion(const Permutation& w, int i, int j) { return i < j && w(i) < w(j); }

int length(const Permutation& w);
std::vector<Position> inversions(const Permutation& w);
/// coInv(w) restricted to pairs i < j <= bound. Throws if bound < 1.
std::vector<Position> coinversions(const Permutation& w, int bound);

/// D(w) = {(i, w(j)) : (i, j) in Inv(w)}, sorted.
std::vector<Position> diagram(const Permutation& w);
/// D(w) = {(i, j) : i < w^{-1}(j), j < w(i)}, sorted. Independent route to `diagram`.
std::vector<Position> diagram_by_formula(const Permutation& w);

/// Lehmer code c_i = #{j > i : w(j) < w(i)} over the window.
std::vector<int> code(const Permutation& w);

/// The dominant permutation whose code is lambda.
Permutation dom(const Partition& lambda);

/// 132-avoidance. With cross checks on, also compares against the
/// "code is a partition" characterization.
bool is_dominant(const Permutation& w);
bool avoids_132(const Permutation& w);
bool has_partition_code(const Permutation& w);
/// The partition lambda with pi = dom(lambda). Throws unless pi is dominant.
Partition shape(const Permutation& pi);

/// Left weak order by inversion containment Inv(w) ⊆ Inv(u).
bool leq_weak(const Permutation& w, const Permutation& u);
/// Left weak order by Inv(w^{-1}) ⊆ coInv(u w^{-1}).
bool leq_weak_by_inverse(const Permutation& w, const Permutation& u);

/// All t_ab with b <= bound and l(t_ab w) = l(w) + 1.
std::vector<Transposition> bruhat_covers_up(const Permutation& w, int bound);

/// The covers w ⋖ t_ab w with t_ab w <=_L pi, found through the inversion
/// test (w^{-1}(a), w^{-1}(b)) in Inv(pi). Requires pi dominant and w <=_L pi.
std::vector<Transposition> covers_below_pi(const Permutation& w, const Permutation& pi);

/// Permutations s_k w with s_k w ⋖_L w, paired with k.
std::vector<std::pair<int, Permutation>> weak_lower_covers(const Permutation& w);

/// [e, pi]_L, sorted.
std::vector<Permutation> weak_lower_interval(const Permutation& pi);

/// The 132-avoiding permutations of [n].
std::vector<Permutation> dominant_permutations(int n);

}  // namespace schubert
