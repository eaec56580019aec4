#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// A cell of the positive quadrant in matrix coordinates: row `i` counted
/// from the top, column `j` from the left. Also used for index pairs such as
/// the members of an inversion set.
struct Position {
  int i = 1;
  int j = 1;

  friend auto operator<=>(const Position&, const Position&) = default;
};

std::ostream& operator<<(std::ostream& os, const Position& p);

/// The transposition swapping `a < b`.
struct Transposition {
  int a = 1;
  int b = 2;

  /// Throws PreconditionError unless 1 <= a < b.
  static Transposition make(int a, int b);
  static Transposition simple(int k) { return make(k, k + 1); }

  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

std::ostream& operator<<(std::ostream& os, const Transposition& t);

/// A permutation of the positive integers with finite support.
///
/// Stored as its minimal one-line window w(1)..w(n): the identity has an
/// empty window and otherwise w(n) != n. Arguments beyond the window are
/// fixed points, so every operation is total on all of S_infinity.
class Permutation {
 public:
  Permutation() = default;

  /// Builds from one-line notation; `values` must be a bijection of [n].
  static Permutation from_one_line(std::vector<int> values);
  static Permutation transposition(int a, int b);
  static Permutation transposition(Transposition t) { return transposition(t.a, t.b); }

  int operator()(int k) const noexcept {
    return k >= 1 && k <= size() ? window_[static_cast<std::size_t>(k - 1)] : k;
  }

  /// Length of the minimal window (0 for the identity).
  int size() const noexcept { return static_cast<int>(window_.size()); }
  bool is_identity() const noexcept { return window_.empty(); }

  std::span<const int> one_line() const noexcept { return window_; }
  /// One-line notation padded with fixed points to length max(n, size()).
  std::vector<int> one_line(int n) const;

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> canonical) : window_(std::move(canonical)) {}

  std::vector<int> window_;
};

/// (u * w)(k) = u(w(k)): apply w first.
Permutation compose(const Permutation& u, const Permutation& w);
inline Permutation operator*(const Permutation& u, const Permutation& w) { return compose(u, w); }
Permutation operator*(const Transposition& t, const Permutation& w);

/// Comma separated one-line notation, "1" for the identity.
std::string to_string(const Permutation& w);
std::ostream& operator<<(std::ostream& os, const Permutation& w);

/// Parses "2,1,3,6,7,5,4". Throws PreconditionError on malformed input.
Permutation parse_permutation(std::string_view text);

/// Every permutation of [n] in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace schubert

template <>
struct std::hash<schubert::Permutation> {
  std::size_t operator()(const schubert::Permutation& w) const noexcept;
};
