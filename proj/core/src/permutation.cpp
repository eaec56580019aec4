#include "schubert/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

namespace {

void trim_fixed_tail(std::vector<int>& window) {
  while (!window.empty() && window.back() == static_cast<int>(window.size())) window.pop_back();
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Position& p) {
  return os << '(' << p.i << ',' << p.j << ')';
}

Transposition Transposition::make(int a, int b) {
  detail::require(a >= 1 && a < b, "transposition needs 1 <= a < b");
  return Transposition{a, b};
}

std::ostream& operator<<(std::ostream& os, const Transposition& t) {
  return os << "t(" << t.a << ',' << t.b << ')';
}

Permutation Permutation::from_one_line(std::vector<int> values) {
  const auto n = values.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
      throw PreconditionError("one-line notation is not a permutation of [n]");
    seen[static_cast<std::size_t>(v)] = true;
  }
  trim_fixed_tail(values);
  return Permutation(std::move(values));
}

Permutation Permutation::transposition(int a, int b) {
  const auto t = Transposition::make(a, b);
  std::vector<int> window(static_cast<std::size_t>(t.b));
  std::iota(window.begin(), window.end(), 1);
  std::swap(window[static_cast<std::size_t>(t.a - 1)], window[static_cast<std::size_t>(t.b - 1)]);
  return Permutation(std::move(window));
}

std::vector<int> Permutation::one_line(int n) const {
  const int len = std::max(n, size());
  std::vector<int> out(static_cast<std::size_t>(len));
  for (int k = 1; k <= len; ++k) out[static_cast<std::size_t>(k - 1)] = (*this)(k);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(window_.size());
  for (std::size_t k = 0; k < window_.size(); ++k)
    inv[static_cast<std::size_t>(window_[k] - 1)] = static_cast<int>(k + 1);
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& u, const Permutation& w) {
  const int n = std::max(u.size(), w.size());
  std::vector<int> window(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) window[static_cast<std::size_t>(k - 1)] = u(w(k));
  return Permutation::from_one_line(std::move(window));
}

Permutation operator*(const Transposition& t, const Permutation& w) {
  return compose(Permutation::transposition(t), w);
}

std::string to_string(const Permutation& w) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  for (int k = 1; k <= w.size(); ++k) {
    if (k > 1) os << ',';
    os << w(k);
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << to_string(w); }

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    auto token = text.substr(start, comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
      throw PreconditionError("malformed permutation '" + std::string(text) + "'");
    values.push_back(value);
    start = comma + 1;
  }
  return Permutation::from_one_line(std::move(values));
}

std::vector<Permutation> all_permutations(int n) {
  detail::require(n >= 0, "all_permutations needs n >= 0");
  std::vector<int> window(static_cast<std::size_t>(n));
  std::iota(window.begin(), window.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(window));
  } while (std::next_permutation(window.begin(), window.end()));
  return out;
}

}  // namespace schubert

std::size_t std::hash<schubert::Permutation>::operator()(const schubert::Permutation& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int v : w.one_line()) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
  return h;
}
