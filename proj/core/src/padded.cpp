#include "schubert/padded.hpp"

#include <algorithm>
#include <set>

#include "schubert/enumerate.hpp"
#include "schubert/error.hpp"
#include "schubert/weak_order.hpp"

namespace schubert {

namespace {

void require_padded_domain(const Permutation& w, const Permutation& pi) {
  detail::require(is_dominant(pi), to_string(pi) + " is not dominant");
  detail::require(leq_weak(w, pi), to_string(w) + " is not below " + to_string(pi) + " in weak order");
}

Monomial::Exponents partition_exponents(const Partition& lambda) {
  Monomial::Exponents e;
  for (int i = 1; i <= lambda.length(); ++i) e.emplace_back(i, lambda[i]);
  return e;
}

}  // namespace

Monomial row_monomial(std::span<const Position> cells) {
  Monomial::Exponents e;
  for (const auto& p : cells) e.emplace_back(p.i, 1);
  return Monomial::from_exponents(std::move(e), {});
}

Monomial x_power(const Partition& lambda) { return Monomial::from_exponents(partition_exponents(lambda), {}); }
Monomial y_power(const Partition& lambda) { return Monomial::from_exponents({}, partition_exponents(lambda)); }

Monomial padded_weight(const PipeDream& pd, const DominatedSet& dominated) {
  Monomial::Exponents x;
  Monomial::Exponents y;
  for (const auto& p : pd.crosses()) x.emplace_back(p.i, 1);
  for (const auto& p : dominated.positions())
    if (!pd.is_cross(p)) y.emplace_back(p.i, 1);
  return Monomial::from_exponents(std::move(x), std::move(y));
}

Polynomial schubert(const Permutation& w) {
  Polynomial out;
  for (const auto& pd : enumerate(w)) out.add_term(row_monomial(pd.crosses()), 1);
  return out;
}

Polynomial padded_schubert(const Permutation& w, const Permutation& pi) {
  require_padded_domain(w, pi);
  Polynomial out;
  for (const auto& pd : enumerate(w)) out.add_term(padded_weight(pd, dominated_positions(pd, pi)), 1);
  return out;
}

Polynomial padded_schubert_by_homogenization(const Permutation& w, const Permutation& pi) {
  require_padded_domain(w, pi);
  const auto lambda = shape(pi);
  const auto plain = schubert(w);
  Polynomial out;
  for (const auto& [m, c] : plain.terms()) {
    Monomial::Exponents y;
    for (int i = 1; i <= lambda.length(); ++i) {
      const int pad = lambda[i] - m.x_exponent(i);
      detail::require(pad >= 0, "Schubert monomial does not divide x^lambda");
      y.emplace_back(i, pad);
    }
    for (const auto& [index, exp] : m.x_exponents())
      detail::require(index <= lambda.length(), "Schubert monomial does not divide x^lambda");
    out.add_term(Monomial::from_exponents(m.x_exponents(), std::move(y)), c);
  }
  return out;
}

bool in_V_lambda(const Polynomial& f, const Partition& lambda) {
  for (const auto& [m, c] : f.terms()) {
    std::set<int> indices;
    for (const auto& [index, exp] : m.x_exponents()) indices.insert(index);
    for (const auto& [index, exp] : m.y_exponents()) indices.insert(index);
    for (int i = 1; i <= lambda.length(); ++i) indices.insert(i);
    for (int i : indices)
      if (m.x_exponent(i) + m.y_exponent(i) != lambda[i]) return false;
  }
  return true;
}

std::vector<Monomial> v_lambda_basis(const Partition& lambda) {
  std::vector<Monomial> out;
  std::vector<int> alpha(static_cast<std::size_t>(lambda.length()), 0);
  while (true) {
    Monomial::Exponents x;
    Monomial::Exponents y;
    for (int i = 1; i <= lambda.length(); ++i) {
      x.emplace_back(i, alpha[static_cast<std::size_t>(i - 1)]);
      y.emplace_back(i, lambda[i] - alpha[static_cast<std::size_t>(i - 1)]);
    }
    out.push_back(Monomial::from_exponents(std::move(x), std::move(y)));
    // Odometer over 0 <= alpha_i <= lambda_i.
    int i = 0;
    while (i < lambda.length() && alpha[static_cast<std::size_t>(i)] == lambda[i + 1]) alpha[static_cast<std::size_t>(i++)] = 0;
    if (i == lambda.length()) break;
    ++alpha[static_cast<std::size_t>(i)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace schubert
