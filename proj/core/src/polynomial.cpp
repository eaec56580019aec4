#include "schubert/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "schubert/error.hpp"

namespace schubert {

namespace {

using Exponents = Monomial::Exponents;

int exponent_of(const Exponents& e, int index) noexcept {
  const auto it = std::lower_bound(e.begin(), e.end(), std::make_pair(index, 0));
  return it != e.end() && it->first == index ? it->second : 0;
}

int degree_of(const Exponents& e) noexcept {
  int d = 0;
  for (const auto& [index, exp] : e) d += exp;
  return d;
}

void shift(Exponents& e, int index, int delta) {
  detail::require(index >= 1, "variable indices are positive");
  auto it = std::lower_bound(e.begin(), e.end(), std::make_pair(index, 0));
  if (it != e.end() && it->first == index) {
    it->second += delta;
    detail::require(it->second >= 0, "negative exponent");
    if (it->second == 0) e.erase(it);
  } else {
    detail::require(delta >= 0, "negative exponent");
    if (delta > 0) e.insert(it, {index, delta});
  }
}

Exponents normalized(Exponents e) {
  std::sort(e.begin(), e.end());
  Exponents out;
  for (const auto& [index, exp] : e) {
    detail::require(index >= 1, "variable indices are positive");
    detail::require(exp >= 0, "negative exponent");
    if (!out.empty() && out.back().first == index)
      out.back().second += exp;
    else
      out.emplace_back(index, exp);
  }
  std::erase_if(out, [](const auto& pe) { return pe.second == 0; });
  return out;
}

Exponents merged(const Exponents& a, const Exponents& b) {
  Exponents out = a;
  for (const auto& [index, exp] : b) shift(out, index, exp);
  return out;
}

void append_factors(std::ostringstream& os, char var, const Exponents& e, bool& first) {
  for (const auto& [index, exp] : e) {
    if (!first) os << '*';
    first = false;
    os << var << index;
    if (exp > 1) os << '^' << exp;
  }
}

}  // namespace

Monomial Monomial::x(int index, int exponent) { return from_exponents({{index, exponent}}, {}); }
Monomial Monomial::y(int index, int exponent) { return from_exponents({}, {{index, exponent}}); }

Monomial Monomial::from_exponents(Exponents x, Exponents y) {
  Monomial m;
  m.x_ = normalized(std::move(x));
  m.y_ = normalized(std::move(y));
  return m;
}

int Monomial::x_exponent(int index) const noexcept { return exponent_of(x_, index); }
int Monomial::y_exponent(int index) const noexcept { return exponent_of(y_, index); }
int Monomial::x_degree() const noexcept { return degree_of(x_); }
int Monomial::y_degree() const noexcept { return degree_of(y_); }

Monomial Monomial::shifted_x(int index, int delta) const {
  Monomial m = *this;
  shift(m.x_, index, delta);
  return m;
}

Monomial Monomial::shifted_y(int index, int delta) const {
  Monomial m = *this;
  shift(m.y_, index, delta);
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.x_ = merged(a.x_, b.x_);
  m.y_ = merged(a.y_, b.y_);
  return m;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  append_factors(os, 'x', m.x_exponents(), first);
  append_factors(os, 'y', m.y_exponents(), first);
  return os.str();
}

Polynomial::Polynomial(const Monomial& m, const mpz_class& coeff) { add_term(m, coeff); }

mpz_class Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    const mpz_class magnitude = abs(c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (magnitude == 1) {
      os << to_string(m);
    } else {
      os << magnitude.get_str();
      if (!m.is_one()) os << '*' << to_string(m);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

Polynomial delta_op(const Polynomial& f) {
  Polynomial out;
  for (const auto& [m, c] : f.terms())
    for (const auto& [index, exp] : m.y_exponents())
      out.add_term(m.shifted_y(index, -1).shifted_x(index, 1), c * exp);
  return out;
}

Polynomial nabla_op(const Polynomial& f) {
  Polynomial out;
  for (const auto& [m, c] : f.terms())
    for (const auto& [index, exp] : m.x_exponents())
      out.add_term(m.shifted_x(index, -1).shifted_y(index, 1), c * exp);
  return out;
}

Polynomial h_op(const Polynomial& f) { return delta_op(nabla_op(f)) - nabla_op(delta_op(f)); }

}  // namespace schubert
