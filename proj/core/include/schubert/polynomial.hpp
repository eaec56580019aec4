#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

/// x^alpha y^beta over the variable families x_1, x_2, ... and y_1, y_2, ...
///
/// Exponents are stored as (index, exponent) pairs sorted by index with no
/// zero exponents. Ordering is lexicographic on (x pairs, y pairs), which is
/// the canonical term order for printing and serialization.
class Monomial {
 public:
  using Exponents = std::vector<std::pair<int, int>>;

  Monomial() = default;
  static Monomial x(int index, int exponent = 1);
  static Monomial y(int index, int exponent = 1);
  /// Throws PreconditionError on nonpositive indices or negative exponents.
  static Monomial from_exponents(Exponents x, Exponents y);

  int x_exponent(int index) const noexcept;
  int y_exponent(int index) const noexcept;
  const Exponents& x_exponents() const noexcept { return x_; }
  const Exponents& y_exponents() const noexcept { return y_; }
  int x_degree() const noexcept;
  int y_degree() const noexcept;
  bool is_one() const noexcept { return x_.empty() && y_.empty(); }

  /// Adds `delta` to one exponent; the result must stay nonnegative.
  Monomial shifted_x(int index, int delta) const;
  Monomial shifted_y(int index, int delta) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  Exponents x_;
  Exponents y_;
};

/// "x1^2*x2*y3"; "1" for the empty monomial.
std::string to_string(const Monomial& m);

/// Exact sparse polynomial in Z[x_1, x_2, ...; y_1, y_2, ...] with
/// arbitrary precision coefficients. No zero coefficients are stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, mpz_class>;

  Polynomial() = default;
  Polynomial(const Monomial& m, const mpz_class& coeff = 1);  // NOLINT(google-explicit-constructor)

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  mpz_class coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const mpz_class& coeff);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const mpz_class& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const mpz_class& s) { return a *= s; }
  friend Polynomial operator*(const mpz_class& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Canonical text: terms in ascending monomial order joined by " + " (or
/// " - " for negative coefficients), unit coefficients omitted, "0" for zero.
std::string to_string(const Polynomial& f);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

/// Delta = sum_i x_i d/dy_i.
Polynomial delta_op(const Polynomial& f);
/// Nabla = sum_i y_i d/dx_i.
Polynomial nabla_op(const Polynomial& f);
/// H = [Delta, Nabla].
Polynomial h_op(const Polynomial& f);

}  // namespace schubert
