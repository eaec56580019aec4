#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "schubert/enumerate.hpp"
#include "schubert/error.hpp"
#include "schubert/padded.hpp"
#include "schubert/verify.hpp"
#include "schubert/weak_order.hpp"

using namespace schubert;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

Monomial x(int i, int e = 1) { return Monomial::x(i, e); }
Monomial y(int i, int e = 1) { return Monomial::y(i, e); }

}  // namespace

TEST_CASE("monomials") {
  const auto m = x(1, 2) * x(3) * y(2);
  CHECK(m.x_exponent(1) == 2);
  CHECK(m.x_exponent(2) == 0);
  CHECK(m.y_exponent(2) == 1);
  CHECK(m.x_degree() == 3);
  CHECK(m.y_degree() == 1);
  CHECK(to_string(m) == "x1^2*x3*y2");
  CHECK(to_string(Monomial{}) == "1");
  CHECK(Monomial{}.is_one());
  CHECK(m.shifted_y(2, -1) == x(1, 2) * x(3));
  CHECK_THROWS_AS(m.shifted_x(2, -1), PreconditionError);
  CHECK(x(1, 0).is_one());
}

TEST_CASE("polynomial arithmetic and text") {
  Polynomial f = Polynomial(x(1)) + Polynomial(y(1)) * mpz_class(3);
  CHECK(f.size() == 2);
  CHECK(f.coefficient(y(1)) == 3);
  CHECK(f.coefficient(x(2)) == 0);
  CHECK(to_string(f) == "3*y1 + x1");
  CHECK(to_string(f - f) == "0");
  CHECK((f - f).is_zero());
  CHECK(to_string(Polynomial(x(2)) - Polynomial(x(1)) * mpz_class(2)) == "-2*x1 + x2");
  CHECK(to_string(Polynomial(Monomial{}, 5)) == "5");
  std::ostringstream os;
  os << f;
  CHECK(os.str() == to_string(f));

  // Coefficients are exact beyond 64 bits.
  Polynomial big(x(1), mpz_class("123456789012345678901234567890"));
  CHECK(to_string(big) == "123456789012345678901234567890*x1");
}

TEST_CASE("the raising, lowering and weight operators") {
  CHECK(delta_op(Polynomial(y(1, 2))) == Polynomial(x(1) * y(1), 2));
  CHECK(nabla_op(Polynomial(x(1) * x(2))) == Polynomial(x(2) * y(1)) + Polynomial(x(1) * y(2)));
  CHECK(delta_op(Polynomial(x(1))).is_zero());
  CHECK(h_op(Polynomial(x(1) * y(2))).is_zero());
  CHECK(h_op(Polynomial(x(1, 2))) == Polynomial(x(1, 2), 2));
  CHECK(h_op(Polynomial(y(3))) == Polynomial(y(3), -1));

  for (const auto& m : v_lambda_basis(Partition({2, 1}))) {
    const Polynomial f(m);
    CHECK(h_op(f) == h_by_degree(f));
    CHECK(check_sl2(f).ok());
  }
}

TEST_CASE("Schubert polynomials match divided differences") {
  CHECK(to_string(schubert::schubert(P("1,3,2"))) == "x1 + x2");
  CHECK(to_string(schubert::schubert(P("2,1"))) == "x1");
  CHECK(to_string(schubert::schubert(Permutation{})) == "1");
  for (int n = 1; n <= 5; ++n)
    for (const auto& w : all_permutations(n))
      CHECK(schubert::schubert(w) == oracle::to_polynomial(oracle::schubert_by_divided_differences(w.one_line(n))));
}

TEST_CASE("padded Schubert polynomials") {
  const auto f = padded_schubert(P("1,4,3,2"), P("3,4,2,1"));
  CHECK(to_string(f) ==
        "x1*x2*x3*y1*y2 + x1*x2^2*y1*y3 + x1^2*x2*y2*y3 + x1^2*x3*y2^2 + x2^2*x3*y1^2");
  CHECK(in_V_lambda(f, Partition({2, 2, 1})));
  CHECK_FALSE(in_V_lambda(f, Partition({2, 2})));
  CHECK(to_string(padded_schubert(Permutation{}, P("2,1"))) == "y1");
  CHECK(to_string(padded_schubert(P("2,1"), P("2,1"))) == "x1");
  CHECK_THROWS_AS(padded_schubert(P("3,1,2"), P("2,3,1")), PreconditionError);
  CHECK_THROWS_AS(padded_schubert(P("2,1"), P("1,3,2")), PreconditionError);

  for (int n = 1; n <= 5; ++n)
    for (const auto& pi : dominant_permutations(n)) {
      const auto lambda = shape(pi);
      for (const auto& w : weak_lower_interval(pi)) {
        const auto padded = padded_schubert(w, pi);
        CHECK(padded == oracle::homogenize(oracle::schubert_by_divided_differences(w.one_line(n)), lambda));
        CHECK(padded == padded_schubert_by_homogenization(w, pi));
        CHECK(in_V_lambda(padded, lambda));
      }
    }
}

TEST_CASE("padded weights") {
  const auto pi = P("3,4,2,1");
  const auto pd = PipeDream::from_crosses({{2, 1}, {2, 2}, {3, 1}});
  const auto d = dominated_positions(pd, pi);
  CHECK(padded_weight(pd, d) == x(2, 2) * x(3) * y(1, 2));
  const std::vector<Position> cells{{1, 1}, {1, 4}, {3, 2}};
  CHECK(row_monomial(cells) == x(1, 2) * x(3));
  CHECK(x_power(Partition({2, 1})) == x(1, 2) * x(2));
  CHECK(y_power(Partition({2, 1})) == y(1, 2) * y(2));
}

TEST_CASE("the V_lambda basis") {
  CHECK(v_lambda_basis(Partition{}).size() == 1);
  for (const auto& lambda : partitions_of(6)) {
    std::size_t expected = 1;
    for (int part : lambda.parts()) expected *= static_cast<std::size_t>(part + 1);
    const auto basis = v_lambda_basis(lambda);
    CHECK(basis.size() == expected);
    for (const auto& m : basis) CHECK(in_V_lambda(Polynomial(m), lambda));
  }
}
