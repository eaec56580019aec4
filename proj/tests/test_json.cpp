#include <doctest.h>

#include "schubert/enumerate.hpp"
#include "schubert/error.hpp"
#include "schubert/json_io.hpp"
#include "schubert/padded.hpp"
#include "schubert/weak_order.hpp"

using namespace schubert;
using nlohmann::json;

TEST_CASE("pipe dreams round-trip") {
  for (const auto& w : all_permutations(4))
    for (const auto& pd : enumerate(w)) {
      const json j = pd;
      CHECK(pipe_dream_from_json(j) == pd);
      CHECK(pipe_dream_from_json(json::parse(j.dump())) == pd);
    }
  const auto pd = PipeDream::from_crosses({{1, 1}, {1, 2}, {1, 4}, {3, 1}});
  CHECK(json(pd).dump() == R"({"crosses":[[1,1],[1,2],[1,4],[3,1]]})");

  const MarkedPipeDream m(pd, {2, 1});
  CHECK(json(m).dump() == R"({"crosses":[[1,1],[1,2],[1,4],[3,1]],"mark":[2,1]})");
  CHECK(marked_pipe_dream_from_json(json(m)) == m);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(pipe_dream_from_json(json::parse(R"({"crosses":[[1]]})")), PreconditionError);
  CHECK_THROWS_AS(pipe_dream_from_json(json::parse(R"({"cross":[]})")), PreconditionError);
  CHECK_THROWS_AS(pipe_dream_from_json(json::parse(R"({"crosses":[[1,2],[2,1]]})")), PreconditionError);
  CHECK_THROWS_AS(marked_pipe_dream_from_json(json::parse(R"({"crosses":[]})")), PreconditionError);
  CHECK_THROWS_AS(polynomial_from_json(json::parse(R"([{"coeff":1,"x":{"a":1},"y":{}}])")), PreconditionError);
  CHECK_THROWS_AS(polynomial_from_json(json::parse("{}")), PreconditionError);
}

TEST_CASE("polynomials round-trip") {
  for (const auto& pi : dominant_permutations(4))
    for (const auto& w : weak_lower_interval(pi)) {
      const auto f = padded_schubert(w, pi);
      CHECK(polynomial_from_json(json::parse(json(f).dump())) == f);
    }
  const Polynomial big(Monomial::x(2, 3), mpz_class("-99999999999999999999999"));
  const json j = big;
  CHECK(j[0]["coeff"] == "-99999999999999999999999");
  CHECK(polynomial_from_json(j) == big);

  const Polynomial small = Polynomial(Monomial::x(1) * Monomial::y(3), 2);
  CHECK(json(small).dump() == R"([{"coeff":2,"x":{"1":1},"y":{"3":1}}])");
  CHECK(json(Polynomial{}).dump() == "[]");
}

TEST_CASE("phi traces serialize their chain") {
  const MarkedPipeDream seed(PipeDream{}, {1, 1});
  const json j = phi(seed, parse_permutation("2,1"));
  CHECK(j["kind"] == "0");
  CHECK(j["k"] == 0);
  CHECK(j["cover"] == json::array({1, 2}));
  CHECK(j["steps"].size() == 1);
  CHECK(j["result"]["crosses"] == json::parse("[[1,1]]"));
}
