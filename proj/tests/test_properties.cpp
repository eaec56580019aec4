#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "schubert/enumerate.hpp"
#include "schubert/padded.hpp"
#include "schubert/verify.hpp"
#include "schubert/weak_order.hpp"

using namespace schubert;

namespace {

void check_sweep(const SweepResult& r, std::int64_t min_cases) {
  INFO(r.kind);
  CHECK(r.cases >= min_cases);
  if (!r.ok()) {
    const auto& c = r.failures.front();
    INFO(c.w << " / " << c.pi << ": " << c.message);
    CHECK(r.ok());
  }
}

}  // namespace

TEST_CASE("weak pairs") {
  // Each pi contributes its whole weak interval.
  std::size_t expected = 0;
  for (const auto& pi : dominant_permutations(4)) expected += weak_lower_interval(pi).size();
  CHECK(weak_pairs(4).size() == expected);
  CHECK(weak_pairs(3).size() == 15);
}

TEST_CASE("operator identities through rank 5") {
  const auto pairs = weak_pairs(5);
  check_sweep(sweep_delta(pairs), 945);
  check_sweep(sweep_nabla(pairs), 945);
}

TEST_CASE("single identity reports") {
  const auto r = verify_delta(parse_permutation("1,4,3,2"), parse_permutation("3,4,2,1"));
  CHECK(r.ok());
  CHECK(r.lhs == r.rhs);
  CHECK(r.lhs == delta_op(padded_schubert(r.w, r.pi)));
  int total = 0;
  for (const auto& c : r.covers) {
    CHECK(c.coeff == c.stats.multiplicity());
    total += c.coeff;
  }
  CHECK(total > 0);

  const auto n = verify_nabla(parse_permutation("1,4,3,2"), parse_permutation("3,4,2,1"));
  CHECK(n.ok());
  for (const auto& c : n.covers) CHECK(c.coeff == c.t.a);
}

TEST_CASE("sl2 relations on small V_lambda") {
  std::vector<Partition> shapes;
  for (int n = 0; n <= 4; ++n)
    for (const auto& lambda : partitions_of(n)) shapes.push_back(lambda);
  check_sweep(sweep_sl2(shapes), 1);
}

TEST_CASE("fiber law, weights and dominated sets through rank 4") {
  const auto pairs = weak_pairs(4);
  check_sweep(sweep_fibers(pairs), 1);
  check_sweep(sweep_weights(pairs), 1);
  check_sweep(sweep_dominated(pairs), 1);
  check_sweep(sweep_enum_oracle(5), 120);
}

TEST_CASE("chain properties on every marked pair through rank 4") {
  for (const auto& [w, pi] : weak_pairs(4)) {
    std::map<PipeDream, int> hits;
    for (const auto& mpd : delta_pairs(w, pi)) {
      const auto trace = phi(mpd, pi);
      CHECK(trace.result.permutation() == trace.cover * w);
      CHECK(length(trace.result.permutation()) == length(w) + 1);
      CHECK(leq_weak(trace.result.permutation(), pi));
      ++hits[trace.result];

      // The marked weight matches the result's weight, each with its own
      // dominated set.
      CHECK(marked_weight(mpd, dominated_positions(mpd.pd(), pi)) ==
            padded_weight(trace.result, dominated_positions(trace.result, pi)));

      if (trace.kind == MarkClass::P0) continue;
      const auto kind = trace.kind == MarkClass::PA ? AlignKind::A : AlignKind::B;
      const auto stats = ab_sets(w, trace.cover, pi);
      const auto& members = kind == AlignKind::A ? stats.A : stats.B;
      CHECK(std::binary_search(members.begin(), members.end(), trace.k));
      for (std::size_t i = 0; i + 1 < trace.steps.size(); ++i) {
        const auto& before = trace.steps[i];
        const auto& after = trace.steps[i + 1];
        CHECK(after.labels().west <= before.labels().west);
        CHECK(after.labels().south != trace.k);
        const auto s0 = sigma(before, trace.k, kind, pi);
        const auto s1 = sigma(after, trace.k, kind, pi);
        CHECK(s1.size() < s0.size());
        CHECK(std::includes(s0.begin(), s0.end(), s1.begin(), s1.end()));
        CHECK(phi_step_inverse(after, trace.k, kind, pi, stats) == before);
      }
    }
    // Each Q over a cover is hit 1 + |A| + |B| times.
    for (const auto& [q, count] : hits) {
      const auto v = q.permutation() * w.inverse();
      int a = 0;
      int b = 0;
      for (int i = 1; i <= v.size(); ++i)
        if (v(i) != i) (a == 0 ? a : b) = i;
      CHECK(count == ab_sets(w, Transposition{a, b}, pi).multiplicity());
    }
  }
}
