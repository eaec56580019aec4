// Acceptance suite: one line per criterion, then a summary. Criterion 7 as
// literally stated (the output weight taken against the input's dominated
// set) does not hold, so it is reported as FAIL together with a witness, and
// the own-set version that the correspondence actually satisfies gets its own
// line. That single known failure does not change the exit status; any other
// failure does.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "schubert/enumerate.hpp"
#include "schubert/padded.hpp"
#include "schubert/phi.hpp"
#include "schubert/verify.hpp"
#include "schubert/weak_order.hpp"

using namespace schubert;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  double budget_ms;  // 0 means no time limit
  bool known_unattainable;
  std::function<Outcome()> body;
};

Permutation P(const char* text) { return parse_permutation(text); }

PipeDream D(std::vector<Position> crosses) { return PipeDream::from_crosses(std::move(crosses)); }

std::string sweep_detail(const SweepResult& r) {
  std::string out = std::to_string(r.cases) + " cases";
  if (!r.ok()) {
    const auto& c = r.failures.front();
    out += ", first failure w=" + c.w + " pi=" + c.pi + " " + c.message;
  }
  return out;
}

Outcome padded_expansion() {
  const Polynomial expected = Polynomial(Monomial::y(1, 2) * Monomial::x(2, 2) * Monomial::x(3)) +
                              Polynomial(Monomial::x(1) * Monomial::y(1) * Monomial::x(2) * Monomial::y(2) *
                                         Monomial::x(3)) +
                              Polynomial(Monomial::x(1) * Monomial::y(1) * Monomial::x(2, 2) * Monomial::y(3)) +
                              Polynomial(Monomial::x(1, 2) * Monomial::y(2, 2) * Monomial::x(3)) +
                              Polynomial(Monomial::x(1, 2) * Monomial::x(2) * Monomial::y(2) * Monomial::y(3));
  const auto f = padded_schubert(P("1,4,3,2"), P("3,4,2,1"));
  return {f == expected, to_string(f)};
}

Outcome type_a_chain() {
  const MarkedPipeDream input(D({{1, 1}, {1, 5}, {2, 5}, {3, 2}, {4, 2}, {5, 2}}), {3, 4});
  const auto pi = P("7,6,5,4,3,2,1");
  const auto trace = phi(input, pi);
  const bool ok = input.pd().permutation() == P("2,1,3,6,7,5,4") && trace.kind == MarkClass::PA &&
                  trace.k == 7 && trace.step_count() == 3 &&
                  trace.result == D({{1, 1}, {1, 3}, {2, 4}, {3, 2}, {3, 4}, {4, 2}, {5, 2}}) &&
                  trace.result.permutation() == P("2,1,4,6,7,5,3");
  return {ok, "class " + std::string(to_string(trace.kind)) + ", k=" + std::to_string(trace.k) + ", " +
                  std::to_string(trace.step_count()) + " steps, result " + to_string(trace.result.permutation())};
}

Outcome type_b_chain() {
  const MarkedPipeDream input(D({{1, 1}, {1, 5}, {2, 2}, {2, 3}, {3, 2}, {4, 1}, {4, 2}, {5, 1}, {5, 2}}), {3, 4});
  const auto pi = P("6,5,7,3,4,2,1");
  const auto w = input.pd().permutation();
  const auto trace = phi(input, pi);
  const int cutoff = shape(pi).conjugate()[pi(w.inverse()(trace.k))];
  bool within = true;
  for (const auto& s : trace.steps) within = within && s.mark().i <= cutoff;
  const bool ok = w == P("2,1,6,5,7,4,3") && trace.kind == MarkClass::PB && trace.k == 7 && cutoff == 3 &&
                  within && trace.result.permutation() == P("2,4,6,5,7,1,3");
  return {ok, "class " + std::string(to_string(trace.kind)) + ", k=" + std::to_string(trace.k) + ", cutoff row " +
                  std::to_string(cutoff) + (within ? " respected" : " violated") + ", result " +
                  to_string(trace.result.permutation())};
}

Outcome fiber_law() {
  const auto s4 = sweep_fibers(weak_pairs(4));
  const auto s5 = sweep_fibers_sampled(weak_pairs(5), 200, 20240601);
  return {s4.ok() && s5.ok() && s5.cases >= 100,
          "rank 4: " + sweep_detail(s4) + "; rank 5 sample: " + sweep_detail(s5)};
}

// Returns (literal, own-set) outcomes of weight preservation at rank <= 4.
std::pair<Outcome, Outcome> weight_preservation() {
  long cases = 0;
  long literal_failures = 0;
  long own_failures = 0;
  std::string witness;
  for (const auto& [w, pi] : weak_pairs(4))
    for (const auto& mpd : delta_pairs(w, pi)) {
      ++cases;
      const auto input_set = dominated_positions(mpd.pd(), pi);
      const auto marked = marked_weight(mpd, input_set);
      const auto q = phi(mpd, pi).result;
      if (marked != padded_weight(q, dominated_positions(q, pi))) ++own_failures;
      // The input set may not even contain Q's new cross.
      bool literal_ok = true;
      for (const auto& c : q.crosses()) literal_ok = literal_ok && input_set.contains(c);
      literal_ok = literal_ok && marked == padded_weight(q, input_set);
      if (!literal_ok) {
        if (literal_failures++ == 0)
          witness = "w=" + to_string(w) + " pi=" + to_string(pi) + " mark " + std::to_string(mpd.mark().i) + "," +
                    std::to_string(mpd.mark().j) + ": marked weight " + to_string(marked);
      }
    }
  Outcome literal{literal_failures == 0, std::to_string(literal_failures) + " of " + std::to_string(cases) +
                                             " pairs differ" + (witness.empty() ? "" : ", e.g. " + witness)};
  Outcome own{own_failures == 0, std::to_string(own_failures) + " of " + std::to_string(cases) + " pairs differ"};
  return {literal, own};
}

}  // namespace

int main() {
  std::pair<Outcome, Outcome> weights;
  bool weights_done = false;
  auto weights_once = [&] {
    if (!weights_done) weights = weight_preservation();
    weights_done = true;
    return weights;
  };

  const std::vector<Criterion> criteria{
      {"1", 1, false, padded_expansion},
      {"2", 10, false, type_a_chain},
      {"3", 10, false, type_b_chain},
      {"4", 60000, false,
       [] {
         const auto r = sweep_delta(weak_pairs(5));
         return Outcome{r.ok() && r.cases > 0, sweep_detail(r)};
       }},
      {"5", 60000, false,
       [] {
         const auto r = sweep_nabla(weak_pairs(5));
         return Outcome{r.ok() && r.cases > 0, sweep_detail(r)};
       }},
      {"6", 120000, false, fiber_law},
      {"7", 0, true, [&] { return weights_once().first; }},
      {"7-own-set", 0, false, [&] { return weights_once().second; }},
      {"8", 30000, false,
       [] {
         const auto r = sweep_enum_oracle(5);
         return Outcome{r.ok() && r.cases == 120, sweep_detail(r)};
       }},
      {"9", 10000, false,
       [] {
         std::vector<Partition> shapes;
         for (int n = 0; n <= 6; ++n)
           for (const auto& lambda : partitions_of(n)) shapes.push_back(lambda);
         const auto r = sweep_sl2(shapes);
         return Outcome{r.ok() && r.cases > 0, sweep_detail(r)};
       }},
      {"10", 30000, false,
       [] {
         const auto r = sweep_dominated(weak_pairs(5));
         return Outcome{r.ok() && r.cases > 0, sweep_detail(r)};
       }},
  };

  int unexpected = 0;
  int known = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget_ms == 0 || ms < c.budget_ms;
    const bool pass = o.pass && in_time;
    std::string limit = c.budget_ms == 0 ? "exact" : "< " + std::to_string(static_cast<long>(c.budget_ms)) + " ms";
    std::printf("criterion %-10s %s  %10.3f ms (%s)  %s%s\n", c.id.c_str(), pass ? "PASS" : "FAIL", ms,
                limit.c_str(), o.detail.c_str(), pass || !c.known_unattainable ? "" : "  [known: statement does not hold]");
    if (!pass) (c.known_unattainable ? known : unexpected) += 1;
  }
  std::printf("summary: %d unexpected failure(s), %d known unattainable\n", unexpected, known);
  return unexpected == 0 ? 0 : 1;
}
