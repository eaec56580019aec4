#include "schubert/verify.hpp"

#include <algorithm>
#include <exception>
#include <future>
#include <random>
#include <set>
#include <thread>
#include <tuple>

#include "schubert/enumerate.hpp"
#include "schubert/error.hpp"
#include "schubert/fiber.hpp"
#include "schubert/padded.hpp"
#include "schubert/weak_order.hpp"

namespace schubert {

namespace {

std::vector<Mismatch> compare(const Polynomial& lhs, const Polynomial& rhs) {
  std::set<Monomial> support;
  for (const auto& [m, c] : lhs.terms()) support.insert(m);
  for (const auto& [m, c] : rhs.terms()) support.insert(m);
  std::vector<Mismatch> out;
  for (const auto& m : support) {
    auto l = lhs.coefficient(m);
    auto r = rhs.coefficient(m);
    if (l != r) out.push_back({m, std::move(l), std::move(r)});
  }
  return out;
}

Counterexample blank(const std::string& kind, const Permutation& w, const Permutation& pi) {
  Counterexample c;
  c.kind = kind;
  c.w = to_string(w);
  c.pi = to_string(pi);
  return c;
}

void add_mismatches(SweepResult& out, const IdentityReport& r) {
  for (const auto& m : r.mismatches) {
    auto c = blank(out.kind, r.w, r.pi);
    c.monomial = to_string(m.monomial);
    c.lhs = m.lhs.get_str();
    c.rhs = m.rhs.get_str();
    out.failures.push_back(std::move(c));
  }
}

struct CoverCase {
  Permutation w;
  Transposition t;
  Permutation pi;
};

Counterexample context(const std::string& kind, const std::pair<Permutation, Permutation>& item) {
  return blank(kind, item.first, item.second);
}
Counterexample context(const std::string& kind, const CoverCase& item) {
  auto c = blank(kind, item.w, item.pi);
  c.message = "cover t_" + std::to_string(item.t.a) + "," + std::to_string(item.t.b) + ": ";
  return c;
}
Counterexample context(const std::string& kind, const Permutation& w) {
  auto c = blank(kind, w, Permutation{});
  c.pi.clear();
  return c;
}
Counterexample context(const std::string& kind, const std::pair<Partition, Monomial>& item) {
  Counterexample c;
  c.kind = kind;
  c.monomial = to_string(item.second);
  c.message = "lambda " + to_string(item.first) + ": ";
  return c;
}

/// Runs `fn(item, result)` over all items on a small pool of workers, each
/// owning a contiguous block, then concatenates the partial results in order.
template <class Item, class Fn>
SweepResult run_cases(const std::string& kind, const std::vector<Item>& items, Fn fn) {
  const auto run_block = [&](std::size_t lo, std::size_t hi) {
    SweepResult part{kind, 0, {}};
    for (std::size_t i = lo; i < hi; ++i) {
      try {
        fn(items[i], part);
      } catch (const std::exception& e) {
        ++part.cases;
        auto c = context(kind, items[i]);
        c.message += e.what();
        part.failures.push_back(std::move(c));
      }
    }
    return part;
  };

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(items.size(), 1));
  SweepResult out{kind, 0, {}};
  if (workers == 1) return run_block(0, items.size());

  std::vector<std::future<SweepResult>> parts;
  const std::size_t block = (items.size() + workers - 1) / workers;
  for (std::size_t lo = 0; lo < items.size(); lo += block)
    parts.push_back(std::async(std::launch::async, run_block, lo, std::min(items.size(), lo + block)));
  for (auto& f : parts) {
    auto part = f.get();
    out.cases += part.cases;
    std::move(part.failures.begin(), part.failures.end(), std::back_inserter(out.failures));
  }
  return out;
}

std::vector<CoverCase> all_covers(const std::vector<std::pair<Permutation, Permutation>>& pairs) {
  std::vector<CoverCase> out;
  for (const auto& [w, pi] : pairs)
    for (const auto& t : covers_below_pi(w, pi)) out.push_back({w, t, pi});
  return out;
}

void check_fibers(const CoverCase& c, SweepResult& out) {
  for (const auto& q : enumerate(c.t * c.w)) {
    ++out.cases;
    const auto f = fiber(q, c.w, c.t, c.pi);
    if (f.lawful()) continue;
    auto ce = context(out.kind, c);
    const auto counts = f.class_counts();
    ce.message += "Q " + to_string(q.permutation()) + " with " + std::to_string(q.cross_count()) +
                  " crosses: forward classes (" + std::to_string(counts[0]) + "," + std::to_string(counts[1]) + "," +
                  std::to_string(counts[2]) + "), |A| = " + std::to_string(f.stats.A.size()) +
                  ", |B| = " + std::to_string(f.stats.B.size()) + ", backward size " +
                  std::to_string(f.backward.size()) + (f.forward == f.backward ? "" : ", fibers differ");
    out.failures.push_back(std::move(ce));
  }
}

}  // namespace

IdentityReport verify_delta(const Permutation& w, const Permutation& pi) {
  IdentityReport r{w, pi, delta_op(padded_schubert(w, pi)), {}, {}, {}};
  for (const auto& t : covers_below_pi(w, pi)) {
    const auto target = t * w;
    auto stats = ab_sets(w, t, pi);
    const int coeff = stats.multiplicity();
    r.rhs += padded_schubert(target, pi) * mpz_class(coeff);
    r.covers.push_back({t, target, coeff, std::move(stats)});
  }
  r.mismatches = compare(r.lhs, r.rhs);
  return r;
}

IdentityReport verify_nabla(const Permutation& w, const Permutation& pi) {
  IdentityReport r{w, pi, nabla_op(padded_schubert(w, pi)), {}, {}, {}};
  for (const auto& [k, target] : weak_lower_covers(w)) {
    r.rhs += padded_schubert(target, pi) * mpz_class(k);
    r.covers.push_back({Transposition::simple(k), target, k, {}});
  }
  r.mismatches = compare(r.lhs, r.rhs);
  return r;
}

Polynomial h_by_degree(const Polynomial& f) {
  Polynomial out;
  for (const auto& [m, c] : f.terms()) out.add_term(m, c * (m.x_degree() - m.y_degree()));
  return out;
}

Sl2Check check_sl2(const Polynomial& f) {
  const auto h = [](const Polynomial& g) { return h_by_degree(g); };
  Sl2Check out;
  out.commutator = h_op(f) == h(f);
  out.h_delta = h(delta_op(f)) - delta_op(h(f)) == delta_op(f) * mpz_class(2);
  out.h_nabla = h(nabla_op(f)) - nabla_op(h(f)) == nabla_op(f) * mpz_class(-2);
  return out;
}

std::vector<std::pair<Permutation, Permutation>> weak_pairs(int n) {
  detail::require(n >= 1, "rank must be positive");
  std::vector<std::pair<Permutation, Permutation>> out;
  for (const auto& pi : dominant_permutations(n))
    for (const auto& w : weak_lower_interval(pi)) out.emplace_back(w, pi);
  return out;
}

SweepResult sweep_delta(const std::vector<std::pair<Permutation, Permutation>>& pairs) {
  return run_cases("delta", pairs, [](const auto& item, SweepResult& out) {
    ++out.cases;
    add_mismatches(out, verify_delta(item.first, item.second));
  });
}

SweepResult sweep_nabla(const std::vector<std::pair<Permutation, Permutation>>& pairs) {
  return run_cases("nabla", pairs, [](const auto& item, SweepResult& out) {
    ++out.cases;
    add_mismatches(out, verify_nabla(item.first, item.second));
  });
}

SweepResult sweep_sl2(const std::vector<Partition>& shapes) {
  std::vector<std::pair<Partition, Monomial>> items;
  for (const auto& lambda : shapes)
    for (auto& m : v_lambda_basis(lambda)) items.emplace_back(lambda, std::move(m));
  return run_cases("sl2", items, [](const auto& item, SweepResult& out) {
    ++out.cases;
    const auto check = check_sl2(Polynomial(item.second));
    if (check.ok()) return;
    auto c = context(out.kind, item);
    if (!check.commutator) c.message += "[Delta,Nabla] != H ";
    if (!check.h_delta) c.message += "[H,Delta] != 2 Delta ";
    if (!check.h_nabla) c.message += "[H,Nabla] != -2 Nabla";
    out.failures.push_back(std::move(c));
  });
}

SweepResult sweep_fibers(const std::vector<std::pair<Permutation, Permutation>>& pairs) {
  return run_cases("fibers", all_covers(pairs), check_fibers);
}

SweepResult sweep_fibers_sampled(const std::vector<std::pair<Permutation, Permutation>>& pairs, int samples,
                                 std::uint64_t seed) {
  detail::require(samples >= 0, "sample count must be nonnegative");
  const auto covers = all_covers(pairs);
  std::vector<CoverCase> chosen;
  std::mt19937_64 rng(seed);
  std::sample(covers.begin(), covers.end(), std::back_inserter(chosen), samples, rng);
  return run_cases("fibers", chosen, check_fibers);
}

SweepResult sweep_weights(const std::vector<std::pair<Permutation, Permutation>>& pairs) {
  return run_cases("weights", pairs, [](const auto& item, SweepResult& out) {
    const auto& [w, pi] = item;
    Polynomial summed;
    for (const auto& pd : enumerate(w)) {
      const auto dominated = dominated_positions(pd, pi);
      for (const auto& p : dominated.positions()) {
        if (pd.is_cross(p)) continue;
        ++out.cases;
        const MarkedPipeDream pair(pd, p);
        const auto trace = phi(pair, pi);
        const auto weight = marked_weight(pair, dominated);
        summed.add_term(weight, 1);
        auto c = blank(out.kind, w, pi);
        c.monomial = to_string(weight);
        if (weight != padded_weight(trace.result, dominated_positions(trace.result, pi))) {
          c.message = "Phi changes the weight of the pair marked at " + std::to_string(p.i) + "," + std::to_string(p.j);
          out.failures.push_back(c);
        }
        if (trace.kind != MarkClass::P0) {
          const auto stats = ab_sets(w, trace.cover, pi);
          const auto& set = trace.kind == MarkClass::PA ? stats.A : stats.B;
          if (!std::binary_search(set.begin(), set.end(), trace.k)) {
            c.message = "pipe " + std::to_string(trace.k) + " of a class " + std::string(to_string(trace.kind)) +
                        " run is outside its statistic set";
            out.failures.push_back(c);
          }
        }
      }
    }
    auto r = IdentityReport{w, pi, summed, delta_op(padded_schubert(w, pi)), {}, {}};
    r.mismatches = compare(r.lhs, r.rhs);
    add_mismatches(out, r);
  });
}

SweepResult sweep_dominated(const std::vector<std::pair<Permutation, Permutation>>& pairs) {
  return run_cases("dominated", pairs, [](const auto& item, SweepResult& out) {
    const auto& [w, pi] = item;
    const auto lambda = shape(pi);
    const std::vector<int> expected(lambda.parts().begin(), lambda.parts().end());
    for (const auto& pd : enumerate(w)) {
      ++out.cases;
      const auto dominated = dominated_positions(pd, pi);
      const bool rows_ok = dominated.row_counts() == expected;
      const bool crosses_ok = std::all_of(pd.crosses().begin(), pd.crosses().end(),
                                          [&](const Position& p) { return dominated.contains(p); });
      if (rows_ok && crosses_ok) continue;
      auto c = blank(out.kind, w, pi);
      c.message = std::string(rows_ok ? "" : "row counts differ from the shape ") +
                  (crosses_ok ? "" : "a cross is not dominated");
      out.failures.push_back(std::move(c));
    }
  });
}

SweepResult sweep_enum_oracle(int n) {
  detail::require(n >= 1 && n <= kBruteForceMaxWindow, "brute force enumeration is limited to small ranks");
  return run_cases("enum-oracle", all_permutations(n), [](const Permutation& w, SweepResult& out) {
    ++out.cases;
    const auto fast = enumerate(w);
    const auto slow = enumerate_bruteforce(w);
    if (fast == slow) return;
    auto c = context(out.kind, w);
    c.message = "ladder moves found " + std::to_string(fast.size()) + " pipe dreams, brute force " +
                std::to_string(slow.size());
    out.failures.push_back(std::move(c));
  });
}

}  // namespace schubert
