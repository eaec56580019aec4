#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/partition.hpp"
#include "schubert/phi.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// One summand of the right hand side of an operator identity.
struct CoverTerm {
  /// t_ab for Delta, s_k for Nabla.
  Transposition t;
  Permutation target;
  int coeff = 0;
  /// Empty for Nabla.
  StatisticSets stats;
};

struct Mismatch {
  Monomial monomial;
  mpz_class lhs;
  mpz_class rhs;
};

struct IdentityReport {
  Permutation w;
  Permutation pi;
  Polynomial lhs;
  Polynomial rhs;
  std::vector<CoverTerm> covers;
  std::vector<Mismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Delta S^pi_w against the sum over covers w ⋖_pi t_ab w of
/// (1 + |A| + |B|) S^pi_{t_ab w}.
IdentityReport verify_delta(const Permutation& w, const Permutation& pi);
/// Nabla S^pi_w against the sum over s_k w ⋖_L w of k S^pi_{s_k w}.
IdentityReport verify_nabla(const Permutation& w, const Permutation& pi);

/// The three commutator relations on a single polynomial.
struct Sl2Check {
  bool commutator = false;  ///< [Delta, Nabla] f = H f
  bool h_delta = false;     ///< [H, Delta] f = 2 Delta f
  bool h_nabla = false;     ///< [H, Nabla] f = -2 Nabla f
  bool ok() const noexcept { return commutator && h_delta && h_nabla; }
};

/// H computed independently of the commutator: it scales x^a y^b by |a| - |b|.
Polynomial h_by_degree(const Polynomial& f);
Sl2Check check_sl2(const Polynomial& f);

/// A failed case of a sweep. Fields that do not apply stay empty.
struct Counterexample {
  std::string kind;
  std::string w;
  std::string pi;
  std::string monomial;
  std::string lhs;
  std::string rhs;
  std::string message;
};

struct SweepResult {
  std::string kind;
  std::int64_t cases = 0;
  std::vector<Counterexample> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Every (w, pi) with pi dominant in S_n and w <=_L pi, ordered by pi then w.
std::vector<std::pair<Permutation, Permutation>> weak_pairs(int n);

/// Sweeps fan out over their cases on a thread pool; results are collected in
/// case order, so output does not depend on scheduling. A case that throws is
/// reported as a counterexample carrying the exception message.
SweepResult sweep_delta(const std::vector<std::pair<Permutation, Permutation>>& pairs);
SweepResult sweep_nabla(const std::vector<std::pair<Permutation, Permutation>>& pairs);
/// Every basis monomial of V_lambda for each lambda given.
SweepResult sweep_sl2(const std::vector<Partition>& shapes);
/// Fiber law for every cover below pi of every pair and every Q over it;
/// one case per Q.
SweepResult sweep_fibers(const std::vector<std::pair<Permutation, Permutation>>& pairs);
/// Fiber law on `samples` covers drawn uniformly (with a fixed seed) from all
/// covers of the given pairs.
SweepResult sweep_fibers_sampled(const std::vector<std::pair<Permutation, Permutation>>& pairs, int samples,
                                 std::uint64_t seed);
/// Weight preservation (the marked weight of (P, p) against the padded weight
/// of Phi(P, p), each taken with its own dominated set), class exclusivity,
/// k in A or B, and the summed marked weights against Delta of the padded
/// polynomial; one case per marked pair.
SweepResult sweep_weights(const std::vector<std::pair<Permutation, Permutation>>& pairs);
/// Row counts and cross containment of dominated sets; one case per pipe dream.
SweepResult sweep_dominated(const std::vector<std::pair<Permutation, Permutation>>& pairs);
/// Ladder-move enumeration against the brute-force filter for all w in S_n.
SweepResult sweep_enum_oracle(int n);

}  // namespace schubert
