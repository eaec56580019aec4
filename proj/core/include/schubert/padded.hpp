#pragma once

#include <span>
#include <vector>

#include "schubert/moves.hpp"
#include "schubert/partition.hpp"
#include "schubert/pipe_dream.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// x^S = prod over (i, j) in S of x_i.
Monomial row_monomial(std::span<const Position> cells);

/// x^lambda and y^lambda.
Monomial x_power(const Partition& lambda);
Monomial y_power(const Partition& lambda);

/// The weight x^{P(cross)} y^{P(bump) ∩ D} of a pipe dream against a
/// dominated set D (which need not be its own).
Monomial padded_weight(const PipeDream& pd, const DominatedSet& dominated);

/// Schubert polynomial: sum over PD(w) of x^{crosses}.
Polynomial schubert(const Permutation& w);

/// pi-padded Schubert polynomial via the pipe dream formula: each P in PD(w)
/// contributes x^{P(cross)} y^{P(bump) ∩ P(pi)}. Requires pi dominant and
/// w <=_L pi.
Polynomial padded_schubert(const Permutation& w, const Permutation& pi);

/// pi-padded Schubert polynomial as the homogenization y^lambda S_w(x/y).
/// Throws PreconditionError if some monomial of S_w does not divide x^lambda.
Polynomial padded_schubert_by_homogenization(const Permutation& w, const Permutation& pi);

/// Every monomial x^a y^b of f satisfies a_i + b_i = lambda_i for all i.
bool in_V_lambda(const Polynomial& f, const Partition& lambda);

/// The monomial basis of V_lambda, in canonical order.
std::vector<Monomial> v_lambda_basis(const Partition& lambda);

}  // namespace schubert
