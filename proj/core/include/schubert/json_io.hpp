#pragma once

#include <nlohmann/json.hpp>

#include "schubert/fiber.hpp"
#include "schubert/phi.hpp"
#include "schubert/pipe_dream.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/verify.hpp"

// JSON encodings. Keys come out sorted (nlohmann::json uses an ordered map),
// so equal values always serialize to identical text.
//
//   pipe dream         {"crosses": [[i, j], ...]}
//   marked pipe dream  {"crosses": [...], "mark": [i, j]}
//   polynomial         [{"coeff": c, "x": {"1": 2}, "y": {"3": 1}}, ...] in
//                      canonical term order; c is a decimal string when it
//                      does not fit in 64 bits
//   phi trace          {"kind": "A" | "B" | "0", "k", "cover": [a, b],
//                       "steps": [...], "result": pipe dream}

namespace schubert {

void to_json(nlohmann::json& j, const Position& p);
void to_json(nlohmann::json& j, const Transposition& t);
void to_json(nlohmann::json& j, const PipeDream& pd);
void to_json(nlohmann::json& j, const MarkedPipeDream& mpd);
void to_json(nlohmann::json& j, const Monomial& m);
void to_json(nlohmann::json& j, const Polynomial& f);
void to_json(nlohmann::json& j, const StatisticSets& s);
void to_json(nlohmann::json& j, const PhiTrace& trace);
void to_json(nlohmann::json& j, const IdentityReport& r);
void to_json(nlohmann::json& j, const Counterexample& c);
void to_json(nlohmann::json& j, const SweepResult& r);
void to_json(nlohmann::json& j, const FiberMember& m);
void to_json(nlohmann::json& j, const Fiber& f);

/// Decoders; malformed documents raise PreconditionError.
PipeDream pipe_dream_from_json(const nlohmann::json& j);
MarkedPipeDream marked_pipe_dream_from_json(const nlohmann::json& j);
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace schubert
