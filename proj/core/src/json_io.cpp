#include "schubert/json_io.hpp"

#include <limits>

#include "schubert/error.hpp"

namespace schubert {

using nlohmann::json;

namespace {

json exponents_json(const Monomial::Exponents& e) {
  json out = json::object();
  for (const auto& [index, exp] : e) out[std::to_string(index)] = exp;
  return out;
}

Monomial::Exponents exponents_from_json(const json& j) {
  detail::require(j.is_object(), "exponents must be an object");
  Monomial::Exponents out;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    const int index = std::stoi(key, &used);
    detail::require(used == key.size(), "bad variable index '" + key + "'");
    out.emplace_back(index, value.get<int>());
  }
  return out;
}

json coefficient_json(const mpz_class& c) {
  if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
  return c.get_str();
}

mpz_class coefficient_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  detail::require(j.is_string(), "coefficient must be an integer or a decimal string");
  mpz_class c;
  detail::require(c.set_str(j.get<std::string>(), 10) == 0, "bad coefficient '" + j.get<std::string>() + "'");
  return c;
}

Position position_from_json(const json& j) {
  detail::require(j.is_array() && j.size() == 2, "a position is a pair [i, j]");
  return {j[0].get<int>(), j[1].get<int>()};
}

/// Runs a decoder and turns library exceptions into PreconditionError.
template <class Fn>
auto decoding(const char* what, Fn fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed ") + what + " JSON: " + e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InvariantViolation*>(&e) != nullptr) throw;
    throw PreconditionError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

void to_json(json& j, const Position& p) { j = json::array({p.i, p.j}); }
void to_json(json& j, const Transposition& t) { j = json::array({t.a, t.b}); }

void to_json(json& j, const PipeDream& pd) {
  json crosses = json::array();
  for (const auto& p : pd.crosses()) crosses.push_back(p);
  j = json{{"crosses", std::move(crosses)}};
}

void to_json(json& j, const MarkedPipeDream& mpd) {
  to_json(j, mpd.pd());
  j["mark"] = mpd.mark();
}

void to_json(json& j, const Monomial& m) {
  j = json{{"x", exponents_json(m.x_exponents())}, {"y", exponents_json(m.y_exponents())}};
}

void to_json(json& j, const Polynomial& f) {
  j = json::array();
  for (const auto& [m, c] : f.terms()) {
    json term = m;
    term["coeff"] = coefficient_json(c);
    j.push_back(std::move(term));
  }
}

void to_json(json& j, const StatisticSets& s) { j = json{{"A", s.A}, {"B", s.B}}; }

void to_json(json& j, const PhiTrace& trace) {
  j = json{{"kind", to_string(trace.kind)},
           {"k", trace.k},
           {"cover", trace.cover},
           {"steps", trace.steps},
           {"result", trace.result}};
}

void to_json(json& j, const IdentityReport& r) {
  json covers = json::array();
  for (const auto& c : r.covers)
    covers.push_back({{"t", c.t}, {"target", to_string(c.target)}, {"coeff", c.coeff}, {"A", c.stats.A}, {"B", c.stats.B}});
  json mismatches = json::array();
  for (const auto& m : r.mismatches)
    mismatches.push_back({{"monomial", to_string(m.monomial)}, {"lhs", coefficient_json(m.lhs)}, {"rhs", coefficient_json(m.rhs)}});
  j = json{{"ok", r.ok()},
           {"w", to_string(r.w)},
           {"pi", to_string(r.pi)},
           {"lhs", r.lhs},
           {"rhs", r.rhs},
           {"covers", std::move(covers)},
           {"mismatches", std::move(mismatches)}};
}

void to_json(json& j, const Counterexample& c) {
  j = json::object();
  j["kind"] = c.kind;
  const auto put = [&](const char* key, const std::string& value) {
    if (!value.empty()) j[key] = value;
  };
  put("w", c.w);
  put("pi", c.pi);
  put("monomial", c.monomial);
  put("lhs", c.lhs);
  put("rhs", c.rhs);
  put("message", c.message);
}

void to_json(json& j, const SweepResult& r) {
  j = json{{"kind", r.kind}, {"ok", r.ok()}, {"cases", r.cases}, {"failures", r.failures}};
  if (!r.failures.empty()) j["counterexample"] = r.failures.front();
}

void to_json(json& j, const FiberMember& m) {
  j = m.pair;
  j["class"] = to_string(m.kind);
  j["k"] = m.k;
}

void to_json(json& j, const Fiber& f) {
  const auto counts = f.class_counts();
  j = json{{"w", to_string(f.w)},
           {"cover", f.cover},
           {"A", f.stats.A},
           {"B", f.stats.B},
           {"classes", {counts[0], counts[1], counts[2]}},
           {"forward", f.forward},
           {"backward", f.backward},
           {"agree", f.forward == f.backward},
           {"ok", f.lawful()}};
}

PipeDream pipe_dream_from_json(const json& j) {
  return decoding("pipe dream", [&] {
    detail::require(j.is_object() && j.contains("crosses"), "expected an object with \"crosses\"");
    const auto& crosses = j.at("crosses");
    detail::require(crosses.is_array(), "\"crosses\" must be an array");
    std::vector<Position> out;
    for (const auto& c : crosses) out.push_back(position_from_json(c));
    return PipeDream::from_crosses(std::move(out));
  });
}

MarkedPipeDream marked_pipe_dream_from_json(const json& j) {
  return decoding("marked pipe dream", [&] {
    detail::require(j.is_object() && j.contains("mark"), "expected an object with \"mark\"");
    return MarkedPipeDream(pipe_dream_from_json(j), position_from_json(j.at("mark")));
  });
}

Polynomial polynomial_from_json(const json& j) {
  return decoding("polynomial", [&] {
    detail::require(j.is_array(), "a polynomial is an array of terms");
    Polynomial f;
    for (const auto& term : j) {
      detail::require(term.is_object() && term.contains("coeff"), "a term needs \"coeff\"");
      const auto x = term.contains("x") ? exponents_from_json(term.at("x")) : Monomial::Exponents{};
      const auto y = term.contains("y") ? exponents_from_json(term.at("y")) : Monomial::Exponents{};
      f.add_term(Monomial::from_exponents(x, y), coefficient_from_json(term.at("coeff")));
    }
    return f;
  });
}

}  // namespace schubert
