#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "schubert/enumerate.hpp"
#include "schubert/error.hpp"
#include "schubert/fiber.hpp"
#include "schubert/json_io.hpp"
#include "schubert/padded.hpp"
#include "schubert/phi.hpp"
#include "schubert/render.hpp"
#include "schubert/verify.hpp"
#include "schubert/weak_order.hpp"

namespace schubert::cli {

namespace {

using nlohmann::json;

constexpr int kDefaultRank = 5;
constexpr int kGuardedRank = 6;

Position parse_mark(const std::string& text) {
  const auto comma = text.find(',');
  detail::require(comma != std::string::npos, "mark must look like i,j");
  try {
    std::size_t used_i = 0;
    std::size_t used_j = 0;
    const int i = std::stoi(text.substr(0, comma), &used_i);
    const int j = std::stoi(text.substr(comma + 1), &used_j);
    detail::require(used_i == comma && used_j == text.size() - comma - 1, "mark must look like i,j");
    return {i, j};
  } catch (const std::logic_error&) {
    throw PreconditionError("mark must look like i,j, got '" + text + "'");
  }
}

/// Accepts {"crosses": [...]} or a bare [[i, j], ...] list.
PipeDream parse_crosses(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("crosses are not valid JSON: ") + e.what());
  }
  if (j.is_array()) j = json{{"crosses", j}};
  return pipe_dream_from_json(j);
}

void require_member(const PipeDream& pd, const Permutation& w) {
  detail::require(pd.permutation() == w, "the pipe dream has permutation " + to_string(pd.permutation()) +
                                             ", not " + to_string(w));
}

struct Options {
  std::string w;
  std::string pi;
  std::string format;
  std::string crosses;
  std::string mark;
  bool trace = false;
  std::string kind;
  std::optional<int> n;
  std::string lambda;
  bool force = false;
  int samples = 0;
  std::uint64_t seed = 1;
};

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto pds = enumerate(parse_permutation(o.w));
  if (o.format == "count") {
    out << pds.size() << '\n';
  } else if (o.format == "ascii") {
    for (std::size_t i = 0; i < pds.size(); ++i) out << (i ? "\n" : "") << render_ascii(pds[i]) << '\n';
  } else {
    out << json(pds).dump() << '\n';
  }
  return kExitOk;
}

int cmd_schubert(const Options& o, std::ostream& out) {
  const auto f = schubert(parse_permutation(o.w));
  out << (o.format == "json" ? json(f).dump() : to_string(f)) << '\n';
  return kExitOk;
}

int cmd_padded(const Options& o, std::ostream& out) {
  const auto f = padded_schubert(parse_permutation(o.w), parse_permutation(o.pi));
  out << (o.format == "json" ? json(f).dump() : to_string(f)) << '\n';
  return kExitOk;
}

int cmd_phi(const Options& o, std::ostream& out) {
  const auto w = parse_permutation(o.w);
  const auto pi = parse_permutation(o.pi);
  detail::require(is_dominant(pi), to_string(pi) + " is not dominant");
  detail::require(leq_weak(w, pi), to_string(w) + " is not below " + to_string(pi) + " in weak order");
  const auto pd = parse_crosses(o.crosses);
  require_member(pd, w);
  const MarkedPipeDream input(pd, parse_mark(o.mark));
  const auto trace = phi(input, pi);
  json j = trace;
  j["permutation"] = to_string(trace.result.permutation());
  if (o.trace) {
    json frames = json::array();
    for (const auto& step : trace.steps) frames.push_back(render_ascii(step.pd(), pi, step.mark()));
    frames.push_back(render_ascii(trace.result, pi));
    j["frames"] = std::move(frames);
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_fiber(const Options& o, std::ostream& out) {
  const auto w = parse_permutation(o.w);
  const auto pi = parse_permutation(o.pi);
  const auto q = parse_crosses(o.crosses);
  const auto f = fiber(q, w, pi);
  out << json(f).dump(2) << '\n';
  return f.lawful() ? kExitOk : kExitMismatch;
}

std::vector<std::pair<Permutation, Permutation>> scope_pairs(const Options& o, int n) {
  if (o.pi.empty()) {
    detail::require(o.w.empty(), "--w needs --pi");
    return weak_pairs(n);
  }
  const auto pi = parse_permutation(o.pi);
  detail::require(is_dominant(pi), to_string(pi) + " is not dominant");
  if (!o.w.empty()) {
    const auto w = parse_permutation(o.w);
    detail::require(leq_weak(w, pi), to_string(w) + " is not below " + to_string(pi) + " in weak order");
    return {{w, pi}};
  }
  std::vector<std::pair<Permutation, Permutation>> out;
  for (const auto& w : weak_lower_interval(pi)) out.emplace_back(w, pi);
  return out;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const int n = o.n.value_or(kDefaultRank);
  detail::require(n >= 1, "--n must be positive");
  if (n > kGuardedRank) {
    detail::require(o.force, "--n " + std::to_string(n) + " exceeds " + std::to_string(kGuardedRank) +
                                 "; pass --force to run it anyway");
    err << "warning: rank " << n << " sweeps can take a very long time\n";
  }

  // A single (w, pi) pair prints the full identity report.
  if ((o.kind == "delta" || o.kind == "nabla") && !o.w.empty()) {
    const auto pairs = scope_pairs(o, n);
    const auto& [w, pi] = pairs.front();
    const auto report = o.kind == "delta" ? verify_delta(w, pi) : verify_nabla(w, pi);
    out << json(report).dump(2) << '\n';
    return report.ok() ? kExitOk : kExitMismatch;
  }

  SweepResult result;
  if (o.kind == "delta") {
    result = sweep_delta(scope_pairs(o, n));
  } else if (o.kind == "nabla") {
    result = sweep_nabla(scope_pairs(o, n));
  } else if (o.kind == "weights") {
    result = sweep_weights(scope_pairs(o, n));
  } else if (o.kind == "dominated") {
    result = sweep_dominated(scope_pairs(o, n));
  } else if (o.kind == "fibers") {
    result = o.samples > 0 ? sweep_fibers_sampled(scope_pairs(o, n), o.samples, o.seed)
                           : sweep_fibers(scope_pairs(o, n));
  } else if (o.kind == "sl2") {
    std::vector<Partition> shapes;
    if (!o.lambda.empty()) {
      shapes.push_back(parse_partition(o.lambda));
    } else {
      const int max_size = o.n.value_or(kGuardedRank);
      for (int s = 0; s <= max_size; ++s)
        for (auto& lambda : partitions_of(s)) shapes.push_back(std::move(lambda));
    }
    result = sweep_sl2(shapes);
  } else {
    detail::require(o.kind == "enum-oracle", "unknown verification kind '" + o.kind + "'");
    detail::require(n <= kBruteForceMaxWindow,
                    "enum-oracle is limited to n <= " + std::to_string(kBruteForceMaxWindow));
    result = sweep_enum_oracle(n);
  }
  out << json(result).dump(2) << '\n';
  return result.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pipe dreams, padded Schubert polynomials and the Delta correspondence", "schubert"};
  app.require_subcommand(1);
  Options o;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the reduced pipe dreams of a permutation");
  enumerate_cmd->add_option("w", o.w, "Permutation in one-line notation, e.g. 1,4,3,2")->required();
  enumerate_cmd->add_option("--format", o.format, "json, ascii or count")
      ->default_val("json")
      ->check(CLI::IsMember({"json", "ascii", "count"}));

  auto* schubert_cmd = app.add_subcommand("schubert", "Print the Schubert polynomial of a permutation");
  schubert_cmd->add_option("w", o.w, "Permutation")->required();
  schubert_cmd->add_option("--format", o.format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  auto* padded_cmd = app.add_subcommand("padded", "Print the pi-padded Schubert polynomial of w");
  padded_cmd->add_option("w", o.w, "Permutation below pi in left weak order")->required();
  padded_cmd->add_option("pi", o.pi, "Dominant permutation")->required();
  padded_cmd->add_option("--format", o.format, "text or json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  auto* phi_cmd = app.add_subcommand("phi", "Run the correspondence on one marked pipe dream");
  phi_cmd->add_option("w", o.w, "Permutation of the pipe dream")->required();
  phi_cmd->add_option("pi", o.pi, "Dominant permutation")->required();
  phi_cmd->add_option("--crosses", o.crosses, "Pipe dream JSON")->required();
  phi_cmd->add_option("--mark", o.mark, "Marked tile as i,j")->required();
  phi_cmd->add_flag("--trace", o.trace, "Include ASCII frames of every step");

  auto* fiber_cmd = app.add_subcommand("fiber", "Compute the full preimage of a pipe dream of t w");
  fiber_cmd->add_option("w", o.w, "The permutation covered by permutation(Q)")->required();
  fiber_cmd->add_option("pi", o.pi, "Dominant permutation")->required();
  fiber_cmd->add_option("--crosses", o.crosses, "Pipe dream JSON of Q")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification sweep");
  verify_cmd->add_option("kind", o.kind, "delta, nabla, sl2, fibers, enum-oracle, weights or dominated")
      ->required()
      ->check(CLI::IsMember({"delta", "nabla", "sl2", "fibers", "enum-oracle", "weights", "dominated"}));
  verify_cmd->add_option("--n", o.n, "Rank of the sweep (max |lambda| for sl2)");
  verify_cmd->add_option("--pi", o.pi, "Restrict to one dominant permutation");
  verify_cmd->add_option("--w", o.w, "Restrict to one permutation (needs --pi)");
  verify_cmd->add_option("--lambda", o.lambda, "Partition for sl2, e.g. 2,2,1");
  verify_cmd->add_option("--samples", o.samples, "fibers: check this many random covers instead of all");
  verify_cmd->add_option("--seed", o.seed, "fibers: seed for --samples");
  verify_cmd->add_flag("--force", o.force, "Allow ranks above 6");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream text;
    std::ostringstream diag;
    const int code = app.exit(e, text, diag);
    out << text.str();
    err << diag.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enumerate_cmd->parsed()) return cmd_enumerate(o, out);
    if (schubert_cmd->parsed()) return cmd_schubert(o, out);
    if (padded_cmd->parsed()) return cmd_padded(o, out);
    if (phi_cmd->parsed()) return cmd_phi(o, out);
    if (fiber_cmd->parsed()) return cmd_fiber(o, out);
    return cmd_verify(o, out, err);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
}

}  // namespace schubert::cli
