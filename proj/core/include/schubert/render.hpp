#pragma once

#include <optional>
#include <string>

#include "schubert/pipe_dream.hpp"

namespace schubert {

/// Text grid for a pipe dream: '+' cross, '.' bump, 'o' pi-dominated bump,
/// '*' the marked bump. Rows are newline separated with no trailing
/// whitespace. The box is the smallest square holding the staircase of the
/// crosses, the windows of w and pi, and the mark.
///
/// Throws PreconditionError if the mark sits on a cross.
std::string render_ascii(const PipeDream& pd, const std::optional<Permutation>& pi = std::nullopt,
                         const std::optional<Position>& mark = std::nullopt);

}  // namespace schubert
