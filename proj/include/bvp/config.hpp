#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bvp/constants.hpp"
#include "bvp/exprlang.hpp"
#include "bvp/kernel.hpp"
#include "bvp/quadrature.hpp"
#include "bvp/solver.hpp"

namespace bvp {

/// A fully-loaded problem: validated parameters, parsed expressions,
/// optional declared asymptotics and solver/quadrature overrides.
///
/// Config files are a single JSON document. Recognized keys:
///   alpha, eta          (required numbers)
///   a                   (required, expression text in t)
///   f                   (required, expression text in u)
///   f0, finf            (optional: number, "zero" or "infinite")
///   lambda              (optional number)
///   grid_n              (optional integer, default 200)
///   quad_abs_tol, quad_max_depth
///   damping, max_iters, conv_tol, trivial_threshold, init_scales
/// Unknown keys are rejected.
struct ProblemConfig {
    BvpParams params;
    Expression a;
    Expression f;
    std::optional<AsymptoticValue> declared_f0;
    std::optional<AsymptoticValue> declared_finf;
    std::optional<double> lambda;
    QuadratureSettings quad;
    SolveSettings solve;
    std::vector<std::string> warnings;  // H1/H2 sampling diagnostics
};

/// Parses a config from JSON text. Throws ConfigError on malformed or
/// unknown keys, OutOfRange on bad parameters, SyntaxError and friends on
/// bad expressions.
ProblemConfig load_config_text(const std::string& json_text);

/// Reads and parses a config file.
ProblemConfig load_config_file(const std::string& path);

}  // namespace bvp
