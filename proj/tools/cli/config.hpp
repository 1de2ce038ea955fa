#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include "pitm/engine.hpp"
#include "pitm/rk4.hpp"

namespace pitm::cli {

struct OutputToggles {
    bool series_dump = true;
    bool csv = false;
    bool plot_script = false;
    bool verify_report = true;
};

/// One problem per JSON document:
///
///   {
///     "problem": {"a": "5", "b": "2", "c": "-1", "n": 2, "mode": "constant",
///                 "d": 1, "phi": "v", "source": ["0"], "N": 8, "K": 8},
///     "grid": {"x_min": -5, "x_max": 5, "nx": 101, "t_max": 0.5, "nt": 101},
///     "lambda_value": 0.1,
///     "outputs": {"series_dump": true, "csv": false, "plot_script": false, "verify_report": true},
///     "t_trust": 0.5
///   }
///
/// Exact fields (a, b, c, rate, phi, source entries) take strings such as
/// "p/q"; JSON integers are accepted, JSON floats are rejected. "mode" is
/// "constant" or "exponential" (with optional "rate", default "1").
struct RunConfig {
    ProblemSpec problem;
    GridParams grid;
    double lambda_value = 0.1;
    OutputToggles outputs;
    std::optional<double> t_trust;
};

/// Throws ConfigError naming the line/column (syntax) or field path (content).
RunConfig parse_run_config(std::string_view json_text);
RunConfig load_run_config(const std::filesystem::path& path);

/// "p/q", an integer or a decimal float.
double parse_number(std::string_view text);

}  // namespace pitm::cli
