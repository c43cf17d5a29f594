#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace medisk::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_parse = 3,
    exit_not_strictly_convex = 4,
    exit_size_limit = 5,
    exit_internal = 6,
};

struct RunConfig {
    std::optional<std::string> input_path;
    std::string norm_spec = "p:2";
    std::string algorithm = "eh";  ///< eh | sh | oracle | descent | all
    double tol = 1e-9;
    std::string output = "plain";  ///< plain | structured
    std::optional<std::string> svg_path;
    std::optional<std::string> diagram_path;
    std::optional<std::size_t> generate;
    std::uint64_t seed = 0;
};

/// Loads or generates the points, solves, prints the result to `out` and
/// diagnostics to `err`. Returns one of ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace medisk::cli
