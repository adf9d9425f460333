#pragma once

#include "ringdim/dimension.hpp"
#include "ringdim/parser.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace ringdim {

struct RunOptions {
    std::string format = "text"; // "text" or "json"
    int terms = 8;               // series coefficients to display
    ScanOrder scan = ScanOrder::AscendingPrecedence;
    std::string poly;            // reduce only: the polynomial to normalize
};

// Builds the report for one command (gb, check-free, cdim, hilbert, kdim,
// reduce). Throws input_error / not_free_error; identical inputs give
// byte-identical reports.
nlohmann::ordered_json run_command(const std::string& command, const ProblemSpec& spec,
                                   const RunOptions& options);

std::string render_text(const nlohmann::ordered_json& report);

// Full pipeline with the exit code contract: 0 success, 1 malformed input,
// 2 no free representation. Results go to out, diagnostics to err.
int execute(const std::string& command, const ProblemSpec& spec, const RunOptions& options,
            std::ostream& out, std::ostream& err);

} // namespace ringdim
