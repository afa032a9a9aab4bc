#pragma once

#include "qtrans/hopf/hopf_algebra.hpp"
#include "qtrans/translations/translations.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace qtrans {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
    kExitOk = 0,
    kExitIo = 1,
    kExitAxiom = 2,
    kExitTheorem = 3,
};

struct RunOptions {
    double tol = kDefaultTolerance;
    std::uint64_t seed = 0;
    Side side = Side::Right;
};

struct CommandResult {
    Json report;
    int exit_code = kExitOk;
    /// Human-readable reason for a nonzero exit code.
    std::string diagnostic;
};

/// Exact scalars as ["p/q", "r/s"], float scalars as [re, im].
Json scalar_json(const Scalar& s);
Json tensor_json(const Tensor& t);

CommandResult run_verify(const HopfPtr& h, const RunOptions& opt);
CommandResult run_characters(const HopfPtr& h, const RunOptions& opt);
CommandResult run_translations(const HopfPtr& h, const RunOptions& opt);
CommandResult run_peterweyl(const HopfPtr& h, const RunOptions& opt);
CommandResult run_theorem(const HopfPtr& h, const RunOptions& opt);

std::string render_markdown(const Json& report);

}  // namespace qtrans
