#pragma once

// Cross-verification suites behind the `verify` subcommand.

#include <iosfwd>
#include <optional>
#include <string>

namespace strutt::cli {

struct VerifyOptions {
    std::optional<std::string> suite; // run everything when absent
    double perturb = 0.0;             // fault injection for the closed forms
    int n = 100;                      // slope parameter for rect-neg2-search
    int steps_per_period = 4096;
};

/// Runs the requested suites, prints one line per check plus a summary.
/// Returns 0 iff every check passed, 1 otherwise.
int run_verify(const VerifyOptions& opt, std::ostream& out);

} // namespace strutt::cli
