#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lieball/verify.hpp"

namespace lieball::cli {

enum ExitCode : int {
    kPass = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kCertificationFailure = 3,
};

enum class OutputFormat { text, json, csv };

/// Entry point of the `lieball` executable. `args` excludes the program name.
/// Results go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Prints a verification report and returns kPass or kVerificationFailure.
int emit_verify_report(const VerifyReport& report, const VerifyOptions& options, OutputFormat format, std::ostream& out);

}  // namespace lieball::cli
