#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetakit::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUndefinedPoint = 2,
    kConditioning = 3,
    kUsage = 64,
    kDomain = 65,
    kMissingPrerequisite = 66,
    kIo = 74,
};

/// Runs `zetakit <args...>` (args excludes the program name). `env_cache` is
/// the value of ZETAKIT_CACHE, empty when unset.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& env_cache = {});

}  // namespace zetakit::cli
