#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ovalsets::cli {

/// Process exit codes.
enum Exit : int {
    kOk = 0,
    kParse = 2,
    kNotAnOval = 3,
    kUsage = 4,
    kVerification = 5,
    kIo = 6,
};

/// Runs one command line (without the program name). JSON goes to out,
/// diagnostics to err; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const char* version() noexcept;

}  // namespace ovalsets::cli
