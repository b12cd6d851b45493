#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace purekit::cli {

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitMalformed = 1;
inline constexpr int kExitDomain = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (JSON, or CSV for `montecarlo --format csv`), including structured error
/// objects; `err` only receives usage text on parse failures.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace purekit::cli
