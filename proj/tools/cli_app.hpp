// Command-line front end, separated from main() so tests can drive it
// in-process and capture its streams.
//
// Exit codes: 0 success, 1 domain error (bad input values, impossible
// request, failed identity), 2 usage error (unknown flags/subcommands).

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyharm::cli {

// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace polyharm::cli
