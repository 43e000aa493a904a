#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knots::cli {

// Subcommands: cf, families, verify, census, norm.
// Exit codes: 0 success / all Holds, 1 verification Fails, 2 usage or parse
// error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace knots::cli
