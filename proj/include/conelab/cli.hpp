// The conelab command line: one subcommand per operation, deterministic
// JSON/CSV artifacts, exit codes 0 (verified) / 1 (verification failure) /
// 2 (usage error).
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conelab::cli {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace conelab::cli
