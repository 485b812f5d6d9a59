#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linroots::cli {

/// Parses and runs one command. Exit code 0 on success, 1 on a failing
/// selftest, 2 on a spec error (diagnostic naming the offending token on err).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace linroots::cli
