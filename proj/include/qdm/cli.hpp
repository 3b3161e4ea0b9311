#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdm {

// Full CLI entry point. Returns the process exit code:
//   0 success, 2 argument error, 3 domain/resource error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qdm
