#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lotto::cli {

// Exit codes: 0 success, 1 validation/analysis failure, 2 usage error.
// Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lotto::cli
