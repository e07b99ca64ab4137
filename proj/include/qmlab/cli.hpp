#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qm {

// Exit codes: 0 pass, 1 check failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qm
