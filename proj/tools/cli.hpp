#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcj {

// Exit codes: 0 success, 2 input parse errors, 3 enumeration budget exceeded,
// 4 partially failed matrix, 1 other errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dcj
