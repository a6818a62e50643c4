#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dftsub {

/// Runs one command. args excludes the program name. Exit codes: 0 success,
/// 1 negative verdict, 2 usage error, 3 search bound exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dftsub
