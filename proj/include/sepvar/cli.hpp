#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sepvar {

/// Exit status: 0 success, 1 fail outcome, 2 usage/parse/validation error.
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepvar
