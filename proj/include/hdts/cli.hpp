// Command-line front end. Exit codes: 0 true/ok, 1 false or unknown,
// 2 usage, 3 parse, 4 precondition, 5 budget.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdts {

// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace hdts
