#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oritatami {

// Command-line driver; `args` excludes the program name. Returns 0 on
// success or ACCEPT, 1 on REJECT or an unclosed brick automaton, 2 on
// usage and input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace oritatami
