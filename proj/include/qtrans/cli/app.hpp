#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qtrans {

/// Entry point of the qtrans command line. args excludes the program name.
/// Reports go to out, diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtrans
