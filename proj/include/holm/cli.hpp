#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace holm::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kValidation = 1,     // bad input, including capacity limits
    kContradiction = 2,  // a finding that contradicts the torsion-freeness theorem
    kConsistency = 3,    // internal consistency failure
};

/// Runs one CLI invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holm::cli
