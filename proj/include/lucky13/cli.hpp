#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lucky13 {

// Runs one CLI invocation. `args` excludes the program name.
// Returns 0 on success, 2 on usage errors and 1 on runtime errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Expands "0.5x13" style repetition and comma lists into 13 probabilities.
std::vector<double> parse_probability_list(const std::vector<std::string>& tokens);

}  // namespace lucky13
