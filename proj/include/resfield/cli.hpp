#ifndef RESFIELD_CLI_HPP
#define RESFIELD_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace resfield::cli {

/// Runs one command. Exit codes: 0 success / true, 1 false or rejected
/// check, 2 usage / parse / input errors, 3 unsupported-fragment errors
/// (UnsupportedQuantifier and kin). Output on `out` is byte-deterministic
/// given the arguments; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resfield::cli

#endif
