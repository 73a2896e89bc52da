#pragma once

// siqm subcommands: spectrum, coeffs, eigenstates, verify, coherent, evolve.
// Exit codes: 0 success, 1 validation error, 2 numerical failure. A manifest
// is written whenever the exit code is 0 or 2.

#include <iosfwd>
#include <string>
#include <vector>

namespace siqm::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;

// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_command(int argc, char** argv);

}  // namespace siqm::cli
