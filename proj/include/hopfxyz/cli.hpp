#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopf {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;

/// Runs one hopfxyz subcommand; args exclude the program name. Reports go to
/// out, usage and input errors to err.
///
///   check <file>
///   describe --catalog <spec> [--out <file>]
///   build --construction <name> --input <file> [--materialize-cap N] [--out <file>]
///   iso --kind <kind> --input <file> [--mode exhaustive|random:N] [--out <file>]
///   bimodule --input <file> [--module regular|free:N]
///   semisimple <file>
///
/// Every command takes --seed N (default 0).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopf
