#ifndef EDEGEN_CLI_CLI_HPP
#define EDEGEN_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace edegen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitResource = 3;

/// Runs one command line (args exclude the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edegen::cli

#endif  // EDEGEN_CLI_CLI_HPP
