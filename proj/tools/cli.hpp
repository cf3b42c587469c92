#ifndef VLOGIC_TOOLS_CLI_HPP
#define VLOGIC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace vlogic::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_failed = 2;

/// Runs one command line (without the program name). JSON goes to `out`
/// (or the --out file), human-readable diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace vlogic::cli

#endif // VLOGIC_TOOLS_CLI_HPP
