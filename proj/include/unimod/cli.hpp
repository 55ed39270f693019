#ifndef UNIMOD_CLI_HPP
#define UNIMOD_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace unimod::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_parse = 2;
inline constexpr int exit_size_guard = 3;
inline constexpr int exit_precondition = 4;
inline constexpr int exit_violation = 5;

// Runs one command. `args` excludes the program name. Reports go to `out`
// as JSON, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

std::string sha256_hex(std::string_view data);

} // namespace unimod::cli

#endif // UNIMOD_CLI_HPP
