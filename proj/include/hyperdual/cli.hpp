#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperdual::cli {

/// Exit codes of run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // domain, capacity, validation, failed check
inline constexpr int kExitUsage = 2;

/// Runs one `hyperdual` invocation. `args` excludes the program name.
/// Model documents are read from the positional input path, or from `in`
/// when the path is "-" or omitted. Results go to --out or `out`; errors
/// are written to `err` as a single line "error: <kind>: <message>".
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

/// printf("%.17g"), with non-finite values spelled inf / -inf / nan.
std::string format_real(double value);

}  // namespace hyperdual::cli
