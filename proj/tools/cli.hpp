#pragma once

#include <string>
#include <vector>

namespace fracwave::cli {

/// Runs the command-line front end. Returns the process exit code:
/// 0 success, 2 validation/usage error, 3 verification failure above
/// tolerance.
int run(int argc, const char* const* argv);

/// Convenience overload for tests.
int run(const std::vector<std::string>& args);

/// Parses "start:stop:step" (start included; stop excluded unless a grid
/// point lands on it within rounding tolerance) or a comma-separated list.
std::vector<double> parse_values(const std::string& text);

/// Locale-independent shortest round-trip formatting.
std::string format_double(double v);

}  // namespace fracwave::cli
