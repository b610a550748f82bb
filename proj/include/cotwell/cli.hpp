#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace cotwell {

/// Bad flag values detected after parsing; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitSolver = 1;
inline constexpr int kExitUsage = 2;

/// "a..b" is the half-open range [a, b); "a..a" and a bare "a" select level a.
std::pair<int, int> parse_levels(std::string_view text);

/// A relative path is placed under $COTWELL_OUTPUT_DIR when that is set.
std::filesystem::path resolve_output_path(const std::filesystem::path& out);

/// Runs the `cotwell` command line. Payload goes to `out` (unless --out is
/// given), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cotwell
