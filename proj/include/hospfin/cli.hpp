#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hospfin::cli {

enum class Command { check, local, central_greedy, central_exact, compare, gen };
enum class Format { text, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitGuard = 2;

/// Environment variable naming the directory reports go to when --output is absent.
inline constexpr const char* kOutputDirEnv = "HOSPFIN_OUTPUT_DIR";

struct RunConfig {
  Command command = Command::check;
  std::string input;
  std::optional<std::string> output;
  Format format = Format::text;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> dims;  // "QxR"
  std::string profile = "unconstrained";
  bool verbose = false;
};

/// Parses argv. Returns std::nullopt after printing help or a usage error;
/// `exit_code` then holds the status to return.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code);

/// Executes one command. Reports go to `out` unless an output file applies.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main(int argc, const char* const* argv);

}  // namespace hospfin::cli
