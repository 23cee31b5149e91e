#pragma once

// Thin bridge to an external MILP solver (HiGHS through Python) for checking
// exported LP files. Everything degrades to "unavailable" when it is missing.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#ifndef HOSPFIN_SOLVE_LP_SCRIPT
#error "HOSPFIN_SOLVE_LP_SCRIPT must point at solve_lp.py"
#endif

namespace hospfin::lp_solver {

inline bool available() {
  static const bool ok = [] {
    const std::string cmd = "python3 \"" HOSPFIN_SOLVE_LP_SCRIPT "\" --probe > /dev/null 2>&1";
    return std::system(cmd.c_str()) == 0;
  }();
  return ok;
}

/// Objective value of the optimal solution, or nullopt when the solver fails.
inline std::optional<double> solve(const std::string& lp_text, const std::string& tag) {
  const auto path = std::filesystem::temp_directory_path() / ("hospfin_" + tag + ".lp");
  {
    std::ofstream out(path);
    out << lp_text;
  }
  const std::string cmd = "python3 \"" HOSPFIN_SOLVE_LP_SCRIPT "\" \"" + path.string() + "\" 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return std::nullopt;
  std::string output;
  char buffer[256];
  while (std::fgets(buffer, sizeof buffer, pipe) != nullptr) output += buffer;
  const int status = pclose(pipe);
  std::filesystem::remove(path);
  if (status != 0) return std::nullopt;
  try {
    return std::stod(output);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace hospfin::lp_solver
