#pragma once

// Command dispatch for the sgcm tool, runnable in-process for tests.

#include <string>
#include <vector>

#include "sgcm/error.hpp"

namespace sgcm {

inline constexpr int kExitCm = 0;
inline constexpr int kExitNotCm = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitUnavailable = 69;
inline constexpr int kExitSoftware = 70;
inline constexpr int kExitIo = 74;

int exit_code_for(ErrorCode code);

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// args excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace sgcm
