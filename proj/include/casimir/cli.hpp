#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "casimir/algebra.hpp"

namespace casimir {

enum class Command { Algebra, Lifted, Normalize, Basis, Verify, CasimirCheck, Suite };
enum class Format { Text, Json, Latex };

struct RunConfig {
  Command command = Command::Basis;
  AlgebraKind kind = AlgebraKind::T0;
  int n = 2;
  std::uint64_t seed = 42;
  int trials = 20;
  Format format = Format::Text;
  std::optional<std::string> output_path;
  std::optional<std::pair<int, int>> entry;  // lifted --entry
  bool show_steps = false;
  bool symbolic_only = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidArguments = 2;

/// Runs one command. Artifact goes to `out` (or the output path), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace casimir
