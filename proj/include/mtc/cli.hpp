#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace mtc::cli {

enum class Command { modular_data, effective_center, schellekens, invariants, reducibility, grid };
enum class Format { json, csv, text };

struct RunConfig {
  Command command = Command::reducibility;
  int N = 2;
  int k = 1;
  std::optional<int> support;
  int max_entry = 3;
  int budget = 24;
  std::size_t max_alcove = 36;
  std::string datum_path;  // invariants: read a ModularDatum JSON instead of computing one
  std::string output;      // empty: stdout
  Format format = Format::text;
};

enum ExitCode : int { kOk = 0, kInvalidArguments = 1, kBudgetExceeded = 2, kInternalFailure = 3 };

/// Parses argv into a config. On failure returns nullopt after writing the
/// message to `err`; `exit_code` receives 0 for --help, 1 for invalid input.
std::optional<RunConfig> parse(int argc, const char* const* argv, std::ostream& out,
                               std::ostream& err, int& exit_code);

/// Executes the command, writing to config.output or `out`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse + MTC_BUDGET override + run.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mtc::cli
