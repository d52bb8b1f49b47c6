#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "slidebin/binarize.hpp"
#include "slidebin/bench.hpp"

namespace slidebin::cli {

enum ExitStatus : int {
  kOk = 0,
  kUsage = 1,
  kIoError = 2,
  kUnsupported = 3,
};

struct BinarizeRequest {
  std::filesystem::path input;
  std::filesystem::path output;
  Engine engine = Engine::sliding;
  RuleKind rule = RuleKind::sauvola;
  RuleParams params;
  WindowSpec window = WindowSpec::square(32);
  SweepOptions sweep;
};

/// Reads a PGM, binarizes it and writes a PBM. Errors go to `err`.
int run_binarize(const BinarizeRequest& request, std::ostream& err);

/// Writes CSV to `csv` and a ratio summary to `err`.
int run_bench_command(const BenchConfig& config, std::ostream& csv, std::ostream& err);

/// Entry point for the `slidebin` tool: `binarize` and `bench` subcommands.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slidebin::cli
