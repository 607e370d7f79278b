#pragma once

// Subcommands of the gett tool. Each returns the process exit code:
// 0 ok, 1 validation or verification failure, 2 I/O failure.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gett/layout.hpp"

namespace gett::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kIoError = 2 };

struct RunOptions {
  std::filesystem::path a_path, b_path, out_path;
  int conts = 0;
  std::string cont_a, cont_b, perm;     // comma-separated index lists
  std::optional<std::string> out_ext;   // checked against the derived extents
  std::optional<std::string> out_inc;   // default: packed layout
};

struct VerifyOptions {
  std::string suite = "all";
  int cases = 100;
  std::uint64_t seed = 1;
};

struct GenOptions {
  std::string category;
  std::uint64_t seed = 1;
  std::filesystem::path out_dir;
};

struct BenchOptions {
  int rank = 2;
  index_t extent = 64;
  int conts = 1;
  int reps = 5;
};

/// "1,2,3" -> {1,2,3}; "" -> {}. Throws std::invalid_argument.
std::vector<index_t> parse_index_list(const std::string& text);

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace gett::cli
