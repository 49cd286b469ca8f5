#pragma once

// Subcommand bodies of the lcode tool. Each returns the process exit code:
// 0 success, 1 failed assertion or infeasible search, 2 input/format error.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>

namespace lcode::cli {

using Path = std::filesystem::path;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;

int analyze(const Path& matrix, std::ostream& out, std::ostream& err);
int extend(const Path& matrix, std::size_t pad, const std::optional<Path>& out_file, std::ostream& out,
           std::ostream& err);
int order(const Path& matrix, std::ostream& out, std::ostream& err);
int orbits(const Path& group, const std::optional<Path>& out_file, std::ostream& out, std::ostream& err);
int system(const Path& group, std::size_t n, std::size_t d, std::optional<std::size_t> dmax, const Path& out_file,
           std::ostream& out, std::ostream& err);

struct SearchArgs {
  Path system;
  std::uint64_t seed = 1;
  std::uint64_t iterations = 100000;
  std::uint32_t restarts = 10;
  std::optional<std::uint32_t> cap;   // bounded domain when set
  std::optional<Path> group;          // needed to materialize the generator
  std::optional<Path> selection_out;  // default: stdout
  std::optional<Path> matrix_out;     // default: stdout
};
int search(const SearchArgs& args, std::ostream& out, std::ostream& err);

/// Uses the embedded fixtures unless replacements are given.
int verify_paper(const std::optional<Path>& gamma, const std::optional<Path>& group, std::ostream& out,
                 std::ostream& err);

}  // namespace lcode::cli
