#pragma once

// MAT text format: optional '#' comment lines, then one line per matrix row
// made only of '0'/'1' characters. All rows have equal length; the leftmost
// character is column 0. Blank lines are ignored.

#include <filesystem>
#include <string>
#include <string_view>

#include "lcode/gf2.hpp"

namespace lcode {

/// Throws ParseError naming the offending line (and column for bad characters).
BitMatrix parse_mat(std::string_view text);
BitMatrix read_mat_file(const std::filesystem::path& path);

std::string format_mat(const BitMatrix& m, std::string_view comment = {});
void write_mat_file(const std::filesystem::path& path, const BitMatrix& m, std::string_view comment = {});

/// Reads a whole file; throws Error if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace lcode
