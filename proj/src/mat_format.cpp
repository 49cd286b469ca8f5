#include "lcode/mat_format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "lcode/error.hpp"

namespace lcode {

BitMatrix parse_mat(std::string_view text) {
  std::vector<BitVector> rows;
  std::size_t cols = 0;
  std::size_t line_no = 0;

  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] != '0' && line[i] != '1') {
        throw ParseError(line_no, i + 1,
                         "row " + std::to_string(rows.size() + 1) + ": unexpected character '" +
                             std::string(1, line[i]) + "' at line " + std::to_string(line_no) + ", column " +
                             std::to_string(i + 1));
      }
    }
    if (line.size() > BitVector::kMaxLen) {
      throw ParseError(line_no, 0,
                       "row " + std::to_string(rows.size() + 1) + ": " + std::to_string(line.size()) +
                           " columns exceeds the supported maximum of " + std::to_string(BitVector::kMaxLen));
    }
    if (rows.empty()) {
      cols = line.size();
    } else if (line.size() != cols) {
      throw ParseError(line_no, 0,
                       "row " + std::to_string(rows.size() + 1) + ": expected " + std::to_string(cols) +
                           " columns, found " + std::to_string(line.size()));
    }
    rows.push_back(BitVector::from_string(line));
  }
  if (rows.empty()) throw ParseError(line_no, 0, "no matrix rows found");
  return BitMatrix(cols, std::move(rows));
}

BitMatrix read_mat_file(const std::filesystem::path& path) { return parse_mat(read_text_file(path)); }

std::string format_mat(const BitMatrix& m, std::string_view comment) {
  std::string out;
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    for (std::string line; std::getline(lines, line);) out += "# " + line + "\n";
  }
  for (const auto& r : m.row_data()) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

void write_mat_file(const std::filesystem::path& path, const BitMatrix& m, std::string_view comment) {
  write_text_file(path, format_mat(m, comment));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace lcode
