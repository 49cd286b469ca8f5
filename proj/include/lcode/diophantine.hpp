#pragma once

// Orbit-count feasibility system for codes with a prescribed automorphism group.
//
// Unknowns x_j count how often column orbit j is used. A message v in row
// orbit i (taken under the transpose group) has codeword weight
// sum_j A[i][j] * x_j, where A[i][j] counts the vectors c of column orbit j
// with <v, c> = 1. This is constant on row orbits because <v, Mc> = <M^T v, c>.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcode/code.hpp"
#include "lcode/orbits.hpp"

namespace lcode {

struct ColumnOrbit {
  std::uint32_t id = 0;
  std::uint32_t length = 0;
  std::uint32_t rep = 0;
  friend bool operator==(const ColumnOrbit&, const ColumnOrbit&) = default;
};

struct RowOrbit {
  std::uint32_t id = 0;
  std::uint32_t rep = 0;
  friend bool operator==(const RowOrbit&, const RowOrbit&) = default;
};

struct DiophantineSystem {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  std::optional<std::size_t> d_max;
  std::vector<ColumnOrbit> cols;
  std::vector<RowOrbit> rows;
  std::vector<std::uint32_t> a;  // row-major, rows.size() x cols.size()
  /// The column-side group; required by materialize(), absent after parsing a file.
  std::optional<MatrixGroup> group;

  std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols.size() + j]; }
  const std::uint32_t* row_ptr(std::size_t i) const { return a.data() + i * cols.size(); }

  /// Compares the tabular content (the attached group is ignored).
  bool same_table(const DiophantineSystem& other) const;
};

inline constexpr std::size_t kMaxSystemDimension = 20;

DiophantineSystem build_system(const MatrixGroup& group, std::size_t n, std::size_t d,
                               std::optional<std::size_t> d_max = std::nullopt);

using Selection = std::vector<std::uint32_t>;

struct SelectionReport {
  Selection selection;
  std::uint64_t total_length = 0;
  std::uint64_t min_row_weight = 0;
  std::uint64_t max_row_weight = 0;
  bool feasible = false;
  /// Selected columns span GF(2)^k, i.e. every nonzero message has positive weight.
  bool rank_ok = false;
};

SelectionReport evaluate_selection(const DiophantineSystem& system, const Selection& x);

/// Row weights sum_j A[i][j] * x_j.
std::vector<std::uint64_t> row_weights(const DiophantineSystem& system, const Selection& x);

/// Generator with columns grouped by orbit id; within an orbit the members appear in
/// increasing integer order, and that block is repeated x_j times.
/// Verifies rank and the weight bounds by enumeration before returning.
LinearCode materialize(const DiophantineSystem& system, const Selection& x);

/// Reads multiplicities off a generator whose columns form whole orbits.
Selection selection_from_decomposition(const DiophantineSystem& system, const ColumnDecomposition& decomposition);

std::string format_system(const DiophantineSystem& system);
DiophantineSystem parse_system(const std::string& text);

/// "orbit_id multiplicity" for every nonzero entry.
std::string format_selection(const Selection& x);
Selection parse_selection(const std::string& text, std::size_t orbit_count);

}  // namespace lcode
