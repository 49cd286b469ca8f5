#pragma once

// Orbits of a matrix group acting on the nonzero column vectors of GF(2)^k.
//
// Vectors are encoded as integers: bit i of the vector is bit i of the code.
// Orbit ids run 0..count-1 in increasing order of their canonical
// representative, the numerically smallest encoding in the orbit.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lcode/gf2.hpp"

namespace lcode {

struct MatrixGroup {
  std::size_t k = 0;
  std::vector<BitMatrix> elements;  // elements[i] == M^i; elements[0] == I

  std::size_t order() const { return elements.size(); }
  /// The group {g^T}; for a cyclic group this is generated by M^T.
  MatrixGroup transposed() const;
};

MatrixGroup generate_cyclic(const BitMatrix& generator);

/// Applies g to the vector with integer encoding v.
std::uint32_t apply(const BitMatrix& g, std::uint32_t v);

inline constexpr std::size_t kMaxOrbitDimension = 24;

struct OrbitPartition {
  std::size_t k = 0;
  std::vector<std::uint32_t> orbit_of;  // indexed by vector code; entry 0 (zero vector) unused
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> sizes;

  std::size_t count() const { return reps.size(); }
};

OrbitPartition orbit_partition(const MatrixGroup& group);

/// Sorted members of the orbit containing v.
std::vector<std::uint32_t> orbit_elements(const MatrixGroup& group, std::uint32_t v);

/// Orbit count from fixed points: (1/|G|) sum over g of (2^{nullity(g+I)} - 1).
std::uint64_t burnside_count(const MatrixGroup& group);

struct OrbitUse {
  std::uint32_t size = 0;          // orbit cardinality
  std::uint32_t columns = 0;       // columns falling in this orbit
  bool whole = false;              // every orbit vector appears, all equally often
  std::uint32_t multiplicity = 0;  // that common count when whole, else 0
};

struct ColumnDecomposition {
  std::map<std::uint32_t, OrbitUse> orbits;  // orbit id -> usage

  std::size_t touched() const { return orbits.size(); }
  bool union_of_whole_orbits() const;
  std::size_t total_columns() const;
};

/// Classifies each column of `gen` (read as a length-k vector). Throws on zero columns.
ColumnDecomposition column_orbit_decomposition(const BitMatrix& gen, const OrbitPartition& partition);

/// "orbit_id size rep_hex" lines.
struct OrbitSummary {
  std::uint32_t id = 0;
  std::uint32_t size = 0;
  std::uint32_t rep = 0;
  friend bool operator==(const OrbitSummary&, const OrbitSummary&) = default;
};
std::vector<OrbitSummary> summarize(const OrbitPartition& partition);
std::string format_partition(const OrbitPartition& partition);
std::vector<OrbitSummary> parse_partition(const std::string& text);

std::string to_hex(std::uint32_t v);
std::uint32_t parse_hex(const std::string& text);

}  // namespace lcode
