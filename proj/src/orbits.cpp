#include "lcode/orbits.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "lcode/error.hpp"

namespace lcode {

MatrixGroup MatrixGroup::transposed() const {
  MatrixGroup t{k, {}};
  t.elements.reserve(elements.size());
  for (const auto& g : elements) t.elements.push_back(g.transpose());
  return t;
}

MatrixGroup generate_cyclic(const BitMatrix& generator) {
  const auto order = matrix_order(generator);
  MatrixGroup group{generator.rows(), {}};
  group.elements.reserve(order);
  BitMatrix power = BitMatrix::identity(generator.rows());
  for (std::uint64_t i = 0; i < order; ++i) {
    group.elements.push_back(power);
    power = mat_mul(power, generator);
  }
  return group;
}

std::uint32_t apply(const BitMatrix& g, std::uint32_t v) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    out |= static_cast<std::uint32_t>(std::popcount(g.row(i).word() & v) & 1) << i;
  }
  return out;
}

namespace {

void check_budget(std::size_t k) {
  if (k == 0 || k > kMaxOrbitDimension) {
    throw Error("orbit enumeration budget exceeded: k = " + std::to_string(k) + " (supported 1.." +
                std::to_string(kMaxOrbitDimension) + ")");
  }
}

}  // namespace

OrbitPartition orbit_partition(const MatrixGroup& group) {
  check_budget(group.k);
  const std::uint32_t space = std::uint32_t{1} << group.k;
  constexpr auto kUnvisited = ~std::uint32_t{0};

  OrbitPartition part{group.k, std::vector<std::uint32_t>(space, kUnvisited), {}, {}};
  for (std::uint32_t v = 1; v < space; ++v) {
    if (part.orbit_of[v] != kUnvisited) continue;
    const auto id = static_cast<std::uint32_t>(part.reps.size());
    std::uint32_t size = 0;
    for (const auto& g : group.elements) {
      const auto image = apply(g, v);
      if (part.orbit_of[image] == kUnvisited) {
        part.orbit_of[image] = id;
        ++size;
      }
    }
    part.reps.push_back(v);
    part.sizes.push_back(size);
  }
  part.orbit_of[0] = kUnvisited;
  return part;
}

std::vector<std::uint32_t> orbit_elements(const MatrixGroup& group, std::uint32_t v) {
  std::vector<std::uint32_t> out;
  out.reserve(group.order());
  for (const auto& g : group.elements) out.push_back(apply(g, v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t burnside_count(const MatrixGroup& group) {
  if (group.k >= 64) throw Error("burnside_count supports k < 64");
  const BitMatrix id = BitMatrix::identity(group.k);
  std::uint64_t fixed = 0;
  for (const auto& g : group.elements) {
    std::vector<BitVector> rows;
    rows.reserve(group.k);
    for (std::size_t i = 0; i < group.k; ++i) rows.push_back(g.row(i) ^ id.row(i));
    const auto nullity = group.k - rank(BitMatrix(group.k, std::move(rows)));
    fixed += (std::uint64_t{1} << nullity) - 1;
  }
  if (fixed % group.order() != 0) throw Error("fixed-point total is not divisible by the group order");
  return fixed / group.order();
}

bool ColumnDecomposition::union_of_whole_orbits() const {
  return std::all_of(orbits.begin(), orbits.end(), [](const auto& kv) { return kv.second.whole; });
}

std::size_t ColumnDecomposition::total_columns() const {
  std::size_t sum = 0;
  for (const auto& [id, use] : orbits) sum += use.columns;
  return sum;
}

ColumnDecomposition column_orbit_decomposition(const BitMatrix& gen, const OrbitPartition& partition) {
  if (gen.rows() != partition.k) {
    throw Error("generator has " + std::to_string(gen.rows()) + " rows but the partition acts on GF(2)^" +
                std::to_string(partition.k));
  }
  std::map<std::uint32_t, std::map<std::uint32_t, std::uint32_t>> hits;  // orbit -> vector -> count
  for (std::size_t j = 0; j < gen.cols(); ++j) {
    const auto v = static_cast<std::uint32_t>(gen.column(j).word());
    if (v == 0) throw Error("column " + std::to_string(j) + " is zero");
    ++hits[partition.orbit_of[v]][v];
  }

  ColumnDecomposition out;
  for (const auto& [id, vectors] : hits) {
    OrbitUse use;
    use.size = partition.sizes[id];
    for (const auto& [v, c] : vectors) use.columns += c;
    const auto first = vectors.begin()->second;
    use.whole = vectors.size() == use.size &&
                std::all_of(vectors.begin(), vectors.end(), [&](const auto& kv) { return kv.second == first; });
    use.multiplicity = use.whole ? first : 0;
    out.orbits.emplace(id, use);
  }
  return out;
}

std::string to_hex(std::uint32_t v) {
  char buf[16];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, 16);
  return std::string(buf, end);
}

std::uint32_t parse_hex(const std::string& text) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, 16);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw Error("invalid hex value '" + text + "'");
  return v;
}

std::vector<OrbitSummary> summarize(const OrbitPartition& partition) {
  std::vector<OrbitSummary> out;
  out.reserve(partition.count());
  for (std::uint32_t i = 0; i < partition.count(); ++i) out.push_back({i, partition.sizes[i], partition.reps[i]});
  return out;
}

std::string format_partition(const OrbitPartition& partition) {
  std::string out;
  for (const auto& o : summarize(partition)) {
    out += std::to_string(o.id) + " " + std::to_string(o.size) + " " + to_hex(o.rep) + "\n";
  }
  return out;
}

std::vector<OrbitSummary> parse_partition(const std::string& text) {
  std::vector<OrbitSummary> out;
  std::istringstream in(text);
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    OrbitSummary o;
    std::string hex, rest;
    if (!(fields >> o.id >> o.size >> hex) || (fields >> rest)) {
      throw ParseError(line_no, 0, "expected \"orbit_id size rep_hex\"");
    }
    try {
      o.rep = parse_hex(hex);
    } catch (const Error& e) {
      throw ParseError(line_no, 0, e.what());
    }
    out.push_back(o);
  }
  return out;
}

}  // namespace lcode
