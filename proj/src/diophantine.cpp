#include "lcode/diophantine.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <sstream>

#include "lcode/error.hpp"
#include "lcode/parallel.hpp"

namespace lcode {

bool DiophantineSystem::same_table(const DiophantineSystem& o) const {
  return k == o.k && n == o.n && d == o.d && d_max == o.d_max && cols == o.cols && rows == o.rows && a == o.a;
}

DiophantineSystem build_system(const MatrixGroup& group, std::size_t n, std::size_t d,
                               std::optional<std::size_t> d_max) {
  if (group.k == 0 || group.k > kMaxSystemDimension) {
    throw Error("system budget exceeded: k = " + std::to_string(group.k) + " (supported 1.." +
                std::to_string(kMaxSystemDimension) + ")");
  }
  const auto col_part = orbit_partition(group);
  const auto row_part = orbit_partition(group.transposed());

  DiophantineSystem sys;
  sys.k = group.k;
  sys.n = n;
  sys.d = d;
  sys.d_max = d_max;
  sys.group = group;
  for (std::uint32_t j = 0; j < col_part.count(); ++j) sys.cols.push_back({j, col_part.sizes[j], col_part.reps[j]});
  for (std::uint32_t i = 0; i < row_part.count(); ++i) sys.rows.push_back({i, row_part.reps[i]});

  const std::size_t m = sys.cols.size();
  const std::size_t r = sys.rows.size();

  // Bucket the nonzero vectors by column orbit.
  std::vector<std::uint32_t> start(m + 1, 0);
  for (std::uint32_t v = 1; v < col_part.orbit_of.size(); ++v) ++start[col_part.orbit_of[v] + 1];
  for (std::size_t j = 0; j < m; ++j) start[j + 1] += start[j];
  std::vector<std::uint32_t> members(start[m]);
  {
    auto fill = start;
    for (std::uint32_t v = 1; v < col_part.orbit_of.size(); ++v) members[fill[col_part.orbit_of[v]]++] = v;
  }

  sys.a.assign(r * m, 0);
  parallel_for(m, worker_count(), [&](std::size_t j) {
    std::vector<std::uint32_t> column(r, 0);
    for (auto idx = start[j]; idx < start[j + 1]; ++idx) {
      const auto c = members[idx];
      for (std::size_t i = 0; i < r; ++i) column[i] += std::popcount(sys.rows[i].rep & c) & 1;
    }
    for (std::size_t i = 0; i < r; ++i) sys.a[i * m + j] = column[i];
  });
  return sys;
}

std::vector<std::uint64_t> row_weights(const DiophantineSystem& system, const Selection& x) {
  if (x.size() != system.cols.size()) {
    throw Error("selection has " + std::to_string(x.size()) + " entries, system has " +
                std::to_string(system.cols.size()) + " column orbits");
  }
  std::vector<std::uint64_t> w(system.rows.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto* row = system.row_ptr(i);
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < x.size(); ++j) sum += std::uint64_t{row[j]} * x[j];
    w[i] = sum;
  }
  return w;
}

SelectionReport evaluate_selection(const DiophantineSystem& system, const Selection& x) {
  const auto w = row_weights(system, x);
  SelectionReport rep;
  rep.selection = x;
  for (std::size_t j = 0; j < x.size(); ++j) rep.total_length += std::uint64_t{system.cols[j].length} * x[j];
  if (!w.empty()) {
    const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
    rep.min_row_weight = *lo;
    rep.max_row_weight = *hi;
  }
  rep.rank_ok = !w.empty() && rep.min_row_weight > 0;
  rep.feasible = rep.total_length == system.n && rep.min_row_weight >= system.d &&
                 (!system.d_max || rep.max_row_weight <= *system.d_max) && !w.empty();
  return rep;
}

LinearCode materialize(const DiophantineSystem& system, const Selection& x) {
  if (!system.group) throw Error("system has no group attached; cannot list orbit members");
  const auto report = evaluate_selection(system, x);
  if (!report.feasible) throw Error("selection is not feasible");
  if (report.total_length > BitVector::kMaxLen) {
    throw Error("selected length " + std::to_string(report.total_length) + " exceeds 64");
  }

  BitMatrix gen(system.k, report.total_length);
  std::size_t pos = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 0) continue;
    const auto members = orbit_elements(*system.group, system.cols[j].rep);
    for (std::uint32_t rep = 0; rep < x[j]; ++rep) {
      for (const auto v : members) {
        for (std::size_t i = 0; i < system.k; ++i) {
          if ((v >> i) & 1U) gen.set(i, pos, true);
        }
        ++pos;
      }
    }
  }
  if (rank(gen) != system.k) throw Error("selection spans a degenerate code");

  LinearCode code(std::move(gen));
  const auto dist = weight_distribution(code);
  if (dist.min_nonzero_weight() != report.min_row_weight || dist.max_weight() != report.max_row_weight) {
    throw Error("internal consistency error: enumerated weights [" + std::to_string(dist.min_nonzero_weight()) +
                "," + std::to_string(dist.max_weight()) + "] differ from orbit algebra [" +
                std::to_string(report.min_row_weight) + "," + std::to_string(report.max_row_weight) + "]");
  }
  return code;
}

Selection selection_from_decomposition(const DiophantineSystem& system, const ColumnDecomposition& decomposition) {
  Selection x(system.cols.size(), 0);
  for (const auto& [id, use] : decomposition.orbits) {
    if (!use.whole) throw Error("orbit " + std::to_string(id) + " is only partially covered");
    if (id >= x.size()) throw Error("orbit id out of range");
    x[id] = use.multiplicity;
  }
  return x;
}

std::string format_system(const DiophantineSystem& s) {
  std::string out = "DIOSYS k=" + std::to_string(s.k) + " n=" + std::to_string(s.n) + " d=" + std::to_string(s.d) +
                    " dmax=" + (s.d_max ? std::to_string(*s.d_max) : std::string("-")) +
                    " rows=" + std::to_string(s.rows.size()) + " cols=" + std::to_string(s.cols.size()) + "\n";
  for (const auto& c : s.cols) {
    out += "COL " + std::to_string(c.id) + " " + std::to_string(c.length) + " " + to_hex(c.rep) + "\n";
  }
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    out += "ROW " + std::to_string(s.rows[i].id) + " " + to_hex(s.rows[i].rep);
    const auto* row = s.row_ptr(i);
    for (std::size_t j = 0; j < s.cols.size(); ++j) {
      out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::size_t header_value(const std::string& token, const std::string& key, std::size_t line) {
  const auto prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) throw ParseError(line, 0, "expected " + prefix + "<value>, found '" + token + "'");
  const auto value = token.substr(prefix.size());
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ParseError(line, 0, "invalid value for " + key + ": '" + value + "'");
  }
  return out;
}

}  // namespace

DiophantineSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, 0, "empty system file");

  DiophantineSystem s;
  std::size_t r = 0;
  std::size_t m = 0;
  {
    std::istringstream h(line);
    std::string magic, tk, tn, td, tdmax, tr, tm, rest;
    if (!(h >> magic >> tk >> tn >> td >> tdmax >> tr >> tm) || magic != "DIOSYS" || (h >> rest)) {
      throw ParseError(1, 0, "malformed DIOSYS header");
    }
    s.k = header_value(tk, "k", 1);
    s.n = header_value(tn, "n", 1);
    s.d = header_value(td, "d", 1);
    if (tdmax != "dmax=-") s.d_max = header_value(tdmax, "dmax", 1);
    r = header_value(tr, "rows", 1);
    m = header_value(tm, "cols", 1);
  }

  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) throw ParseError(line_no + 1, 0, std::string("missing ") + what + " line");
    ++line_no;
    return std::istringstream(line);
  };

  s.cols.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    auto f = next_line("COL");
    std::string tag, hex, rest;
    ColumnOrbit c;
    if (!(f >> tag >> c.id >> c.length >> hex) || tag != "COL" || (f >> rest)) {
      throw ParseError(line_no, 0, "expected \"COL <orbit_id> <length> <rep_hex>\"");
    }
    try {
      c.rep = parse_hex(hex);
    } catch (const Error& e) {
      throw ParseError(line_no, 0, e.what());
    }
    s.cols.push_back(c);
  }
  s.rows.reserve(r);
  s.a.reserve(r * m);
  for (std::size_t i = 0; i < r; ++i) {
    auto f = next_line("ROW");
    std::string tag, hex, rest;
    RowOrbit ro;
    if (!(f >> tag >> ro.id >> hex) || tag != "ROW") {
      throw ParseError(line_no, 0, "expected \"ROW <orbit_id> <rep_hex> <counts...>\"");
    }
    try {
      ro.rep = parse_hex(hex);
    } catch (const Error& e) {
      throw ParseError(line_no, 0, e.what());
    }
    for (std::size_t j = 0; j < m; ++j) {
      std::uint32_t v = 0;
      if (!(f >> v)) throw ParseError(line_no, 0, "expected " + std::to_string(m) + " counts");
      s.a.push_back(v);
    }
    if (f >> rest) throw ParseError(line_no, 0, "too many counts");
    s.rows.push_back(ro);
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty()) throw ParseError(line_no, 0, "unexpected trailing content");
  }
  return s;
}

std::string format_selection(const Selection& x) {
  std::string out;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != 0) out += std::to_string(j) + " " + std::to_string(x[j]) + "\n";
  }
  return out;
}

Selection parse_selection(const std::string& text, std::size_t orbit_count) {
  Selection x(orbit_count, 0);
  std::istringstream in(text);
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream f(line);
    std::size_t id = 0;
    std::uint32_t mult = 0;
    std::string rest;
    if (!(f >> id >> mult) || (f >> rest)) throw ParseError(line_no, 0, "expected \"orbit_id multiplicity\"");
    if (id >= orbit_count) throw ParseError(line_no, 0, "orbit id " + std::to_string(id) + " out of range");
    x[id] = mult;
  }
  return x;
}

}  // namespace lcode
