#include "lcode/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "lcode/error.hpp"
#include "lcode/extension.hpp"
#include "lcode/fixture_data.hpp"
#include "lcode/mat_format.hpp"
#include "lcode/orbits.hpp"

namespace lcode {

std::string_view embedded_gamma47_text() { return fixture_data::kGamma47; }
std::string_view embedded_m15_text() { return fixture_data::kM15; }

WeightDistribution make_distribution(std::size_t n, const std::vector<std::pair<std::size_t, std::uint64_t>>& terms) {
  WeightDistribution d(n);
  for (const auto& [w, c] : terms) d.counts.at(w) = c;
  return d;
}

const FixtureSet& embedded_fixtures() {
  static const FixtureSet fixtures = [] {
    FixtureSet f;
    f.gamma47 = parse_mat(embedded_gamma47_text());
    f.m15 = parse_mat(embedded_m15_text());
    f.gamma47_distribution = make_distribution(47, {{0, 1},
                                                    {16, 1082},
                                                    {18, 2560},
                                                    {20, 3360},
                                                    {22, 6656},
                                                    {24, 9000},
                                                    {26, 5632},
                                                    {28, 2400},
                                                    {30, 1536},
                                                    {32, 541}});
    f.extended48_distribution = make_distribution(48, {{0, 1},
                                                       {16, 1623},
                                                       {18, 4096},
                                                       {20, 5760},
                                                       {22, 12288},
                                                       {24, 18000},
                                                       {26, 12288},
                                                       {28, 5760},
                                                       {30, 4096},
                                                       {32, 1623},
                                                       {48, 1}});
    return f;
  }();
  return fixtures;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool VerifyOutcome::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed || c.informational; });
}

namespace {

template <class F>
void run_check(VerifyOutcome& out, std::string name, F&& body) {
  VerifyCheck check;
  check.name = std::move(name);
  try {
    check.passed = body(check.detail);
  } catch (const Error& e) {
    check.passed = false;
    check.detail = std::string("error: ") + e.what();
  }
  out.checks.push_back(std::move(check));
}

}  // namespace

VerifyOutcome verify_fixtures(const FixtureSet& f) {
  VerifyOutcome out;

  run_check(out, "group generator order", [&](std::string& detail) {
    const auto order = matrix_order(f.m15);
    detail = "order=" + std::to_string(order) + " expected=" + std::to_string(f.group_order);
    return order == f.group_order;
  });

  run_check(out, "orbit count", [&](std::string& detail) {
    const auto group = generate_cyclic(f.m15);
    const auto direct = orbit_partition(group).count();
    const auto burnside = burnside_count(group);
    const auto transpose = orbit_partition(group.transposed()).count();
    detail = "direct=" + std::to_string(direct) + " burnside=" + std::to_string(burnside) +
             " transpose=" + std::to_string(transpose) + " expected=" + std::to_string(f.orbit_count);
    return direct == f.orbit_count && burnside == f.orbit_count && transpose == f.orbit_count;
  });

  run_check(out, "[47,15] weight distribution", [&](std::string& detail) {
    const LinearCode code(f.gamma47);
    const auto dist = weight_distribution(code);
    const auto d = dist.min_nonzero_weight();
    const auto dmax = dist.max_weight();
    detail = "n=" + std::to_string(code.length()) + " k=" + std::to_string(code.dimension()) +
             " d=" + std::to_string(d) + " dmax=" + std::to_string(dmax) + " " + enumerator_string(dist);
    return dist == f.gamma47_distribution && dist.total() == (std::uint64_t{1} << code.dimension()) && d == 16 &&
           dmax == 32;
  });

  run_check(out, "[48,16,16] extension", [&](std::string& detail) {
    const auto report = extension_report(LinearCode(f.gamma47), 1);
    const auto& dist = report.extended_distribution;
    bool symmetric = true;
    for (std::size_t w = 0; w <= dist.n; ++w) symmetric = symmetric && dist[w] == dist[dist.n - w];
    detail = "[" + std::to_string(report.extended.length()) + "," + std::to_string(report.extended.dimension()) +
             "," + std::to_string(report.verified_d) + "] predicted_d=" + std::to_string(report.predicted_d) + " " +
             enumerator_string(dist);
    return dist == f.extended48_distribution && report.prediction_holds() && report.verified_d == 16 && symmetric;
  });

  VerifyCheck columns{"column orbit decomposition", false, true, {}};
  try {
    const auto group = generate_cyclic(f.m15);
    const auto decomposition = column_orbit_decomposition(f.gamma47, orbit_partition(group));
    std::ostringstream detail;
    detail << "touched=" << decomposition.touched() << " columns=" << decomposition.total_columns()
           << " whole=" << (decomposition.union_of_whole_orbits() ? "yes" : "no") << " sizes=";
    bool first = true;
    for (const auto& [id, use] : decomposition.orbits) {
      detail << (first ? "" : ",") << use.size;
      first = false;
    }
    columns.passed = decomposition.union_of_whole_orbits() && decomposition.touched() == f.touched_orbits &&
                     decomposition.total_columns() == f.gamma47.cols();
    if (!columns.passed) detail << " (generator columns are not a union of whole orbits in this basis)";
    columns.detail = detail.str();
  } catch (const Error& e) {
    columns.detail = std::string("error: ") + e.what();
  }
  out.checks.push_back(std::move(columns));
  return out;
}

}  // namespace lcode
