#include "commands.hpp"

#include <chrono>

#include "lcode/code.hpp"
#include "lcode/diophantine.hpp"
#include "lcode/error.hpp"
#include "lcode/extension.hpp"
#include "lcode/fixtures.hpp"
#include "lcode/mat_format.hpp"
#include "lcode/orbits.hpp"
#include "lcode/search.hpp"

namespace lcode::cli {

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  }
}

std::string params(const LinearCode& code, std::size_t d) {
  return "[" + std::to_string(code.length()) + "," + std::to_string(code.dimension()) + "," + std::to_string(d) + "]";
}

}  // namespace

int analyze(const Path& matrix, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LinearCode code(read_mat_file(matrix));
    const auto dist = weight_distribution(code);
    const bool total_ok = dist.total() == (std::uint64_t{1} << code.dimension());
    out << "n=" << code.length() << " k=" << code.dimension();
    if (code.dimension() > 0) out << " d=" << dist.min_nonzero_weight() << " dmax=" << dist.max_weight();
    out << "\n";
    out << "enumerator: " << enumerator_string(dist) << "\n";
    out << "sum A_w = " << dist.total() << (total_ok ? " == " : " != ") << "2^" << code.dimension() << "\n";
    out << format_distribution(dist);
    return total_ok ? kExitOk : kExitFailed;
  });
}

int extend(const Path& matrix, std::size_t pad, const std::optional<Path>& out_file, std::ostream& out,
           std::ostream& err) {
  return guarded(err, [&] {
    const LinearCode code(read_mat_file(matrix));
    const auto report = extension_report(code, pad);
    const auto comment = "extended " + params(report.extended, report.verified_d) + " code";
    if (out_file) {
      write_mat_file(*out_file, report.extended.generator(), comment);
    } else {
      out << format_mat(report.extended.generator(), comment);
    }
    out << format_report(report);
    out << format_distribution(report.extended_distribution);
    return report.prediction_holds() ? kExitOk : kExitFailed;
  });
}

int order(const Path& matrix, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << "order=" << matrix_order(read_mat_file(matrix)) << "\n";
    return kExitOk;
  });
}

int orbits(const Path& group_file, const std::optional<Path>& out_file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto group = generate_cyclic(read_mat_file(group_file));
    const auto partition = orbit_partition(group);
    const auto burnside = burnside_count(group);
    out << partition.count() << " orbits\n";
    out << "group_order=" << group.order() << " k=" << group.k << " burnside=" << burnside << "\n";
    if (out_file) write_text_file(*out_file, format_partition(partition));
    return burnside == partition.count() ? kExitOk : kExitFailed;
  });
}

int system(const Path& group_file, std::size_t n, std::size_t d, std::optional<std::size_t> dmax,
           const Path& out_file, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto group = generate_cyclic(read_mat_file(group_file));
    const auto sys = build_system(group, n, d, dmax);
    write_text_file(out_file, format_system(sys));
    out << "system rows=" << sys.rows.size() << " cols=" << sys.cols.size() << " written to " << out_file.string()
        << "\n";
    return kExitOk;
  });
}

int search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto sys = parse_system(read_text_file(args.system));
    if (args.group) {
      const auto group = generate_cyclic(read_mat_file(*args.group));
      if (group.k != sys.k) throw InputError("group dimension does not match the system");
      sys.group = group;
    }

    SearchConfig config;
    config.seed = args.seed;
    config.max_iterations = args.iterations;
    config.restarts = args.restarts;
    if (args.cap) {
      config.domain = Domain::bounded;
      config.cap = *args.cap;
    }

    const auto result = search(sys, config);
    out << "status=" << (result.status == SearchStatus::found ? "found" : "exhausted")
        << " cost=" << result.best_cost << " iterations=" << result.iterations_used << " restart=" << result.restart
        << "\n";

    const auto selection = format_selection(result.best_selection);
    if (args.selection_out) {
      write_text_file(*args.selection_out, selection);
    } else {
      out << selection;
    }
    if (result.status != SearchStatus::found) return kExitFailed;

    if (sys.group) {
      const auto code = materialize(sys, result.best_selection);
      const auto d = min_distance(code);
      const auto comment = "materialized " + params(code, d) + " code, max weight " + std::to_string(max_weight(code));
      if (args.matrix_out) {
        write_mat_file(*args.matrix_out, code.generator(), comment);
      } else {
        out << format_mat(code.generator(), comment);
      }
    } else {
      out << "# pass --group to materialize the generator\n";
    }
    return kExitOk;
  });
}

int verify_paper(const std::optional<Path>& gamma, const std::optional<Path>& group, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    auto fixtures = embedded_fixtures();
    if (gamma) fixtures.gamma47 = read_mat_file(*gamma);
    if (group) fixtures.m15 = read_mat_file(*group);

    const auto start = std::chrono::steady_clock::now();
    const auto outcome = verify_fixtures(fixtures);
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    for (const auto& c : outcome.checks) {
      const char* tag = c.passed ? "PASS" : (c.informational ? "INFO" : "FAIL");
      out << tag << "  " << c.name << ": " << c.detail << "\n";
    }
    out << (outcome.passed() ? "PASS" : "FAIL") << " (" << elapsed << " s)\n";
    return outcome.passed() ? kExitOk : kExitFailed;
  });
}

}  // namespace lcode::cli
