#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Binary linear code toolkit: weight enumerators, all-one extensions, orbit systems"};
  app.require_subcommand(1);

  std::string file;
  std::optional<std::string> out_file;

  auto* analyze = app.add_subcommand("analyze", "Print n, k, d, max weight and the weight enumerator");
  analyze->add_option("file", file, "Generator matrix (MAT format)")->required();

  std::size_t pad = 1;
  auto* extend = app.add_subcommand("extend", "Pad with zero columns and adjoin the all-one row");
  extend->add_option("file", file, "Generator matrix (MAT format)")->required();
  extend->add_option("--pad", pad, "Number of zero columns to append")->required();
  extend->add_option("--out", out_file, "Write the extended generator here instead of stdout");

  auto* order = app.add_subcommand("order", "Multiplicative order of a square matrix");
  order->add_option("file", file, "Matrix (MAT format)")->required();

  auto* orbits = app.add_subcommand("orbits", "Orbits of the cyclic group generated by a matrix");
  orbits->add_option("file", file, "Group generator (MAT format)")->required();
  orbits->add_option("--out", out_file, "Write \"orbit_id size rep_hex\" lines here");

  std::size_t n = 0;
  std::size_t d = 0;
  std::optional<std::size_t> dmax;
  std::string system_out;
  auto* system = app.add_subcommand("system", "Build the orbit feasibility system (DIOSYS format)");
  system->add_option("file", file, "Group generator (MAT format)")->required();
  system->add_option("--n", n, "Target length")->required();
  system->add_option("--d", d, "Minimum weight")->required();
  system->add_option("--dmax", dmax, "Maximum weight");
  system->add_option("--out", system_out, "Output system file")->required();

  lcode::cli::SearchArgs search_args;
  std::string search_file;
  std::optional<std::string> group_file, selection_out, matrix_out;
  std::optional<std::uint32_t> cap;
  auto* search = app.add_subcommand("search", "Local search for a feasible orbit selection");
  search->add_option("file", search_file, "System file (DIOSYS format)")->required();
  search->add_option("--seed", search_args.seed, "Random seed")->required();
  search->add_option("--iters", search_args.iterations, "Iterations per restart")->capture_default_str();
  search->add_option("--restarts", search_args.restarts, "Number of restarts")->capture_default_str();
  search->add_option("--cap", cap, "Allow multiplicities 0..cap instead of 0/1");
  search->add_option("--group", group_file, "Group generator, needed to materialize the code");
  search->add_option("--selection-out", selection_out, "Write \"orbit_id multiplicity\" lines here");
  search->add_option("--out", matrix_out, "Write the materialized generator here");

  std::optional<std::string> gamma_override, group_override;
  auto* verify = app.add_subcommand("verify-paper", "Reproduce the [47,15,16] and [48,16,16] results");
  verify->add_option("--gamma", gamma_override, "Replace the embedded 15x47 generator");
  verify->add_option("--group", group_override, "Replace the embedded 15x15 group generator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lcode::cli::kExitInput;
  }

  auto path = [](const std::optional<std::string>& s) -> std::optional<lcode::cli::Path> {
    if (s) return lcode::cli::Path(*s);
    return std::nullopt;
  };

  auto& out = std::cout;
  auto& err = std::cerr;
  if (*analyze) return lcode::cli::analyze(file, out, err);
  if (*extend) return lcode::cli::extend(file, pad, path(out_file), out, err);
  if (*order) return lcode::cli::order(file, out, err);
  if (*orbits) return lcode::cli::orbits(file, path(out_file), out, err);
  if (*system) return lcode::cli::system(file, n, d, dmax, system_out, out, err);
  if (*search) {
    search_args.system = search_file;
    search_args.cap = cap;
    search_args.group = path(group_file);
    search_args.selection_out = path(selection_out);
    search_args.matrix_out = path(matrix_out);
    return lcode::cli::search(search_args, out, err);
  }
  if (*verify) return lcode::cli::verify_paper(path(gamma_override), path(group_override), out, err);
  return lcode::cli::kExitInput;
}
