#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minmax/action.hpp"
#include "minmax/census.hpp"
#include "minmax/errors.hpp"
#include "minmax/perm.hpp"
#include "minmax/render.hpp"
#include "minmax/tree.hpp"

namespace {

minmax::TreeVariant parse_variant(const std::string& v) {
  return v == "min12" ? minmax::TreeVariant::Min1Min2
                      : minmax::TreeVariant::MinMax;
}

// Single quoted argument, or one permutation per stdin line in batch mode.
std::vector<minmax::Permutation> gather_inputs(const std::string& perm_arg,
                                               bool use_stdin) {
  std::vector<minmax::Permutation> inputs;
  if (use_stdin) {
    std::string line;
    while (std::getline(std::cin, line)) {
      if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
      inputs.push_back(minmax::parse_permutation(line));
    }
    if (inputs.empty())
      throw minmax::Empty("no permutations on standard input");
  } else {
    if (perm_arg.empty())
      throw minmax::Empty("pass a permutation argument or --stdin");
    inputs.push_back(minmax::parse_permutation(perm_arg));
  }
  return inputs;
}

int workers_or_default(int cli_workers) {
  if (cli_workers > 0) return cli_workers;
  if (const char* env = std::getenv("MINMAX_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw minmax::Error("MINMAX_WORKERS must be a positive integer");
    return static_cast<int>(v);
  }
  return minmax::default_census_workers();
}

void print_json(const nlohmann::ordered_json& j) {
  std::cout << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "minmax trees of permutations: build trees, apply the psi involutions, "
      "enumerate orbits, run exhaustive censuses, sample, and verify"};
  app.require_subcommand(1);

  std::string perm_arg;
  bool use_stdin = false;
  std::string variant = "minmax";
  std::string format = "text";

  auto* tree_cmd =
      app.add_subcommand("tree", "Build the tree of a permutation");
  tree_cmd->add_option("perm", perm_arg, "permutation, e.g. \"3 1 2\"");
  tree_cmd->add_flag("--stdin", use_stdin, "read permutations, one per line");
  tree_cmd->add_option("--variant", variant, "tree variant")
      ->check(CLI::IsMember({"minmax", "min12"}));
  tree_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "dot", "json"}));

  int psi_index = 0;
  auto* psi_cmd =
      app.add_subcommand("psi", "Apply the involution at one position");
  psi_cmd->add_option("perm", perm_arg, "permutation");
  psi_cmd->add_option("i", psi_index, "position, 1-based")->required();
  psi_cmd->add_flag("--stdin", use_stdin, "read permutations, one per line");

  std::vector<int> gens;
  auto* orbit_cmd = app.add_subcommand(
      "orbit", "Closure of a permutation under chosen generators");
  orbit_cmd->add_option("perm", perm_arg, "permutation");
  orbit_cmd->add_flag("--stdin", use_stdin, "read permutations, one per line");
  orbit_cmd
      ->add_option("--gens", gens, "generator positions (default: all)")
      ->delimiter(',');
  orbit_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* fixed_cmd =
      app.add_subcommand("fixed", "Positions fixed by every involution");
  fixed_cmd->add_option("perm", perm_arg, "permutation");
  fixed_cmd->add_flag("--stdin", use_stdin, "read permutations, one per line");
  fixed_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  int census_n = 0;
  int cli_workers = 0;
  bool allow_large = false;
  auto* census_cmd = app.add_subcommand(
      "census", "Exact children-count census over all of S_n");
  census_cmd->add_option("n", census_n, "permutation size")->required();
  census_cmd->add_option("--variant", variant, "tree variant")
      ->check(CLI::IsMember({"minmax", "min12"}));
  census_cmd->add_option("--workers", cli_workers,
                         "worker threads (default: hardware, or "
                         "MINMAX_WORKERS)");
  census_cmd->add_flag("--allow-large", allow_large,
                       "raise the size cap from 13 to 20");
  census_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  int sample_n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  auto* sample_cmd = app.add_subcommand(
      "sample", "Monte Carlo leaf-probability estimates");
  sample_cmd->add_option("n", sample_n, "permutation size")->required();
  sample_cmd->add_option("trials", trials, "number of samples")->required();
  sample_cmd->add_option("--seed", seed, "generator seed")->required();
  sample_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  int n_max = 0;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Run every invariant and count check up to n_max");
  verify_cmd->add_option("n_max", n_max, "largest size to check")->required();
  verify_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(tree_cmd)) {
      const auto inputs = gather_inputs(perm_arg, use_stdin);
      bool first = true;
      for (const auto& p : inputs) {
        const auto t = minmax::build_tree_fast(p, parse_variant(variant));
        if (!first && format != "json") std::cout << '\n';
        first = false;
        if (format == "dot")
          std::cout << minmax::export_dot(t);
        else if (format == "json")
          print_json(minmax::tree_to_json(t));
        else
          std::cout << minmax::render_ascii(t);
      }
    } else if (app.got_subcommand(psi_cmd)) {
      for (const auto& p : gather_inputs(perm_arg, use_stdin))
        std::cout << minmax::psi(p, psi_index).to_string() << '\n';
    } else if (app.got_subcommand(orbit_cmd)) {
      const auto inputs = gather_inputs(perm_arg, use_stdin);
      bool first = true;
      for (const auto& p : inputs) {
        minmax::GeneratorSet use = gens;
        if (use.empty())
          for (int i = 1; i <= p.size(); ++i) use.push_back(i);
        const auto record = minmax::orbit(p, use);
        if (format == "json") {
          print_json(minmax::orbit_to_json(record));
        } else {
          if (!first) std::cout << '\n';
          for (const auto& m : record.members)
            std::cout << m.to_string() << '\n';
        }
        first = false;
      }
    } else if (app.got_subcommand(fixed_cmd)) {
      for (const auto& p : gather_inputs(perm_arg, use_stdin)) {
        const auto fixed = minmax::fixed_positions(p);
        if (format == "json") {
          nlohmann::ordered_json j;
          j["perm"] = p.to_string();
          j["fixed"] = fixed;
          print_json(j);
        } else {
          for (size_t k = 0; k < fixed.size(); ++k)
            std::cout << (k ? " " : "") << fixed[k];
          std::cout << '\n';
        }
      }
    } else if (app.got_subcommand(census_cmd)) {
      if (allow_large && census_n > 13)
        std::cerr << "warning: exhaustive census of " << census_n
                  << "! permutations; this may run for a very long time\n";
      const auto table =
          census_exact(census_n, parse_variant(variant),
                       workers_or_default(cli_workers), allow_large);
      if (format == "json")
        print_json(minmax::census_to_json(table));
      else if (format == "csv")
        std::cout << minmax::census_to_csv(table);
      else
        std::cout << minmax::census_to_text(table);
    } else if (app.got_subcommand(sample_cmd)) {
      const auto est =
          minmax::estimate_leaf_probabilities(sample_n, trials, seed);
      if (format == "json")
        print_json(minmax::estimate_to_json(est));
      else if (format == "csv")
        std::cout << minmax::estimate_to_csv(est);
      else
        std::cout << minmax::estimate_to_text(est);
    } else if (app.got_subcommand(verify_cmd)) {
      const auto report = minmax::verify_suite(n_max);
      if (format == "json")
        print_json(minmax::report_to_json(report));
      else
        std::cout << minmax::report_to_text(report);
      return report.all_pass() ? 0 : 3;
    }
  } catch (const minmax::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
