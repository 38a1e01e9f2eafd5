// monochain: measure, smooth and reorder sampled curves.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monochain/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Degree of monotonicity toolkit for sampled curves"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Report the degree of monotonicity of a chain file");
  std::string analyze_in;
  bool with_global = false;
  analyze->add_option("input", analyze_in, "Chain CSV file")->required();
  analyze->add_flag("--global", with_global, "Also compute the all-triples degree (cubic cost)");

  // filter
  auto* filter = app.add_subcommand("filter", "Smooth a chain with the SP or moving-average filter");
  std::string filter_in, filter_out, method = "sp";
  int window = 3;
  filter->add_option("input", filter_in, "Chain CSV file")->required();
  filter->add_option("output", filter_out, "Filtered chain CSV file")->required();
  filter->add_option("--method", method, "sp or ma")
      ->check(CLI::IsMember({"sp", "ma"}))
      ->capture_default_str();
  filter->add_option("--window", window, "Moving-average width (odd)")->capture_default_str();

  // experiment
  auto* experiment =
      app.add_subcommand("experiment", "Noisy-circle sweep comparing raw, MA-3, MA-5 and SP");
  std::vector<double> grid = monochain::default_noise_grid();
  int trials = 10;
  std::uint64_t seed = 42;
  std::string sweep_out;
  experiment->add_option("--noise-grid", grid, "Comma-separated target MSE levels")
      ->delimiter(',')
      ->default_str("0,0.005,...,0.05 (11 levels)");
  experiment->add_option("--trials", trials, "Noisy copies per level")->capture_default_str();
  experiment->add_option("--seed", seed, "Base seed; trial t uses seed + t")
      ->capture_default_str();
  experiment->add_option("--out", sweep_out, "Sweep CSV output path")->required();

  // reconstruct
  auto* recon = app.add_subcommand("reconstruct", "Order an unordered point set into a chain");
  std::string recon_in, recon_out;
  std::size_t exhaustive_limit = 8;
  recon->add_option("input", recon_in, "Point CSV file (row order ignored)")->required();
  recon->add_option("output", recon_out, "Ordered chain CSV file")->required();
  recon->add_option("--exhaustive-limit", exhaustive_limit,
                    "Search all orderings up to this many points")
      ->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Write a regularly sampled circle chain");
  int samples_per_loop = 10, loops = 3;
  double radius = 1.0;
  std::string gen_out;
  gen->add_option("--samples-per-loop", samples_per_loop)->capture_default_str();
  gen->add_option("--loops", loops)->capture_default_str();
  gen->add_option("--radius", radius)->capture_default_str();
  gen->add_option("--out", gen_out, "Chain CSV output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      monochain::cmd_analyze(analyze_in, with_global, std::cout);
    } else if (*filter) {
      monochain::FilterConfig config;
      config.method = method == "ma" ? monochain::FilterMethod::MA : monochain::FilterMethod::SP;
      config.window = window;
      if (config.method == monochain::FilterMethod::MA && (window < 1 || window % 2 == 0)) {
        std::cerr << "error: --window must be a positive odd integer\n";
        return 2;
      }
      monochain::cmd_filter(filter_in, filter_out, config, std::cerr);
    } else if (*experiment) {
      monochain::cmd_experiment(grid, trials, seed, sweep_out);
    } else if (*recon) {
      monochain::cmd_reconstruct(recon_in, recon_out, exhaustive_limit);
    } else if (*gen) {
      monochain::cmd_gen(samples_per_loop, loops, radius, gen_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
