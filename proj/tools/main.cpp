#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "harness/config.hpp"
#include "harness/runner.hpp"
#include "shallowpack/errors.hpp"
#include "shallowpack/io.hpp"
#include "shallowpack/packing.hpp"
#include "shallowpack/scaling.hpp"

namespace harness = shallowpack::harness;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kRuntime = 2;

using namespace shallowpack;

int cmd_run(const std::string& path, const harness::Overrides& overrides) {
  auto config = harness::load_config(path);
  harness::apply(config, overrides);
  for (const auto& exp : config.experiments) harness::validate(exp);
  for (const auto& exp : config.experiments) {
    const auto result = harness::run_experiment(exp);
    harness::write_result(result, std::cout);
    if (!result.verified) {
      std::cerr << "shallowpack: [" << result.name << "] " << result.failure << '\n';
      return kRuntime;
    }
  }
  return kOk;
}

int cmd_fit(const std::string& path, const std::string& col, const std::string& y, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  const auto fit = harness::fit_exponents(in, col, y);
  if (format == "json") {
    std::cout << "{\"slope\": " << format_double(fit.slope) << ", \"slope_se\": " << format_double(fit.slope_se)
              << ", \"points\": " << fit.points << "}\n";
  } else {
    std::cout << "slope,slope_se,points\n"
              << format_double(fit.slope) << ',' << format_double(fit.slope_se) << ',' << fit.points << '\n';
  }
  return kOk;
}

struct GenOptions {
  std::string generator;
  std::size_t n = 64;
  std::size_t dim = 2;
  std::size_t delta = 2;
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
  std::string output;
  std::string points;
};

int cmd_gen(const GenOptions& opt) {
  const auto gen = parse_generator(opt.generator, opt.dim);
  auto sys = generate_system(gen, opt.n, opt.delta, opt.seed);
  if (opt.k) sys = shallow_filter(sys, *opt.k);
  save_set_system(opt.output, sys);
  if (!opt.points.empty()) save_point_set(opt.points, generator_points(gen, opt.n, opt.seed));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Packing, sampling and spanning-tree experiments on set systems"};
  app.require_subcommand(1);

  harness::Overrides overrides;
  std::string config_path;
  auto* run = app.add_subcommand("run", "Run every experiment in a config file");
  run->add_option("config", config_path, "INI-style experiment config")->required();
  run->add_option("--seed", overrides.seed, "Override the seed of every experiment");
  run->add_option("--trials", overrides.trials, "Override trials of every experiment");
  run->add_option("--format", overrides.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  std::string csv_path;
  std::string col;
  std::string y_col = "packing_size";
  std::string fit_format = "csv";
  auto* fit = app.add_subcommand("fit", "Fit a log-log exponent to a report CSV");
  fit->add_option("csv", csv_path, "Report CSV")->required();
  fit->add_option("--col", col, "Swept column (x)")->required();
  fit->add_option("--y", y_col, "Response column");
  fit->add_option("--format", fit_format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  GenOptions gen_opt;
  std::size_t k = 0;
  auto* gen = app.add_subcommand("gen", "Generate a set system file");
  gen->add_option("generator", gen_opt.generator,
                  "halfplanes, halfspaces, balls, slabs (optionally with a -sphere suffix) or grid")
      ->required();
  gen->add_option("--n", gen_opt.n, "Ground-set size");
  gen->add_option("--dim", gen_opt.dim, "Point dimension");
  gen->add_option("--delta", gen_opt.delta, "Grid stack depth");
  auto* k_opt = gen->add_option("--k", k, "Keep only sets of size at most k");
  gen->add_option("--seed", gen_opt.seed, "Point seed");
  gen->add_option("-o,--output", gen_opt.output, "Set system output file")->required();
  gen->add_option("--points", gen_opt.points, "Also write the points as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*run) return cmd_run(config_path, overrides);
    if (*fit) return cmd_fit(csv_path, col, y_col, fit_format);
    if (*k_opt) gen_opt.k = k;
    return cmd_gen(gen_opt);
  } catch (const harness::ConfigError& e) {
    std::cerr << "shallowpack: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "shallowpack: " << e.what() << '\n';
    return kInvalid;
  } catch (const shallowpack::ParseError& e) {
    std::cerr << "shallowpack: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "shallowpack: " << e.what() << '\n';
    return kRuntime;
  }
}
