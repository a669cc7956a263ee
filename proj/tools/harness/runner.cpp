#include "harness/runner.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "shallowpack/discrepancy.hpp"
#include "shallowpack/fit.hpp"
#include "shallowpack/generators.hpp"
#include "shallowpack/hypergeom.hpp"
#include "shallowpack/measures.hpp"
#include "shallowpack/packing.hpp"
#include "shallowpack/reports.hpp"
#include "shallowpack/rng.hpp"
#include "shallowpack/sampling.hpp"
#include "shallowpack/scaling.hpp"
#include "shallowpack/spanning.hpp"

namespace shallowpack::harness {
namespace {

struct Context {
  const ExperimentConfig& exp;
  std::uint64_t seed;
  std::size_t trials;
  bool json;

  template <class Report, class... Extra>
  std::string render(const Report& report, Extra&&... extra) const {
    return json ? to_json(report, std::forward<Extra>(extra)...) : to_csv(report, std::forward<Extra>(extra)...);
  }

  GeneratorSpec generator() const {
    const auto name = exp.get_string("generator", "halfplanes");
    try {
      return parse_generator(name, exp.get_size("dim", 2));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(exp.find("generator")->line, "generator", e.what());
    }
  }

  // A key that must hold exactly one value.
  std::size_t single(std::string_view key) const {
    const auto values = exp.get_sizes(key);
    if (values.size() != 1) throw ConfigError(exp.find(key)->line, std::string(key), "expected a single value");
    return values.front();
  }
  std::size_t single(std::string_view key, std::size_t fallback) const {
    return exp.has(key) ? single(key) : fallback;
  }
};

SetSystem packed_system(const Context& ctx, const GeneratorSpec& gen, std::size_t n, std::size_t delta) {
  const auto sys = generate_system(gen, n, delta, ctx.seed);
  return greedy_packing(sys, delta, gen.separation(), derive_seed(ctx.seed, "packing", n)).extract(sys);
}

RunResult run_scaling(const Context& ctx) {
  ScalingSpec spec;
  spec.generator = ctx.generator();
  spec.sweep = parse_sweep(ctx.exp.get_string("sweep"));
  const auto swept = std::string(sweep_name(spec.sweep));
  spec.values = ctx.exp.get_sizes(swept);
  spec.n = spec.sweep == SweepVar::N ? 0 : ctx.single("n");
  spec.k = spec.sweep == SweepVar::K ? 0 : ctx.single("k");
  spec.delta = spec.sweep == SweepVar::Delta ? 0 : ctx.single("delta");
  spec.trials = ctx.trials;
  spec.seed = ctx.seed;
  return {ctx.exp.name, ctx.render(scaling_experiment(spec)), {}, true, {}};
}

RunResult run_tail(const Context& ctx) {
  const std::vector<double> default_grid{2.0 * std::numbers::e, 8.0, 12.0};
  const auto grid = ctx.exp.has("t") ? ctx.exp.get_doubles("t") : default_grid;
  const auto report = decay_tail_experiment(ctx.single("n"), ctx.single("k"), ctx.exp.get_size("m"),
                                            grid, ctx.trials, ctx.seed);
  return {ctx.exp.name, ctx.render(report), {}, true, {}};
}

RunResult run_sampler(const Context& ctx, bool relative) {
  const auto gen = ctx.generator();
  const std::size_t n = ctx.single("n");
  const std::size_t delta = ctx.single("delta");
  const auto diffs = symmetric_difference_system(packed_system(ctx, gen, n, delta));
  SampleParams params;
  params.epsilon = ctx.exp.get_double("epsilon", static_cast<double>(delta) / static_cast<double>(n));
  params.eta = ctx.exp.get_double("eta", params.eta);
  params.failure = ctx.exp.get_double("failure", params.failure);
  params.c = ctx.exp.get_double("c", params.c);
  params.validate();
  const double d = ctx.exp.get_double("d", gen.params().d);
  const auto rate = relative
                        ? relative_approximation_success(diffs, params, d, ctx.trials, ctx.seed)
                        : epsilon_net_success(diffs, params, d, ctx.trials, ctx.seed);
  return {ctx.exp.name, ctx.render(rate, std::string(relative ? "relative-approximation" : "epsilon-net")), {}, true, {}};
}

RunResult run_projection(const Context& ctx) {
  const auto gen = ctx.generator();
  const std::size_t n = ctx.single("n");
  const std::size_t delta = ctx.single("delta");
  const std::size_t d0 = ctx.exp.get_size("d0", gen.params().d0);
  const auto sys = packed_system(ctx, gen, n, delta);
  const auto check = projection_expectation_check(sys, delta, d0, ctx.trials, ctx.seed);
  return {ctx.exp.name, ctx.render(check, d0), {}, true, {}};
}

RunResult run_mst(const Context& ctx) {
  ConflictSweepSpec spec;
  spec.generator = ctx.generator();
  spec.n = ctx.single("n");
  spec.k = ctx.single("k");
  spec.m = ctx.exp.get_size("m");
  if (ctx.exp.has("factors")) spec.factors = ctx.exp.get_sizes("factors");
  spec.mu = ctx.exp.get_size("mu", 0);
  spec.eta = ctx.exp.get_double("eta", spec.eta);
  spec.seed = ctx.seed;
  return {ctx.exp.name, ctx.render(conflict_sweep(spec)), {}, true, {}};
}

RunResult run_measures(const Context& ctx) {
  const std::size_t n = ctx.single("n");
  const std::size_t dim = ctx.exp.get_size("dim", 2);
  const std::size_t m = ctx.exp.get_size("m", 100);
  const auto measure = parse_measure(ctx.exp.get_string("measure", "diameter"));
  const auto pts = clustered_points(n, dim, ctx.exp.get_size("clusters", 5),
                                    ctx.exp.get_double("spread", 0.05), derive_seed(ctx.seed, "points", n));
  const auto full = build_halfspaces(pts);
  if (full.size() < m) throw std::invalid_argument("measures: only " + std::to_string(full.size()) + " sets available");
  const auto sys = full.subsystem(draw_sample(full.size(), m, derive_seed(ctx.seed, "sets", m)).indices());
  const auto tree = exact_mst(sys);
  const auto walk = traverse_and_measure(sys, tree, pts, measure);
  const auto brute = brute_force_measure(sys, pts, measure);

  RunResult result{ctx.exp.name, ctx.render(walk), {}, true, {}};
  const double tol = measure == Measure::SebRadius ? 1e-9 : 0.0;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (std::abs(walk.values[i] - brute.values[i]) > tol) {
      result.verified = false;
      result.failure = "set " + std::to_string(i) + ": walk and brute-force values differ";
    }
  }
  if (walk.updates != sys[walk.root].length() + 2 * total_conflict(tree)) {
    result.verified = false;
    result.failure = "update count differs from |S_root| + 2 * total conflict";
  }
  return result;
}

RunResult run_discrepancy(const Context& ctx) {
  const auto gen = ctx.generator();
  const std::size_t n = ctx.single("n");
  auto sys = generate_system(gen, n, ctx.single("delta", 2), ctx.seed);
  if (ctx.exp.has("k")) sys = shallow_filter(sys, ctx.single("k"));
  std::optional<std::size_t> d;
  if (ctx.exp.has("d")) {
    d = ctx.exp.get_size("d");
  } else if (gen.kind == GeneratorKind::Halfspaces && gen.dim >= 3) {
    d = gen.dim;
  }
  Coloring best;
  long long best_disc = std::numeric_limits<long long>::max();
  for (std::size_t t = 0; t < ctx.trials; ++t) {
    auto chi = random_coloring(n, derive_seed(ctx.seed, "coloring", t));
    const auto disc = eval_coloring(sys, chi).disc;
    if (disc < best_disc) {
      best_disc = disc;
      best = std::move(chi);
    }
  }
  return {ctx.exp.name, ctx.render(discrepancy_report(sys, best, d)), {}, true, {}};
}

RunResult run_grid(const Context& ctx) {
  const auto check = check_rectangle_grid(ctx.single("n"), ctx.single("delta"));
  RunResult result{ctx.exp.name, ctx.render(check), {}, check.ok(), {}};
  if (!check.ok()) result.failure = "grid construction failed verification";
  return result;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& exp) {
  validate(exp);
  const Context ctx{exp, exp.get_u64("seed", 0), exp.get_size("trials", 1),
                    exp.get_string("format", "csv") == "json"};
  const auto kind = exp.kind();
  RunResult result;
  if (kind == "packing-scaling") result = run_scaling(ctx);
  else if (kind == "tail") result = run_tail(ctx);
  else if (kind == "net") result = run_sampler(ctx, false);
  else if (kind == "approx") result = run_sampler(ctx, true);
  else if (kind == "projection") result = run_projection(ctx);
  else if (kind == "mst") result = run_mst(ctx);
  else if (kind == "measures") result = run_measures(ctx);
  else if (kind == "discrepancy") result = run_discrepancy(ctx);
  else result = run_grid(ctx);
  if (exp.has("output")) result.output = exp.get_string("output");
  return result;
}

void write_result(const RunResult& result, std::ostream& fallback) {
  if (!result.output) {
    fallback << result.text;
    return;
  }
  const auto& path = *result.output;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << result.text;
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

ExponentFit fit_exponents(std::istream& csv, std::string_view x_col, std::string_view y_col) {
  std::string line;
  if (!std::getline(csv, line)) throw std::invalid_argument("fit: empty CSV");
  const auto header = split_csv(line);
  auto column = [&](std::string_view name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw std::invalid_argument("fit: no column '" + std::string(name) + "'");
  };
  const auto xi = column(x_col);
  const auto yi = column(y_col);
  std::vector<double> xs;
  std::vector<double> ys;
  while (std::getline(csv, line)) {
    const auto fields = split_csv(line);
    if (fields.size() != header.size()) break;
    try {
      xs.push_back(std::stod(fields[xi]));
      ys.push_back(std::stod(fields[yi]));
    } catch (const std::exception&) {
      throw std::invalid_argument("fit: non-numeric value in row " + std::to_string(xs.size() + 1));
    }
  }
  if (xs.size() < 3) throw std::invalid_argument("fit: need at least 3 rows, found " + std::to_string(xs.size()));
  const auto fit = fit_loglog(xs, ys);
  return {fit.slope, fit.slope_se, fit.points};
}

}  // namespace shallowpack::harness
