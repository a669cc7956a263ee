#include "shallowpack/scaling.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <stdexcept>

#include "shallowpack/generators.hpp"
#include "shallowpack/packing.hpp"
#include "shallowpack/point_set.hpp"
#include "shallowpack/rng.hpp"

namespace shallowpack {
namespace {

struct Config {
  std::size_t n;
  std::size_t k;
  std::size_t delta;
};

Config config_at(const ScalingSpec& spec, std::size_t value) {
  Config c{spec.n, spec.k, spec.delta};
  switch (spec.sweep) {
    case SweepVar::N: c.n = value; break;
    case SweepVar::K: c.k = value; break;
    case SweepVar::Delta: c.delta = value; break;
  }
  return c;
}

std::string_view kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Halfspaces: return "halfspaces";
    case GeneratorKind::Balls: return "balls";
    case GeneratorKind::Slabs: return "slabs";
    case GeneratorKind::RectangleGrid: return "grid";
  }
  return "";
}

constexpr std::string_view kSphereSuffix = "-sphere";

}  // namespace

std::string GeneratorSpec::label() const {
  if (kind == GeneratorKind::RectangleGrid) return "grid";
  std::string base = kind == GeneratorKind::Halfspaces && dim == 2
                         ? std::string("halfplanes")
                         : std::string(kind_name(kind)) + std::to_string(dim) + "d";
  if (domain == PointDomain::Sphere) base += kSphereSuffix;
  return base;
}

CsParams GeneratorSpec::params() const {
  switch (kind) {
    case GeneratorKind::Halfspaces: return CsParams::halfspaces(dim);
    case GeneratorKind::Balls: return CsParams::balls(dim);
    case GeneratorKind::Slabs: return CsParams::slabs(dim);
    case GeneratorKind::RectangleGrid: return {2.0, 2.0, 4};
  }
  return {};
}

Separation GeneratorSpec::separation() const {
  return kind == GeneratorKind::RectangleGrid ? Separation::NonStrict : Separation::Strict;
}

GeneratorSpec parse_generator(std::string_view name, std::size_t dim) {
  if (name == "grid") return {GeneratorKind::RectangleGrid, 2, PointDomain::Cube};
  if (name.ends_with(kSphereSuffix)) {
    auto spec = parse_generator(name.substr(0, name.size() - kSphereSuffix.size()), dim);
    if (spec.kind == GeneratorKind::RectangleGrid) throw std::invalid_argument("the grid has no point domain");
    spec.domain = PointDomain::Sphere;
    return spec;
  }
  if (name == "halfplanes") return {GeneratorKind::Halfspaces, 2, PointDomain::Cube};
  for (auto kind : {GeneratorKind::Halfspaces, GeneratorKind::Balls, GeneratorKind::Slabs}) {
    const auto base = kind_name(kind);
    if (!name.starts_with(base)) continue;
    auto rest = name.substr(base.size());
    if (rest.empty()) return {kind, dim, PointDomain::Cube};
    if (rest.size() >= 2 && rest.back() == 'd') {
      std::size_t parsed = 0;
      const auto digits = rest.substr(0, rest.size() - 1);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), parsed);
      if (ec == std::errc() && ptr == digits.data() + digits.size()) return {kind, parsed, PointDomain::Cube};
    }
  }
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

PointSet generator_points(const GeneratorSpec& gen, std::size_t n, std::uint64_t seed) {
  if (gen.kind == GeneratorKind::RectangleGrid) throw std::invalid_argument("the grid has no points");
  const auto point_seed = derive_seed(seed, "points", n);
  return gen.domain == PointDomain::Sphere ? random_points_on_sphere(n, gen.dim, point_seed)
                                           : random_points(n, gen.dim, point_seed);
}

SetSystem generate_system(const GeneratorSpec& gen, std::size_t n, std::size_t delta,
                          std::uint64_t seed) {
  if (gen.kind == GeneratorKind::RectangleGrid) return build_rectangle_grid_dual(n, delta);
  const auto pts = generator_points(gen, n, seed);
  switch (gen.kind) {
    case GeneratorKind::Halfspaces: return build_halfspaces(pts);
    case GeneratorKind::Balls: return build_balls(pts);
    case GeneratorKind::Slabs: return build_slabs(pts);
    case GeneratorKind::RectangleGrid: break;
  }
  throw std::logic_error("generate_system: unreachable");
}

std::string_view sweep_name(SweepVar var) {
  switch (var) {
    case SweepVar::N: return "n";
    case SweepVar::K: return "k";
    case SweepVar::Delta: return "delta";
  }
  return "";
}

SweepVar parse_sweep(std::string_view name) {
  if (name == "n") return SweepVar::N;
  if (name == "k") return SweepVar::K;
  if (name == "delta") return SweepVar::Delta;
  throw std::invalid_argument("unknown sweep variable '" + std::string(name) + "'");
}

void validate(const ScalingSpec& spec) {
  const std::set<std::size_t> distinct(spec.values.begin(), spec.values.end());
  if (distinct.size() < 3) throw std::invalid_argument("scaling sweep needs at least 3 distinct values");
  if (spec.trials == 0) throw std::invalid_argument("scaling: trials must be positive");
  spec.generator.params().validate();
  for (std::size_t value : spec.values) {
    const auto c = config_at(spec, value);
    if (c.delta < 1 || c.delta > c.n) throw std::invalid_argument("scaling: requires 1 <= delta <= n");
    if (c.k > c.n) throw std::invalid_argument("scaling: requires k <= n");
    if (2 * c.k < c.delta) throw std::invalid_argument("scaling: requires k >= delta/2");
    if (spec.generator.kind == GeneratorKind::RectangleGrid &&
        (c.delta % 2 != 0 || c.n % c.delta != 0)) {
      throw std::invalid_argument("scaling: grid requires even delta dividing n");
    }
  }
}

ScalingReport scaling_experiment(const ScalingSpec& spec) {
  validate(spec);
  const auto params = spec.generator.params();
  const bool grid = spec.generator.kind == GeneratorKind::RectangleGrid;
  ScalingReport report;
  report.generator = spec.generator.label();
  report.sweep = spec.sweep;
  switch (spec.sweep) {
    case SweepVar::N: report.predicted_slope = params.d1; break;
    case SweepVar::K: report.predicted_slope = params.d - params.d1; break;
    case SweepVar::Delta: report.predicted_slope = -params.d; break;
  }

  std::map<std::pair<std::size_t, std::size_t>, SetSystem> systems;
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    const auto c = config_at(spec, spec.values[i]);
    const auto key = std::make_pair(c.n, grid ? c.delta : 0);
    auto it = systems.find(key);
    if (it == systems.end()) {
      it = systems.emplace(key, generate_system(spec.generator, c.n, c.delta, spec.seed)).first;
    }
    const auto shallow = shallow_filter(it->second, c.k);
    const auto packing = greedy_packing_restarts(shallow, c.delta, spec.generator.separation(),
                                                 spec.trials, derive_seed(spec.seed, "scaling", i));
    ScalingRow row{c.n, c.k, c.delta, spec.trials, shallow.size(), packing.size(),
                   bound_shallow_packing(c.n, c.k, c.delta, params)};
    report.rows.push_back(row);
    xs.push_back(static_cast<double>(spec.values[i]));
    ys.push_back(static_cast<double>(std::max<std::size_t>(row.packing_size, 1)));
  }
  report.fit = fit_loglog(xs, ys);
  return report;
}

}  // namespace shallowpack
