#include "shallowpack/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "shallowpack/rng.hpp"

namespace shallowpack {

Coloring::Coloring(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("Coloring: signs must be +1 or -1");
  }
}

Coloring Coloring::uniform(std::size_t n) { return Coloring(std::vector<int>(n, 1)); }

Coloring Coloring::negated() const {
  std::vector<int> out(signs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -signs_[i];
  return Coloring(std::move(out));
}

ColoringEval eval_coloring(const SetSystem& sys, const Coloring& chi) {
  if (chi.size() != sys.ground_size()) throw std::invalid_argument("eval_coloring: width mismatch");
  ColoringEval out;
  out.values.reserve(sys.size());
  for (const auto& v : sys) {
    long long sum = 0;
    for (std::size_t i : v.indices()) sum += chi[i];
    out.values.push_back(sum);
    out.disc = std::max(out.disc, std::llabs(sum));
  }
  return out;
}

Coloring random_coloring(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> signs(n);
  for (auto& s : signs) s = rng.coin() ? 1 : -1;
  return Coloring(std::move(signs));
}

double bound_disc_halfspaces(std::size_t s, std::size_t n, std::size_t d) {
  if (d < 3) throw std::invalid_argument("bound_disc_halfspaces: requires d >= 3");
  if (s > n) throw std::invalid_argument("bound_disc_halfspaces: requires s <= n");
  const double ss = static_cast<double>(s);
  const double nn = static_cast<double>(n);
  const double dd = static_cast<double>(d);
  const double lg = n > 1 ? std::log2(nn) : 0.0;
  if (d == 3) return std::cbrt(ss) * std::pow(lg, 7.0 / 6.0);
  const double log_term = std::pow(lg, 1.0 / (2.0 * dd));
  if (d % 2 == 0) return std::pow(ss, 0.25) * std::pow(nn, 0.25 - 1.0 / (2.0 * dd)) * log_term;
  return std::pow(ss, 0.25 + 1.0 / (4.0 * dd)) * std::pow(nn, 0.25 - 3.0 / (4.0 * dd)) * log_term;
}

DiscrepancyReport discrepancy_report(const SetSystem& sys, const Coloring& chi,
                                     std::optional<std::size_t> d) {
  const auto eval = eval_coloring(sys, chi);
  DiscrepancyReport report;
  report.disc = eval.disc;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    DiscrepancyRow row{i, sys[i].length(), eval.values[i], std::nullopt};
    if (d) row.predicted = bound_disc_halfspaces(row.set_size, sys.ground_size(), *d);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace shallowpack
