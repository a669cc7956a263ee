#include "shallowpack/reports.hpp"

#include <sstream>

#include <json.hpp>

#include "shallowpack/io.hpp"

namespace shallowpack {
namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double x) { return format_double(x); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json rational_json(const Rational& r) {
  return Json{{"numerator", r.numerator().str()}, {"denominator", r.denominator().str()},
              {"value", boost::rational_cast<double>(r)}};
}

}  // namespace

std::string to_csv(const ScalingReport& report) {
  std::ostringstream out;
  out << "generator,n,k,delta,trials,packing_size,bound,slope,slope_se\n";
  for (const auto& r : report.rows) {
    out << report.generator << ',' << r.n << ',' << r.k << ',' << r.delta << ',' << r.trials << ','
        << r.packing_size << ',' << fmt(r.bound) << ',' << fmt(report.fit.slope) << ','
        << fmt(report.fit.slope_se) << '\n';
  }
  return out.str();
}

std::string to_json(const ScalingReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n}, {"k", r.k}, {"delta", r.delta}, {"trials", r.trials},
                    {"shallow_size", r.shallow_size}, {"packing_size", r.packing_size},
                    {"bound", r.bound}});
  }
  return dump({{"generator", report.generator},
               {"sweep", std::string(sweep_name(report.sweep))},
               {"slope", report.fit.slope},
               {"slope_se", report.fit.slope_se},
               {"predicted_slope", report.predicted_slope},
               {"rows", rows}});
}

std::string to_csv(const TailReport& report) {
  std::ostringstream out;
  out << "n,k,sample_size,trials,t,threshold,empirical,exact,bound\n";
  for (const auto& r : report.rows) {
    out << report.n << ',' << report.k << ',' << report.sample_size << ',' << report.trials << ','
        << fmt(r.t) << ',' << r.threshold << ',' << fmt(r.empirical) << ','
        << (r.exact ? fmt(boost::rational_cast<double>(*r.exact)) : std::string()) << ','
        << fmt(r.bound) << '\n';
  }
  return out.str();
}

std::string to_json(const TailReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row{{"t", r.t}, {"threshold", r.threshold}, {"empirical", r.empirical}};
    row["exact"] = r.exact ? rational_json(*r.exact) : Json(nullptr);
    row["bound"] = r.bound;
    rows.push_back(std::move(row));
  }
  return dump({{"n", report.n}, {"k", report.k}, {"sample_size", report.sample_size},
               {"trials", report.trials}, {"rows", rows}});
}

std::string to_csv(const ProjectionCheck& check, std::size_t d0) {
  std::ostringstream out;
  out << "lhs,rhs,mean,se,trials,sample_size,d0,holds\n"
      << fmt(check.lhs) << ',' << fmt(check.rhs) << ',' << fmt(check.mean) << ',' << fmt(check.se)
      << ',' << check.trials << ',' << check.sample_size << ',' << d0 << ','
      << (check.holds(d0) ? "true" : "false") << '\n';
  return out.str();
}

std::string to_json(const ProjectionCheck& check, std::size_t d0) {
  return dump({{"lhs", check.lhs}, {"rhs", check.rhs}, {"mean", check.mean}, {"se", check.se},
               {"trials", check.trials}, {"sample_size", check.sample_size}, {"d0", d0},
               {"holds", check.holds(d0)}});
}

std::string to_csv(const SuccessRate& rate, const std::string& label) {
  std::ostringstream out;
  out << "sampler,trials,successes,rate,formula_size,sample_size\n"
      << label << ',' << rate.trials << ',' << rate.successes << ',' << fmt(rate.rate()) << ','
      << rate.formula_size << ',' << rate.sample_size << '\n';
  return out.str();
}

std::string to_json(const SuccessRate& rate, const std::string& label) {
  return dump({{"sampler", label}, {"trials", rate.trials}, {"successes", rate.successes},
               {"rate", rate.rate()}, {"formula_size", rate.formula_size},
               {"sample_size", rate.sample_size}});
}

std::string to_csv(const SpanningTree& tree) {
  std::ostringstream out;
  out << "m=" << tree.nodes << " total_conflict=" << total_conflict(tree) << '\n';
  out << "u,v,weight\n";
  for (const auto& e : tree.edges) out << e.u << ',' << e.v << ',' << e.weight << '\n';
  return out.str();
}

std::string to_json(const SpanningTree& tree) {
  Json edges = Json::array();
  for (const auto& e : tree.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"weight", e.weight}});
  return dump({{"m", tree.nodes}, {"total_conflict", total_conflict(tree)}, {"edges", edges}});
}

std::string to_csv(const ConflictReport& report) {
  std::ostringstream out;
  out << "generator,n,k,m,exact_total,approx_total,bound,ratio\n";
  for (const auto& r : report.rows) {
    out << report.generator << ',' << r.n << ',' << r.k << ',' << r.m << ',' << r.exact_total << ','
        << (r.approx_total ? std::to_string(*r.approx_total) : std::string()) << ','
        << fmt(r.bound) << ',' << fmt(r.ratio()) << '\n';
  }
  return out.str();
}

std::string to_json(const ConflictReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row{{"n", r.n}, {"k", r.k}, {"m", r.m}, {"exact_total", r.exact_total}};
    row["approx_total"] = r.approx_total ? Json(*r.approx_total) : Json(nullptr);
    row["bound"] = r.bound;
    row["ratio"] = r.ratio();
    rows.push_back(std::move(row));
  }
  return dump({{"generator", report.generator}, {"spread", report.spread()}, {"rows", rows}});
}

std::string to_csv(const MeasureReport& report) {
  std::ostringstream out;
  out << "set_index,set_size,measure_value\n";
  for (std::size_t i = 0; i < report.values.size(); ++i) {
    out << i << ',' << report.set_sizes[i] << ',' << fmt(report.values[i]) << '\n';
  }
  const double ratio = report.brute_force_updates == 0
                           ? 0.0
                           : static_cast<double>(report.updates) / static_cast<double>(report.brute_force_updates);
  out << "total_updates,brute_force_updates,ratio\n"
      << report.updates << ',' << report.brute_force_updates << ',' << fmt(ratio) << '\n';
  return out.str();
}

std::string to_json(const MeasureReport& report) {
  Json sets = Json::array();
  for (std::size_t i = 0; i < report.values.size(); ++i) {
    sets.push_back({{"set_index", i}, {"set_size", report.set_sizes[i]}, {"value", report.values[i]}});
  }
  return dump({{"measure", std::string(measure_name(report.measure))},
               {"root", report.root},
               {"total_updates", report.updates},
               {"brute_force_updates", report.brute_force_updates},
               {"sets", sets}});
}

std::string to_csv(const DiscrepancyReport& report) {
  std::ostringstream out;
  out << "set_index,set_size,chi_value,predicted_bound\n";
  for (const auto& r : report.rows) {
    out << r.set_index << ',' << r.set_size << ',' << r.chi << ','
        << (r.predicted ? fmt(*r.predicted) : std::string()) << '\n';
  }
  return out.str();
}

std::string to_json(const DiscrepancyReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row{{"set_index", r.set_index}, {"set_size", r.set_size}, {"chi", r.chi}};
    row["predicted_bound"] = r.predicted ? Json(*r.predicted) : Json(nullptr);
    rows.push_back(std::move(row));
  }
  return dump({{"disc", report.disc}, {"rows", rows}});
}

std::string to_csv(const GridCheck& check) {
  std::ostringstream out;
  out << "n,delta,cells,expected_cells,min_length,max_length,min_distance,ok\n"
      << check.n << ',' << check.delta << ',' << check.cells << ',' << check.expected_cells << ','
      << check.min_length << ',' << check.max_length << ',' << check.min_distance << ','
      << (check.ok() ? "true" : "false") << '\n';
  return out.str();
}

std::string to_json(const GridCheck& check) {
  return dump({{"n", check.n}, {"delta", check.delta}, {"cells", check.cells},
               {"expected_cells", check.expected_cells}, {"min_length", check.min_length},
               {"max_length", check.max_length}, {"min_distance", check.min_distance},
               {"ok", check.ok()}});
}

}  // namespace shallowpack
