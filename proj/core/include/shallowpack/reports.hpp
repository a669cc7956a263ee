#pragma once

#include <string>

#include "shallowpack/discrepancy.hpp"
#include "shallowpack/generators.hpp"
#include "shallowpack/hypergeom.hpp"
#include "shallowpack/measures.hpp"
#include "shallowpack/sampling.hpp"
#include "shallowpack/scaling.hpp"
#include "shallowpack/spanning.hpp"

namespace shallowpack {

// CSV and JSON renderings of experiment results. Doubles are written in
// shortest round-trip form, so equal results give byte-identical output.

std::string to_csv(const ScalingReport& report);
std::string to_json(const ScalingReport& report);

std::string to_csv(const TailReport& report);
std::string to_json(const TailReport& report);

std::string to_csv(const ProjectionCheck& check, std::size_t d0);
std::string to_json(const ProjectionCheck& check, std::size_t d0);

/// `label` names the sampler ("epsilon-net", "relative-approximation", ...).
std::string to_csv(const SuccessRate& rate, const std::string& label);
std::string to_json(const SuccessRate& rate, const std::string& label);

/// Header line "m=<int> total_conflict=<int>", then u,v,weight rows.
std::string to_csv(const SpanningTree& tree);
std::string to_json(const SpanningTree& tree);

std::string to_csv(const ConflictReport& report);
std::string to_json(const ConflictReport& report);

/// Per-set rows followed by a total_updates,brute_force_updates,ratio block.
std::string to_csv(const MeasureReport& report);
std::string to_json(const MeasureReport& report);

std::string to_csv(const DiscrepancyReport& report);
std::string to_json(const DiscrepancyReport& report);

std::string to_csv(const GridCheck& check);
std::string to_json(const GridCheck& check);

}  // namespace shallowpack
