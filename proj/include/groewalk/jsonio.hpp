#pragma once

#include <json.hpp>

#include "groewalk/walk.hpp"

namespace groewalk {

// {"normals": [[1,-1],[0,1]], "boundary_class": "ORIGIN_ONLY", "gb": [...]}
nlohmann::json cone_record(const FanCell& cell);

// {"format":1, "cells":[cone records + "key"], "ev_region":[cell keys]}
nlohmann::json fan_record(const GroebnerFan& fan);

nlohmann::json basis_record(const GroebnerBasis& basis);

nlohmann::json trace_record(const WalkTrace& trace, WalkMode mode, const WeightVector& sigma,
                            const WeightVector& tau, const VariableContext& ctx);

nlohmann::json star_report_record(const StarCheckReport& report);

// One row per (cell, vertex) of the simplex cross-section; cell indices
// follow the fan's cell order.
std::string section_csv(const GroebnerFan& fan);

nlohmann::json weight_record(const WeightVector& w);

}  // namespace groewalk
