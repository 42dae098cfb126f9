#ifndef LAMHOM_JSON_IO_HPP
#define LAMHOM_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "lamhom/hetero_solver.hpp"
#include "lamhom/laminate_homogenizer.hpp"
#include "lamhom/macro_solver.hpp"
#include "lamhom/material.hpp"
#include "lamhom/sweep.hpp"

namespace lamhom {

// Laminate descriptor:
//   {"assumption": "plane-stress"|"plane-strain", "epsilon": number,
//    "layers": [{"fraction": f,
//                "phase": {"isotropic": {"E","nu","alpha","beta","K","D"}}
//                       | {"orthotropic": {"C1111",...,"D22"}}}, ...]}
// Errors carry the json path of the offending entry.
PlaneAssumption assumption_from_string(const std::string& s);
Laminate laminate_from_json(const nlohmann::json& j);

// Load block: {"direction": 1|2, "B","R","S": numbers, "m","n","p": ints}.
// The macro period is supplied by the caller (compare derives it from
// L_over_epsilon and the laminate).
HarmonicLoad load_from_json(const nlohmann::json& j, double L);

SweepConfig sweep_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EffectiveProperties& e);
nlohmann::json to_json(const NormalizedProperties& n);
nlohmann::json to_json(const ComparisonReport& r);
nlohmann::json to_json(const DimensionlessRatios& r);

}  // namespace lamhom

#endif  // LAMHOM_JSON_IO_HPP
