#pragma once

#include <string>

#include "json.hpp"
#include "trotter/error_bounds.hpp"
#include "trotter/hamiltonians.hpp"
#include "trotter/local_observables.hpp"
#include "trotter/product_formula.hpp"
#include "trotter/qmc_bounds.hpp"
#include "trotter/resource_planner.hpp"

namespace trotter {

using json = nlohmann::ordered_json;

// written into every JSON document as "schema"
inline constexpr const char* schema_version = "trotter-artifact/1";

// {"version":1, "n":int, "groups":[{"label":str, "terms":[{"coeff":[re,im], "pauli":"XIZ..", "term":k}]}],
//  "geometry":{"d":int, "alpha":real|null}|null, "fields":[h_j]|null}
// Entries sharing a "term" index within a group form one elementary term;
// entries without it are elementary on their own. alpha null means infinity.
json hamiltonian_to_json(const GroupedHamiltonian& h);
GroupedHamiltonian hamiltonian_from_json(const json& j);
GroupedHamiltonian read_hamiltonian(const std::string& path);
void write_hamiltonian(const GroupedHamiltonian& h, const std::string& path);

json schedule_to_json(const FormulaSchedule& s);
json bound_report_to_json(const BoundReport& r);
json plan_to_json(const SimulationPlan& p);
json qmc_plan_to_json(const QmcPlan& p);
json light_cone_plan_to_json(const LightConePlan& p);

// 17 significant digits, '.' decimal point
std::string format_real(double v);

}  // namespace trotter
