#pragma once

#include <string>
#include <vector>

namespace trotter {

enum class PlanModel { electronic_structure, k_local, power_law, power_law_truncated, quasilocal, clustered };
PlanModel parse_plan_model(const std::string& s);
std::string plan_model_name(PlanModel m);

struct PlanParams {
  double n = 0;
  double t = 0;
  double eps = 0;
  int p = 1;
  double alpha = 0;          // power-law exponent
  int d = 1;                 // lattice dimension
  int k = 2;                 // locality (k-local)
  double induced_norm = 0;   // |||H|||_1 (k-local)
  double one_norm = 0;       // ||H||_1 (k-local)
  double h_b = 0;            // cluster interaction strength
  double d_prime = 1;        // cluster degree
  double cc = 1;             // contraction complexity
};

struct SimulationPlan {
  PlanModel model = PlanModel::k_local;
  PlanParams params;
  long r = 1;
  double ell = 0;            // truncation cutoff, 0 if none
  double gates = 0;
  double gates_per_step = 0;
  double gate_n_exponent = 0;  // exponents of the gate count, o(1) realized as 1/p
  double gate_t_exponent = 0;
  double previous_gates = 0;   // best previous result, same conventions; NaN if none
  double runtime_exponent = 0; // clustered: r * cc(g)
  double previous_runtime_exponent = 0;
  std::vector<std::string> notes;
};

// Every O/Theta prefactor and log factor is 1; r and l are rounded up.
SimulationPlan plan(PlanModel model, const PlanParams& params);

// one CSV row per plan, header first
std::vector<std::string> plan_csv(const std::vector<SimulationPlan>& plans);

}  // namespace trotter
