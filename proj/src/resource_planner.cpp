#include "trotter/resource_planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "trotter/errors.hpp"

namespace trotter {

namespace {

const double nan_v = std::numeric_limits<double>::quiet_NaN();

long ceil_r(double r) {
  if (!std::isfinite(r)) throw input_error("Trotter number overflows");
  if (r > 9.0e18) throw input_error("Trotter number overflows");
  return std::max(1L, static_cast<long>(std::ceil(r * (1 - 1e-12))));
}

double ceil_clamped(double ell, double hi) {
  ell = std::ceil(ell * (1 - 1e-12));
  return std::clamp(ell, 1.0, std::max(1.0, hi));
}

void check_common(const PlanParams& q) {
  if (!(q.t > 0)) throw input_error("t must be positive");
  if (!(q.eps > 0)) throw input_error("eps must be positive");
  if (q.p < 1) throw input_error("order p must be >= 1");
}

void check_lattice(const PlanParams& q) {
  if (!(q.n >= 1)) throw input_error("n must be >= 1");
  if (q.d < 1) throw input_error("dimension d must be >= 1");
  if (!(q.alpha >= 0)) throw input_error("alpha must be >= 0");
}

}  // namespace

PlanModel parse_plan_model(const std::string& s) {
  if (s == "electronic-structure") return PlanModel::electronic_structure;
  if (s == "k-local") return PlanModel::k_local;
  if (s == "power-law") return PlanModel::power_law;
  if (s == "power-law-truncated") return PlanModel::power_law_truncated;
  if (s == "quasilocal") return PlanModel::quasilocal;
  if (s == "clustered") return PlanModel::clustered;
  throw input_error("unknown model '" + s + "'");
}

std::string plan_model_name(PlanModel m) {
  switch (m) {
    case PlanModel::electronic_structure: return "electronic-structure";
    case PlanModel::k_local: return "k-local";
    case PlanModel::power_law: return "power-law";
    case PlanModel::power_law_truncated: return "power-law-truncated";
    case PlanModel::quasilocal: return "quasilocal";
    case PlanModel::clustered: return "clustered";
  }
  return "?";
}

SimulationPlan plan(PlanModel model, const PlanParams& q) {
  check_common(q);
  SimulationPlan s;
  s.model = model;
  s.params = q;
  s.previous_gates = nan_v;
  s.previous_runtime_exponent = nan_v;
  s.notes.push_back("prefactors and log factors set to 1; o(1) exponents realized as 1/p");
  const double p = q.p, ip = 1.0 / p;
  const double tpart = std::pow(q.t, 1 + ip) / std::pow(q.eps, ip);
  switch (model) {
    case PlanModel::electronic_structure: {
      if (!(q.n >= 1)) throw input_error("n must be >= 1");
      s.r = ceil_r(std::pow(q.n * q.t, 1 + ip) / std::pow(q.eps, ip));
      s.gates_per_step = q.n;
      s.gate_n_exponent = 2 + ip;
      s.gate_t_exponent = 1 + ip;
      s.previous_gates = q.n * q.n * q.t;
      s.notes.push_back("per-step cost O~(n) reported as n");
      break;
    }
    case PlanModel::k_local: {
      if (!(q.n >= 1)) throw input_error("n must be >= 1");
      if (q.k < 1) throw input_error("locality k must be >= 1");
      if (!(q.induced_norm >= 0) || !(q.one_norm >= 0)) throw input_error("norms must be nonnegative");
      if (q.induced_norm > q.one_norm * (1 + 1e-12)) throw input_error("induced 1-norm exceeds the 1-norm");
      s.r = ceil_r(q.induced_norm * std::pow(q.one_norm, ip) * tpart);
      s.gates_per_step = std::pow(q.n, q.k);
      s.gate_n_exponent = q.k;
      s.gate_t_exponent = 1 + ip;
      s.previous_gates = std::pow(q.n, q.k) * q.one_norm * q.t;
      break;
    }
    case PlanModel::power_law: {
      check_lattice(q);
      const double ad = q.alpha / q.d;
      double rn;
      if (ad < 1) {
        rn = std::pow(q.n, 1 - ad + ip * (2 - ad));
        s.gate_n_exponent = 3 - ad + ip * (2 - ad);
        s.previous_gates = std::pow(q.n, 4 - ad) * q.t;
      } else if (ad == 1) {
        double ln = std::max(1.0, std::log(q.n));
        rn = std::pow(q.n, ip) * std::pow(ln, 1 + ip);
        s.gate_n_exponent = 2 + ip;
        s.previous_gates = std::pow(q.n, 3) * q.t;
        s.notes.push_back("log n clamped to >= 1");
      } else {
        rn = std::pow(q.n, ip);
        s.gate_n_exponent = 2 + ip;
        s.previous_gates = std::pow(q.n, 3) * q.t;
        s.ell = ceil_clamped(std::pow(q.n * q.t / q.eps, 1.0 / (q.alpha - q.d)), std::pow(q.n, 1.0 / q.d));
        s.notes.push_back("ell is the cutoff a truncated simulation would use; gates here keep every pair");
      }
      s.r = ceil_r(rn * tpart);
      s.gates_per_step = q.n * q.n;
      s.gate_t_exponent = 1 + ip;
      break;
    }
    case PlanModel::power_law_truncated:
    case PlanModel::quasilocal: {
      check_lattice(q);
      const double hi = std::pow(q.n, 1.0 / q.d);
      if (model == PlanModel::power_law_truncated) {
        if (!(q.alpha > q.d)) throw input_error("truncation needs alpha > d");
        s.ell = ceil_clamped(std::pow(q.n * q.t / q.eps, 1.0 / (q.alpha - q.d)), hi);
        s.gate_n_exponent = 1 + q.d / (q.alpha - q.d) + ip;
        s.gate_t_exponent = s.gate_n_exponent;
        s.previous_gates = std::pow(q.n * q.t, 1 + 2.0 * q.d / (q.alpha - q.d));
      } else {
        s.ell = ceil_clamped(std::log(q.n * q.t / q.eps), hi);
        s.gate_n_exponent = 1 + ip;
        s.gate_t_exponent = 1 + ip;
      }
      s.notes.push_back("cutoff rounded up and clamped to [1, n^(1/d)]");
      s.r = ceil_r(std::pow(q.n, ip) * tpart);
      s.gates_per_step = q.n * std::pow(s.ell, q.d);
      break;
    }
    case PlanModel::clustered: {
      if (!(q.h_b >= 0)) throw input_error("h_B must be nonnegative");
      if (!(q.cc >= 0)) throw input_error("contraction complexity must be nonnegative");
      s.r = ceil_r(std::pow(q.h_b, ip) * tpart);
      s.gates_per_step = 1;
      s.gate_t_exponent = 1 + ip;
      s.runtime_exponent = static_cast<double>(s.r) * q.cc;
      s.previous_runtime_exponent = q.h_b * q.h_b * q.t * q.t * q.cc / q.eps;
      s.notes.push_back("runtime is 2^(r cc); gates counts Trotter steps");
      break;
    }
  }
  s.gates = s.gates_per_step * static_cast<double>(s.r);
  s.gates = std::max(s.gates, static_cast<double>(s.r));
  return s;
}

std::vector<std::string> plan_csv(const std::vector<SimulationPlan>& plans) {
  std::vector<std::string> rows;
  rows.push_back(
      "model,n,t,eps,p,alpha,d,ell,r,gates_per_step,gates,gate_n_exponent,gate_t_exponent,previous_gates,"
      "runtime_exponent,previous_runtime_exponent");
  auto num = [](double v) {
    std::ostringstream o;
    o.precision(17);
    if (std::isfinite(v)) o << v;
    return o.str();
  };
  for (const auto& s : plans) {
    std::ostringstream o;
    o.precision(17);
    const auto& q = s.params;
    o << plan_model_name(s.model) << ',' << q.n << ',' << q.t << ',' << q.eps << ',' << q.p << ',' << q.alpha << ','
      << q.d << ',' << s.ell << ',' << s.r << ',' << s.gates_per_step << ',' << s.gates << ',' << s.gate_n_exponent
      << ',' << s.gate_t_exponent << ',' << num(s.previous_gates) << ',' << s.runtime_exponent << ','
      << num(s.previous_runtime_exponent);
    rows.push_back(o.str());
  }
  return rows;
}

}  // namespace trotter
