#include "trotter/io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "trotter/errors.hpp"

namespace trotter {

namespace {

json real_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw input_error(std::string("hamiltonian JSON: missing \"") + key + "\"");
  return j.at(key);
}

}  // namespace

std::string format_real(double v) {
  std::ostringstream o;
  o.imbue(std::locale::classic());
  o.precision(17);
  o << v;
  return o.str();
}

json hamiltonian_to_json(const GroupedHamiltonian& h) {
  json out;
  out["schema"] = schema_version;
  out["version"] = 1;
  out["n"] = h.n;
  json groups = json::array();
  for (const auto& g : h.groups) {
    json terms = json::array();
    int k = 0;
    for (const auto& term : g.terms) {
      for (const auto& e : term.terms())
        terms.push_back({{"coeff", {e.c.real(), e.c.imag()}}, {"pauli", pauli_string(h.n, e.x, e.z)}, {"term", k}});
      ++k;
    }
    groups.push_back({{"label", g.label}, {"terms", terms}});
  }
  out["groups"] = groups;
  if (h.geometry)
    out["geometry"] = {{"d", h.geometry->d}, {"alpha", real_or_null(h.geometry->alpha)}};
  else
    out["geometry"] = nullptr;
  out["fields"] = h.fields ? json(*h.fields) : json(nullptr);
  return out;
}

GroupedHamiltonian hamiltonian_from_json(const json& j) {
  try {
    if (need(j, "version").get<int>() != 1) throw input_error("hamiltonian JSON: unsupported version");
    GroupedHamiltonian h;
    h.n = need(j, "n").get<int>();
    if (h.n < 1 || h.n > max_qubits) throw input_error("hamiltonian JSON: n out of range");
    for (const auto& g : need(j, "groups")) {
      TermGroup tg;
      tg.label = g.value("label", "H" + std::to_string(h.groups.size() + 1));
      std::map<long, std::size_t> slot;  // "term" index -> position in tg.terms
      for (const auto& e : need(g, "terms")) {
        std::string ps = need(e, "pauli").get<std::string>();
        if (static_cast<int>(ps.size()) != h.n) throw input_error("hamiltonian JSON: Pauli string length != n");
        const json& c = need(e, "coeff");
        cplx coeff = c.is_array() ? cplx(c.at(0).get<double>(), c.size() > 1 ? c.at(1).get<double>() : 0.0)
                                  : cplx(c.get<double>(), 0.0);
        PauliSum s = PauliSum::parse(ps) * coeff;
        if (e.contains("term")) {
          long k = e.at("term").get<long>();
          auto it = slot.find(k);
          if (it == slot.end()) {
            slot.emplace(k, tg.terms.size());
            tg.terms.push_back(s);
          } else {
            tg.terms[it->second] += s;
          }
        } else {
          tg.terms.push_back(s);
        }
      }
      h.groups.push_back(std::move(tg));
    }
    if (h.groups.empty()) throw input_error("hamiltonian JSON: no groups");
    if (j.contains("geometry") && !j.at("geometry").is_null()) {
      const json& gj = j.at("geometry");
      Geometry geo;
      geo.d = gj.value("d", 1);
      geo.alpha = gj.contains("alpha") && !gj.at("alpha").is_null() ? gj.at("alpha").get<double>()
                                                                      : std::numeric_limits<double>::infinity();
      h.geometry = geo;
    }
    if (j.contains("fields") && !j.at("fields").is_null()) h.fields = j.at("fields").get<std::vector<double>>();
    return h;
  } catch (const json::exception& e) {
    throw input_error(std::string("hamiltonian JSON: ") + e.what());
  }
}

GroupedHamiltonian read_hamiltonian(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open " + path);
  json j;
  try {
    j = json::parse(f);
  } catch (const json::exception& e) {
    throw input_error(path + ": " + e.what());
  }
  return hamiltonian_from_json(j);
}

void write_hamiltonian(const GroupedHamiltonian& h, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw input_error("cannot write " + path);
  f << hamiltonian_to_json(h).dump(2) << '\n';
}

json schedule_to_json(const FormulaSchedule& s) {
  return {{"schema", schema_version}, {"name", s.name},     {"order", s.order_p},   {"stages", s.stages},
          {"gamma", s.gamma},         {"reversed", s.reversed}, {"coeffs", s.coeffs}, {"perms", s.perms}};
}

json bound_report_to_json(const BoundReport& r) {
  json terms = json::array();
  for (const auto& t : r.per_term) terms.push_back({{"label", t.label}, {"coeff", t.coeff}, {"norm", t.norm}});
  return {{"schema", schema_version}, {"value", r.value}, {"mode", norm_mode_name(r.mode)},
          {"order", r.order_p},       {"t", r.t},         {"per_term", terms}};
}

json plan_to_json(const SimulationPlan& p) {
  const auto& q = p.params;
  json params = {{"n", q.n},         {"t", q.t},           {"eps", q.eps},       {"p", q.p},
                 {"alpha", q.alpha}, {"d", q.d},           {"k", q.k},           {"induced_norm", q.induced_norm},
                 {"one_norm", q.one_norm}, {"h_b", q.h_b}, {"d_prime", q.d_prime}, {"cc", q.cc}};
  return {{"schema", schema_version},
          {"model", plan_model_name(p.model)},
          {"params", params},
          {"r", p.r},
          {"ell", p.ell},
          {"gates_per_step", p.gates_per_step},
          {"gates", p.gates},
          {"gate_n_exponent", p.gate_n_exponent},
          {"gate_t_exponent", p.gate_t_exponent},
          {"previous_gates", real_or_null(p.previous_gates)},
          {"runtime_exponent", p.runtime_exponent},
          {"previous_runtime_exponent", real_or_null(p.previous_runtime_exponent)},
          {"notes", p.notes}};
}

json qmc_plan_to_json(const QmcPlan& p) {
  json cons = json::array();
  for (const auto& [label, v] : p.constraints) cons.push_back({{"label", label}, {"value", v}});
  return {{"schema", schema_version}, {"r", p.r}, {"eps", p.eps}, {"t", p.t}, {"power_of_two", p.power_of_two},
          {"constraints", cons}};
}

json light_cone_plan_to_json(const LightConePlan& p) {
  return {{"schema", schema_version},
          {"alpha", p.alpha},
          {"d", p.d},
          {"p", p.p},
          {"t", p.t},
          {"eps", p.eps},
          {"x0", p.x0},
          {"stages", p.stages},
          {"gamma", p.gamma},
          {"r", p.r},
          {"ell", p.ell},
          {"radius", p.radius},
          {"gate_count", p.gate_count},
          {"gate_exponent", p.gate_exponent},
          {"gate_exponent_limit", p.gate_exponent_limit},
          {"lr_time_exponent", p.lr_time_exponent},
          {"lr_distance_exponent", p.lr_distance_exponent},
          {"light_cone_exponent", p.light_cone_exponent}};
}

}  // namespace trotter
