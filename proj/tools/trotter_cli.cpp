#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trotter/checks.hpp"
#include "trotter/error_bounds.hpp"
#include "trotter/errors.hpp"
#include "trotter/hamiltonians.hpp"
#include "trotter/io.hpp"
#include "trotter/local_observables.hpp"
#include "trotter/product_formula.hpp"
#include "trotter/qmc_bounds.hpp"
#include "trotter/resource_planner.hpp"

using namespace trotter;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// "10", "4:12", "4:12:2" or "10,16,32"
std::vector<int> parse_n_list(const std::string& s) {
  std::vector<int> out;
  try {
    if (s.find(':') != std::string::npos) {
      std::vector<int> parts;
      std::stringstream ss(s);
      std::string tok;
      while (std::getline(ss, tok, ':')) parts.push_back(std::stoi(tok));
      if (parts.size() < 2 || parts.size() > 3) throw input_error("bad n range '" + s + "'");
      int step = parts.size() == 3 ? parts[2] : 1;
      if (step < 1) throw input_error("n range step must be >= 1");
      for (int n = parts[0]; n <= parts[1]; n += step) out.push_back(n);
    } else {
      std::stringstream ss(s);
      std::string tok;
      while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    }
  } catch (const std::logic_error&) {
    throw input_error("bad n list '" + s + "'");
  }
  if (out.empty()) throw input_error("empty n list");
  return out;
}

std::string cell(std::optional<double> v) { return v ? format_real(*v) : std::string(); }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

double sample_std(const std::vector<double>& v, double mean) {
  if (v.size() < 2) return 0.0;
  double s = 0;
  for (double x : v) s += (x - mean) * (x - mean);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
  std::string model = "heisenberg-nn";
  std::string ordering = "even-odd";
  std::string n_list = "10";
  std::string t_rule = "t=n";
  double t = 0;
  double eps = 1e-3;
  int instances = 5;
  std::uint64_t seed = 1;
  int order = 4;
  std::string mode;
  double alpha = 0;
  bool no_empirical = false;
  bool no_bound = false;
  std::string record;
};

struct BenchRow {
  int n = 0;
  int instance = 0;
  std::uint64_t seed = 0;
  double t = 0;
  std::optional<double> r_emp, r_bound, r_one, ratio;
};

double bound_constant(const BenchOptions& o, const GroupedHamiltonian& g, const std::vector<double>& fields,
                      Grouping grouping, NormMode mode) {
  bool nn = o.model == "heisenberg-nn";
  if (o.order == 4) {
    if (nn && mode != NormMode::dense_exact) return chain_fourth_order_bound(fields, grouping, 1.0, mode).value;
    return fourth_order_bound(g, 1.0, mode).value;
  }
  if (o.order == 1 || o.order == 2) return tight_low_order_bound(g, 1.0, o.order, mode).value;
  throw input_error("bench bounds exist for orders 1, 2 and 4");
}

int run_bench(const BenchOptions& o) {
  auto t0 = std::chrono::steady_clock::now();
  if (o.model != "heisenberg-nn" && o.model != "heisenberg-pl") throw input_error("unknown bench model '" + o.model + "'");
  if (o.instances < 1) throw input_error("instances must be >= 1");
  if (!(o.eps > 0)) throw input_error("eps must be positive");
  if (o.t_rule != "t=n" && o.t_rule != "fixed") throw input_error("t-rule must be 't=n' or 'fixed'");
  if (o.t_rule == "fixed" && !(o.t > 0)) throw input_error("fixed t-rule needs --t > 0");
  Grouping grouping = parse_grouping(o.ordering);
  if (grouping != Grouping::even_odd && grouping != Grouping::xyz)
    throw input_error("bench ordering must be even-odd or x-y-z");
  bool nn = o.model == "heisenberg-nn";
  NormMode mode = o.mode.empty() ? (nn ? NormMode::cluster : NormMode::dense_exact) : parse_norm_mode(o.mode);
  auto ns = parse_n_list(o.n_list);
  for (int n : ns) {
    if (n < 2) throw input_error("n must be >= 2");
    if (!o.no_empirical && n > dense_qubit_cap())
      throw dimension_error("empirical mode: n=" + std::to_string(n) + " exceeds the dense cap of " +
                            std::to_string(dense_qubit_cap()) + " (use --no-empirical)");
    if (n > max_qubits && !(nn && o.order == 4 && mode != NormMode::dense_exact))
      throw input_error("n > 62 is only supported for the nearest-neighbour 4th-order window bound");
  }

  std::vector<BenchRow> rows;
  for (int n : ns) {
    double t = o.t_rule == "t=n" ? static_cast<double>(n) : o.t;
    for (int i = 0; i < o.instances; ++i) {
      BenchRow row;
      row.n = n;
      row.instance = i;
      row.seed = o.seed + static_cast<std::uint64_t>(i);
      row.t = t;
      auto fields = random_fields(static_cast<std::size_t>(n - 1), row.seed);
      std::optional<GroupedHamiltonian> g;
      if (n <= max_qubits)
        g = group_terms(nn ? heisenberg_chain(n, fields) : power_law_heisenberg(n, o.alpha, fields), grouping);
      if (!o.no_bound) {
        double c = bound_constant(o, g ? *g : GroupedHamiltonian{}, fields, grouping, mode);
        row.r_bound = static_cast<double>(bound_trotter_number(c, o.order, t, o.eps));
        if (g) {
          std::vector<double> norms;
          for (const auto& s : g->summands()) norms.push_back(n <= dense_qubit_cap() ? operator_norm(s) : coefficient_one_norm(s));
          row.r_one = static_cast<double>(one_norm_trotter_number(norms, o.order, t, o.eps));
        }
      }
      if (!o.no_empirical) {
        Evolver ev(*g, TimeMode::real_time);
        auto sched = formula_for_order(o.order, static_cast<int>(g->gamma()));
        SearchOptions so;
        so.start = extrapolated_start(ev, sched, t, o.eps);
        auto res = empirical_trotter_number(ev, sched, t, o.eps, so);
        row.r_emp = static_cast<double>(res.r);
        for (const auto& d : res.diagnostics) std::cerr << "n=" << n << " seed=" << row.seed << ": " << d << '\n';
      }
      if (row.r_emp && row.r_bound) row.ratio = *row.r_bound / *row.r_emp;
      rows.push_back(row);
    }
  }

  std::ostringstream csv;
  csv << "model,ordering,n,instance,seed,t,eps,order,mode,r_empirical,r_bound_ours,r_bound_1norm,ratio\n";
  auto prefix = [&](int n, const std::string& inst, const std::string& seed, double t) {
    csv << o.model << ',' << grouping_name(grouping) << ',' << n << ',' << inst << ',' << seed << ',' << format_real(t)
        << ',' << format_real(o.eps) << ',' << o.order << ',' << norm_mode_name(mode);
  };
  json per_instance = json::array();
  json aggregate = json::array();
  for (int n : ns) {
    std::vector<const BenchRow*> mine;
    for (const auto& r : rows)
      if (r.n == n) mine.push_back(&r);
    for (const auto* r : mine) {
      prefix(n, std::to_string(r->instance), std::to_string(r->seed), r->t);
      csv << ',' << cell(r->r_emp) << ',' << cell(r->r_bound) << ',' << cell(r->r_one) << ',' << cell(r->ratio) << '\n';
      per_instance.push_back({{"n", n},
                              {"instance", r->instance},
                              {"seed", r->seed},
                              {"t", r->t},
                              {"r_empirical", r->r_emp ? json(*r->r_emp) : json(nullptr)},
                              {"r_bound_ours", r->r_bound ? json(*r->r_bound) : json(nullptr)},
                              {"r_bound_1norm", r->r_one ? json(*r->r_one) : json(nullptr)},
                              {"ratio", r->ratio ? json(*r->ratio) : json(nullptr)}});
    }
    auto stats = [&](auto get) -> std::pair<std::optional<double>, std::optional<double>> {
      std::vector<double> v;
      for (const auto* r : mine)
        if (auto x = get(*r)) v.push_back(*x);
      if (v.empty()) return {std::nullopt, std::nullopt};
      double m = 0;
      for (double x : v) m += x;
      m /= static_cast<double>(v.size());
      return {m, sample_std(v, m)};
    };
    auto e = stats([](const BenchRow& r) { return r.r_emp; });
    auto b = stats([](const BenchRow& r) { return r.r_bound; });
    auto one = stats([](const BenchRow& r) { return r.r_one; });
    std::optional<double> ratio;
    if (e.first && b.first) ratio = *b.first / *e.first;
    double t = mine.front()->t;
    prefix(n, "mean", "", t);
    csv << ',' << cell(e.first) << ',' << cell(b.first) << ',' << cell(one.first) << ',' << cell(ratio) << '\n';
    prefix(n, "std", "", t);
    csv << ',' << cell(e.second) << ',' << cell(b.second) << ',' << cell(one.second) << ",\n";
    aggregate.push_back({{"n", n},
                         {"mean_r_empirical", e.first ? json(*e.first) : json(nullptr)},
                         {"std_r_empirical", e.second ? json(*e.second) : json(nullptr)},
                         {"mean_r_bound_ours", b.first ? json(*b.first) : json(nullptr)},
                         {"std_r_bound_ours", b.second ? json(*b.second) : json(nullptr)},
                         {"ratio_of_means", ratio ? json(*ratio) : json(nullptr)}});
  }
  std::cout << csv.str();
  if (!o.record.empty()) {
    json rec = {{"schema", schema_version},
                {"subcommand", "bench"},
                {"params",
                 {{"model", o.model},
                  {"ordering", grouping_name(grouping)},
                  {"n", o.n_list},
                  {"t_rule", o.t_rule},
                  {"t", o.t},
                  {"eps", o.eps},
                  {"instances", o.instances},
                  {"order", o.order},
                  {"mode", norm_mode_name(mode)},
                  {"alpha", o.alpha}}},
                {"seed", o.seed},
                {"per_instance", per_instance},
                {"aggregate", aggregate},
                {"wall_time_s", seconds_since(t0)}};
    std::ofstream f(o.record);
    if (!f) throw input_error("cannot write " + o.record);
    f << rec.dump(2) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- bound

struct BoundOptions {
  std::string ham;
  int order = 1;
  double t = 0.1;
  std::string mode = "dense";
  std::string kind = "auto";
  double eps = 0;
};

int run_bound(const BoundOptions& o) {
  auto h = read_hamiltonian(o.ham);
  NormMode mode = parse_norm_mode(o.mode);
  std::string kind = o.kind;
  if (kind == "auto") kind = o.order == 4 ? "fourth" : (o.order <= 2 ? "tight" : "alpha-tilde");
  BoundReport rep;
  std::optional<long> r;
  if (kind == "tight") {
    rep = tight_low_order_bound(h, o.t, o.order, mode);
    if (o.eps > 0) {
      double c = tight_low_order_bound(h, 1.0, o.order, mode).value;
      r = bound_trotter_number(c, o.order, o.t, o.eps);
    }
  } else if (kind == "fourth") {
    if (o.order != 4) throw input_error("the fourth-order bound needs --order 4");
    rep = fourth_order_bound(h, o.t, mode);
    if (o.eps > 0) r = bound_trotter_number(fourth_order_bound(h, 1.0, mode).value, 4, o.t, o.eps);
  } else if (kind == "alpha-tilde") {
    rep = alpha_tilde(h, o.order, mode);
    if (o.eps > 0) r = comm_trotter_number(rep.value, o.order, o.t, o.eps);
  } else if (kind == "counting") {
    rep.value = counting_bound_klocal(lattice_tensor(h), o.order);
    rep.mode = mode;
    rep.order_p = o.order;
    if (o.eps > 0) r = comm_trotter_number(rep.value, o.order, o.t, o.eps);
  } else if (kind == "one-norm") {
    std::vector<double> norms;
    for (std::size_t g = 0; g < h.groups.size(); ++g) {
      double v = nested_norm(h.groups[g].sum(), mode);
      norms.push_back(v);
      rep.per_term.push_back({h.groups[g].label, 1.0, v});
    }
    rep.value = one_norm_bound(norms, stage_count(o.order), o.order, o.t, true);
    rep.mode = mode;
    rep.order_p = o.order;
    if (o.eps > 0) r = one_norm_trotter_number(norms, o.order, o.t, o.eps);
  } else {
    throw input_error("unknown bound kind '" + kind + "'");
  }
  rep.t = o.t;
  json out = bound_report_to_json(rep);
  out["kind"] = kind;
  if (r) {
    out["eps"] = o.eps;
    out["trotter_number"] = *r;
  }
  emit(out);
  return 0;
}

// ---------------------------------------------------------------- empirical

struct EmpiricalOptions {
  std::string ham;
  int order = 1;
  double t = 1.0;
  double eps = 1e-3;
  long r = 0;
};

int run_empirical(const EmpiricalOptions& o) {
  auto h = read_hamiltonian(o.ham);
  check_dense_qubits(h.n, "empirical");
  auto sched = formula_for_order(o.order, static_cast<int>(h.gamma()));
  Evolver ev(h, TimeMode::real_time);
  json out = {{"schema", schema_version}, {"order", o.order}, {"t", o.t}, {"schedule", schedule_to_json(sched)}};
  if (o.r > 0) {
    out["r"] = o.r;
    out["error"] = empirical_error(ev, sched.sequence(), o.t, o.r);
  } else {
    SearchOptions so;
    so.start = extrapolated_start(ev, sched, o.t, o.eps);
    auto res = empirical_trotter_number(ev, sched, o.t, o.eps, so);
    out["eps"] = o.eps;
    out["r"] = res.r;
    out["error_at_r"] = res.error_at_r;
    out["error_below"] = res.error_below;
    out["monotone"] = res.monotone;
    out["diagnostics"] = res.diagnostics;
  }
  emit(out);
  return 0;
}

// ---------------------------------------------------------------- plan

struct PlanOptions {
  std::string model;
  PlanParams q;
  std::string ham;
  double x0 = 0;
  bool csv = false;
};

int run_plan(PlanOptions o) {
  if (!o.ham.empty()) {
    auto h = read_hamiltonian(o.ham);
    auto tensor = lattice_tensor(h);
    o.q.induced_norm = induced_one_norm(tensor);
    o.q.one_norm = one_norm(tensor);
    o.q.k = std::max(1, tensor.k);
    if (o.q.n <= 0) o.q.n = h.n;
  }
  if (o.model == "light-cone") {
    emit(light_cone_plan_to_json(light_cone_planner(o.q.alpha, o.q.d, o.q.p, o.q.t, o.q.eps, o.x0)));
    return 0;
  }
  std::vector<SimulationPlan> plans;
  if (o.model == "all") {
    for (auto m : {PlanModel::electronic_structure, PlanModel::k_local, PlanModel::power_law,
                   PlanModel::power_law_truncated, PlanModel::quasilocal, PlanModel::clustered}) {
      try {
        plans.push_back(plan(m, o.q));
      } catch (const input_error& e) {
        std::cerr << plan_model_name(m) << ": skipped (" << e.what() << ")\n";
      }
    }
    if (plans.empty()) throw input_error("no model accepts these parameters");
    o.csv = true;
  } else {
    plans.push_back(plan(parse_plan_model(o.model), o.q));
  }
  if (o.csv) {
    for (const auto& row : plan_csv(plans)) std::cout << row << '\n';
  } else {
    emit(plan_to_json(plans.front()));
  }
  return 0;
}

// ---------------------------------------------------------------- qmc

struct QmcOptions {
  std::string kind = "tfim";
  int n = 4;
  std::uint64_t seed = 1;
  double j = 1.0;
  double hx = 1.0;
  double t = 1.0;
  double eps = 0.1;
  double c = 1.0;
  std::string mode = "dense";
  bool verify = false;
};

int run_qmc(const QmcOptions& o) {
  if (o.kind == "ferromagnet") {
    emit(qmc_plan_to_json(ferromagnet_trotter_number(o.n, o.t, o.eps, o.c)));
    return 0;
  }
  if (o.kind != "tfim") throw input_error("qmc kind must be tfim or ferromagnet");
  if (o.n < 1 || o.n > max_qubits) throw input_error("n out of range");
  if (!(o.j >= 0) || !(o.hx >= 0)) throw input_error("coupling scales must be nonnegative");
  FieldRng rng(o.seed);
  std::map<std::pair<int, int>, double> couplings;
  std::map<int, double> fields;
  for (int u = 0; u < o.n; ++u) {
    fields[u] = o.hx * rng.uniform();
    for (int v = u + 1; v < o.n; ++v) couplings[{u, v}] = o.j * rng.uniform();
  }
  auto parts = tfim(o.n, couplings, fields);
  auto plan = tfim_trotter_number(parts.a, parts.b, o.t, o.eps, parse_norm_mode(o.mode));
  json out = qmc_plan_to_json(plan);
  out["n"] = o.n;
  out["seed"] = o.seed;
  int status = 0;
  if (o.verify) {
    auto er = multiplicative_factor_check(parts.a, parts.b, o.t, plan.r);
    double z = partition_ratio(parts.a, parts.b, o.t, plan.r);
    double e = std::exp(o.eps);
    bool ok = er.max_ratio <= e && er.min_ratio >= 1 / e && z <= e && z >= 1 / e;
    out["verify"] = {{"max_ratio", er.max_ratio}, {"min_ratio", er.min_ratio}, {"partition_ratio", z}, {"ok", ok}};
    if (!ok) status = 1;
  }
  emit(out);
  return status;
}

// ---------------------------------------------------------------- check

int run_check(const std::string& suite, std::uint64_t seed) {
  std::vector<std::string> names = {"order", "cancellation", "conjugation", "qmc", "dominance", "counting"};
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw input_error("unknown suite '" + suite + "'");
  bool all_ok = true;
  for (const auto& name : names) {
    if (suite != "all" && suite != name) continue;
    SuiteResult r;
    if (name == "order") r = suite_order_conditions(seed, {1, 2, 4, 6}, 4, 2);
    if (name == "cancellation") r = suite_cancellation({seed}, 10, -1.0, {0.5, 1.0});
    if (name == "conjugation") r = suite_conjugation(seed, 50, 4, 0.1);
    if (name == "qmc") r = suite_qmc(seed, 10, 5, 0.1);
    if (name == "dominance") r = suite_bound_dominance(seed, 30, 5, {0.05, 0.1, 0.2});
    if (name == "counting") r = suite_counting_dominance(seed, 30, 5, {1, 2});
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases << " violations=" << r.violations
              << " worst=" << format_real(r.worst) << '\n';
    for (const auto& f : r.failures) std::cout << "  " << f << '\n';
    all_ok = all_ok && r.ok();
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------- ham

struct HamOptions {
  std::string model = "heisenberg-nn";
  int n = 4;
  std::uint64_t seed = 1;
  double alpha = 0;
  std::string ordering = "none";
  std::string out;
};

int run_ham(const HamOptions& o) {
  GroupedHamiltonian h;
  if (o.model == "heisenberg-nn")
    h = heisenberg_chain(o.n, o.seed);
  else if (o.model == "heisenberg-pl")
    h = power_law_heisenberg(o.n, o.alpha, o.seed);
  else
    throw input_error("unknown model '" + o.model + "'");
  if (o.ordering != "none") h = group_terms(h, parse_grouping(o.ordering));
  if (o.out.empty())
    emit(hamiltonian_to_json(h));
  else
    write_hamiltonian(h, o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trotter error bounds, empirical Trotter numbers and resource plans"};
  app.require_subcommand(1);

  BenchOptions bo;
  auto* bench = app.add_subcommand("bench", "bound vs empirical Trotter numbers on Heisenberg chains (CSV)");
  bench->add_option("--model", bo.model, "heisenberg-nn or heisenberg-pl")->capture_default_str();
  bench->add_option("--ordering", bo.ordering, "even-odd or x-y-z")->capture_default_str();
  bench->add_option("--n", bo.n_list, "n, a:b[:step] or a,b,c")->capture_default_str();
  bench->add_option("--t-rule", bo.t_rule, "t=n or fixed")->capture_default_str();
  bench->add_option("--t", bo.t, "evolution time for --t-rule fixed");
  bench->add_option("--eps", bo.eps, "target error")->capture_default_str();
  bench->add_option("--instances", bo.instances, "random-field instances per n")->capture_default_str();
  bench->add_option("--seed", bo.seed, "seed of the first instance")->capture_default_str();
  bench->add_option("--order", bo.order, "formula order (1, 2 or 4)")->capture_default_str();
  bench->add_option("--mode", bo.mode, "dense, coeff or cluster (default cluster for nn, dense for pl)");
  bench->add_option("--alpha", bo.alpha, "power-law exponent")->capture_default_str();
  bench->add_flag("--no-empirical", bo.no_empirical, "skip the dense search");
  bench->add_flag("--no-bound", bo.no_bound, "skip the bounds");
  bench->add_option("--record", bo.record, "write a JSON run record here");

  BoundOptions bd;
  auto* bound = app.add_subcommand("bound", "bound for a Hamiltonian file (JSON)");
  bound->add_option("--ham", bd.ham, "Hamiltonian JSON")->required();
  bound->add_option("--order", bd.order, "formula order")->capture_default_str();
  bound->add_option("--t", bd.t, "time")->capture_default_str();
  bound->add_option("--mode", bd.mode, "dense, coeff or cluster")->capture_default_str();
  bound->add_option("--kind", bd.kind, "auto, tight, fourth, alpha-tilde, counting or one-norm")->capture_default_str();
  bound->add_option("--eps", bd.eps, "also report the Trotter number for this error");

  EmpiricalOptions em;
  auto* empirical = app.add_subcommand("empirical", "dense Trotter error or minimal Trotter number (JSON)");
  empirical->add_option("--ham", em.ham, "Hamiltonian JSON")->required();
  empirical->add_option("--order", em.order, "formula order")->capture_default_str();
  empirical->add_option("--t", em.t, "time")->capture_default_str();
  empirical->add_option("--eps", em.eps, "target error")->capture_default_str();
  empirical->add_option("--r", em.r, "evaluate the error at this r instead of searching");

  PlanOptions po;
  auto* planc = app.add_subcommand("plan", "resource plans (JSON, or CSV grid)");
  planc->add_option("--model", po.model,
                    "electronic-structure, k-local, power-law, power-law-truncated, quasilocal, clustered, "
                    "light-cone or all")
      ->required();
  planc->add_option("--n", po.q.n, "system size");
  planc->add_option("--t", po.q.t, "time")->required();
  planc->add_option("--eps", po.q.eps, "target error")->required();
  planc->add_option("--p", po.q.p, "formula order")->capture_default_str();
  planc->add_option("--alpha", po.q.alpha, "power-law exponent");
  planc->add_option("--d", po.q.d, "lattice dimension")->capture_default_str();
  planc->add_option("--k", po.q.k, "locality")->capture_default_str();
  planc->add_option("--induced-norm", po.q.induced_norm, "|||H|||_1 for k-local");
  planc->add_option("--one-norm", po.q.one_norm, "||H||_1 for k-local");
  planc->add_option("--ham", po.ham, "compute the k-local norms from this Hamiltonian JSON");
  planc->add_option("--h-b", po.q.h_b, "cluster interaction strength");
  planc->add_option("--d-prime", po.q.d_prime, "cluster degree");
  planc->add_option("--cc", po.q.cc, "contraction complexity");
  planc->add_option("--x0", po.x0, "observable radius (light-cone)");
  planc->add_flag("--csv", po.csv, "emit a CSV row instead of JSON");

  QmcOptions qo;
  auto* qmc = app.add_subcommand("qmc", "Trotter numbers for quantum Monte Carlo (JSON)");
  qmc->add_option("--kind", qo.kind, "tfim or ferromagnet")->capture_default_str();
  qmc->add_option("--n", qo.n, "qubits")->capture_default_str();
  qmc->add_option("--seed", qo.seed, "seed for the TFIM couplings")->capture_default_str();
  qmc->add_option("--j", qo.j, "couplings uniform in [0, j]")->capture_default_str();
  qmc->add_option("--hx", qo.hx, "fields uniform in [0, hx]")->capture_default_str();
  qmc->add_option("--t,--beta", qo.t, "imaginary time")->capture_default_str();
  qmc->add_option("--eps", qo.eps, "multiplicative error")->capture_default_str();
  qmc->add_option("--c", qo.c, "ferromagnet constant")->capture_default_str();
  qmc->add_option("--mode", qo.mode, "norm mode for the TFIM constraints")->capture_default_str();
  qmc->add_flag("--verify", qo.verify, "dense eigenvalue check of the plan");

  std::string suite = "all";
  std::uint64_t check_seed = 7;
  auto* check = app.add_subcommand("check", "randomized property suites");
  check->add_option("--suite", suite, "order, cancellation, conjugation, qmc, dominance, counting or all")
      ->capture_default_str();
  check->add_option("--seed", check_seed, "seed")->capture_default_str();

  HamOptions ho;
  auto* ham = app.add_subcommand("ham", "write a model Hamiltonian as JSON");
  ham->add_option("--model", ho.model, "heisenberg-nn or heisenberg-pl")->capture_default_str();
  ham->add_option("--n", ho.n, "sites")->capture_default_str();
  ham->add_option("--seed", ho.seed, "field seed")->capture_default_str();
  ham->add_option("--alpha", ho.alpha, "power-law exponent")->capture_default_str();
  ham->add_option("--ordering", ho.ordering, "none, even-odd, x-y-z or per-term")->capture_default_str();
  ham->add_option("--out", ho.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*bench) return run_bench(bo);
    if (*bound) return run_bound(bd);
    if (*empirical) return run_empirical(em);
    if (*planc) return run_plan(po);
    if (*qmc) return run_qmc(qo);
    if (*check) return run_check(suite, check_seed);
    if (*ham) return run_ham(ho);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const contract_error& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
