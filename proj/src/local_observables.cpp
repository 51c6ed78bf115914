#include "trotter/local_observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "trotter/blocks.hpp"
#include "trotter/dense.hpp"
#include "trotter/error_bounds.hpp"
#include "trotter/errors.hpp"

namespace trotter {

std::vector<PauliSum> ShellDecomposition::summands() const {
  std::vector<PauliSum> out;
  for (const auto& g : groups) {
    PauliSum s = g.sum();
    if (s.empty()) s = PauliSum(n);
    out.push_back(std::move(s));
  }
  return out;
}

GroupedHamiltonian ShellDecomposition::as_grouped() const {
  GroupedHamiltonian h;
  h.n = n;
  h.groups = groups;
  h.geometry = Geometry{1, std::numeric_limits<double>::infinity()};
  return h;
}

ShellDecomposition shell_decomposition(const GroupedHamiltonian& h, const std::vector<int>& obs_support, int ell,
                                       int gamma) {
  if (obs_support.empty()) throw input_error("shell decomposition needs a nonempty observable support");
  if (gamma < 2) throw input_error("shell decomposition needs Gamma >= 2");
  if (ell < 1) throw input_error("shell thickness must be >= 1");
  if (h.geometry && h.geometry->d != 1) throw input_error("shell decomposition is implemented for 1-D chains");
  const int n = h.n;
  ShellDecomposition out;
  out.n = n;
  out.gamma = gamma;
  out.ell = ell;
  out.obs_support = obs_support;
  std::sort(out.obs_support.begin(), out.obs_support.end());
  out.obs_support.erase(std::unique(out.obs_support.begin(), out.obs_support.end()), out.obs_support.end());
  for (int s : out.obs_support)
    if (s < 0 || s >= n) throw input_error("observable support outside the chain");
  out.shell_of_site.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int dist = n;
    for (int s : out.obs_support) dist = std::min(dist, std::abs(i - s));
    out.shell_of_site[i] = dist == 0 ? 0 : (dist + ell - 1) / ell;
  }
  out.groups.resize(gamma);
  for (int g = 0; g < gamma; ++g) out.groups[g].label = "H" + std::to_string(g + 1);
  out.dropped = PauliSum(n);

  auto place = [&](const std::vector<int>& sites) -> int {  // 0-based group, -1 = dropped
    int lo = std::numeric_limits<int>::max(), hi = -1;
    for (int s : sites) {
      lo = std::min(lo, out.shell_of_site[s]);
      hi = std::max(hi, out.shell_of_site[s]);
    }
    if (hi <= 1) return 0;
    for (int g = 2; g <= gamma - 1; ++g)
      if (lo >= g - 1 && hi == g) return g - 1;
    if (lo >= gamma - 1 && hi >= gamma) return gamma - 1;
    return -1;
  };

  for (const auto& term : h.elementary_terms()) {
    // split mixed terms so that each Pauli string is placed by its own sites
    std::map<std::vector<int>, PauliSum> by_sites;
    for (const auto& e : term.terms()) {
      PauliSum one = PauliSum::from_entries(n, {e});
      auto key = support(one);
      auto it = by_sites.find(key);
      if (it == by_sites.end())
        by_sites.emplace(key, one);
      else
        it->second += one;
    }
    // keep the term whole when all its strings land in the same group
    std::set<int> targets;
    for (const auto& [sites, op] : by_sites) targets.insert(sites.empty() ? 0 : place(sites));
    if (targets.size() == 1 && *targets.begin() >= 0) {
      out.groups[*targets.begin()].terms.push_back(term);
      continue;
    }
    for (const auto& [sites, op] : by_sites) {
      int g = sites.empty() ? 0 : place(sites);
      if (g < 0) {
        out.dropped += op;
        out.dropped_weight += coefficient_one_norm(op);
      } else {
        out.groups[g].terms.push_back(op);
      }
    }
  }
  return out;
}

FormulaSchedule constrained_schedule(int stages, int gamma, int base_order, bool require_cancellation) {
  if (base_order != 2 && base_order != 4) throw input_error("constrained schedule supports base order 2 or 4");
  if (stages != stage_count(base_order))
    throw input_error("order " + std::to_string(base_order) + " Suzuki formula has " +
                      std::to_string(stage_count(base_order)) + " stages");
  if (require_cancellation && gamma != stages + 1)
    throw input_error("the cancellation identity needs Gamma = Upsilon + 1");
  if (gamma < 1) throw input_error("constrained schedule needs Gamma >= 1");
  FormulaSchedule base = suzuki(base_order, gamma);
  std::vector<int> odd_first, even_first;  // 0-based: groups 2,4,.. are indices 1,3,..
  for (int g = 1; g < gamma; g += 2) even_first.push_back(g);
  for (int g = 0; g < gamma; g += 2) even_first.push_back(g);
  for (int g = 0; g < gamma; g += 2) odd_first.push_back(g);
  for (int g = 1; g < gamma; g += 2) odd_first.push_back(g);
  FormulaSchedule s = base;
  for (int v = 0; v < s.stages; ++v) s.perms[v] = (v % 2 == 0) ? even_first : odd_first;  // v=0 is stage 1 (odd)
  s.reversed = true;
  s.name = "constrained-suzuki-" + std::to_string(base_order);
  s.validate();
  return s;
}

FormulaSchedule reduced_formula(const FormulaSchedule& s) {
  s.validate();
  FormulaSchedule out = s;
  for (int v = 0; v < s.stages; ++v)
    for (int g = 0; g < s.gamma; ++g)
      if (s.perms[v][g] > v) out.coeffs[v][g] = 0.0;  // stage v+1 keeps H_1..H_{v+1}
  out.name = s.name + "-reduced";
  return out;
}

int exponential_count(const FormulaSchedule& s) {
  int c = 0;
  for (const auto& row : s.coeffs)
    for (double a : row) c += a != 0.0;
  return c;
}

double cancellation_check(const ShellDecomposition& d, const PauliSum& obs, double t, int base_order) {
  return cancellation_check(d, obs, std::vector<double>{t}, base_order).front();
}

std::vector<double> cancellation_check(const ShellDecomposition& d, const PauliSum& obs, const std::vector<double>& ts,
                                       int base_order) {
  int stages = stage_count(base_order);
  if (d.gamma != stages + 1) throw input_error("cancellation needs Gamma = Upsilon + 1");
  for (int s : support(obs))
    if (!std::binary_search(d.obs_support.begin(), d.obs_support.end(), s))
      throw input_error("observable reaches outside the shell centre");
  check_dense_qubits(d.n, "cancellation_check");
  FormulaSchedule full = constrained_schedule(stages, d.gamma, base_order);
  FormulaSchedule red = reduced_formula(full);
  Evolver ev(d.summands(), TimeMode::real_time, {obs});
  auto seq_full = full.sequence();
  auto seq_red = red.sequence();
  std::vector<double> worst(ts.size(), 0.0);
  for (std::size_t k = 0; k < ev.block_count(); ++k) {
    Eigen::MatrixXcd b = block_matrix(obs, ev.blocks(), k);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      Eigen::MatrixXcd u = ev.product(k, seq_full, ts[i]);
      Eigen::MatrixXcd v = ev.product(k, seq_red, ts[i]);
      Eigen::MatrixXcd diff = u.adjoint() * b * u - v.adjoint() * b * v;
      worst[i] = std::max(worst[i], spectral_norm(diff));
    }
  }
  return worst;
}

double LightConePlan::lr_bound(double rho) const {
  if (!(rho > 0)) throw input_error("distance must be positive");
  return std::pow(t, lr_time_exponent) / std::pow(rho, lr_distance_exponent);
}

LightConePlan light_cone_planner(double alpha, int d, int p, double t, double eps, double x0) {
  if (d < 1) throw input_error("dimension must be >= 1");
  if (!(alpha > 2.0 * d)) throw input_error("light-cone planner needs alpha > 2d");
  if (p < 1) throw input_error("order must be >= 1");
  if (!(p > (alpha - d) * (d - 1) / (alpha - 2.0 * d))) throw input_error("order too low: need p > (alpha-d)(d-1)/(alpha-2d)");
  if (!(t > 0) || !(eps > 0)) throw input_error("t and eps must be positive");
  LightConePlan pl;
  pl.alpha = alpha;
  pl.d = d;
  pl.p = p;
  pl.t = t;
  pl.eps = eps;
  pl.x0 = x0;
  pl.stages = stage_count(p);
  pl.gamma = pl.stages + 1;
  const double a = alpha, dd = d, pp = p;
  const double den = pp * (a - 2 * dd) - (a - dd) * (dd - 1);
  double r = std::pow(t, (pp * (a - 2 * dd) + a - dd) / den) / std::pow(eps, (a - dd) / den);
  pl.r = std::max(1L, static_cast<long>(std::ceil(r * (1 - 1e-12))));
  double ell = std::pow(static_cast<double>(pl.r) / t, pp / (a - dd));
  pl.ell = std::max(1L, static_cast<long>(std::ceil(ell * (1 - 1e-12))));
  pl.radius = x0 + static_cast<double>(pl.r) * pl.gamma * static_cast<double>(pl.ell);
  pl.gate_count = std::pow(std::pow(pl.radius, dd) * t, 1 + 1 / pp + dd / (a - dd));
  pl.gate_exponent = (a * (pp + 1) - dd) * (a * (dd * pp + pp + 1) - (dd + 2) * dd * pp - dd) /
                     (pp * (a - dd) * (a + dd * dd - dd * (a + 2 * pp + 1) + a * pp));
  pl.gate_exponent_limit = a * (a * (dd + 1) - (dd + 2) * dd) / ((a - dd) * (a - 2 * dd));
  pl.lr_time_exponent = (pp + 1) * (a - dd) / (a - dd + pp);
  pl.lr_distance_exponent = den / (a - dd + pp);
  pl.light_cone_exponent = pl.lr_distance_exponent / pl.lr_time_exponent;
  return pl;
}

}  // namespace trotter
