#include "trotter/checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "trotter/error_bounds.hpp"
#include "trotter/local_observables.hpp"
#include "trotter/product_formula.hpp"
#include "trotter/qmc_bounds.hpp"

namespace trotter {

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

PauliSum random_pauli_string(int n, int max_locality, std::mt19937_64& rng) {
  std::vector<int> sites(n);
  for (int i = 0; i < n; ++i) sites[i] = i;
  std::shuffle(sites.begin(), sites.end(), rng);
  int k = uniform_int(rng, 1, std::min(n, max_locality));
  mask_t x = 0, z = 0;
  for (int i = 0; i < k; ++i) {
    int op = uniform_int(rng, 1, 3);  // X, Y, Z
    if (op != 3) x |= mask_t(1) << sites[i];
    if (op != 1) z |= mask_t(1) << sites[i];
  }
  PauliSum s = PauliSum::from_entries(n, {{x, z, cplx(uniform_real(rng, -1, 1), 0)}});
  return s;
}

PauliSum random_operator(int n, int terms, int max_locality, std::mt19937_64& rng) {
  PauliSum s(n);
  for (int i = 0; i < terms; ++i) s += random_pauli_string(n, max_locality, rng);
  return s;
}

// sum of |[H_i, H_j]| coefficients; tiny values make slope fits meaningless
double commutator_weight(const GroupedHamiltonian& h) {
  auto parts = h.summands();
  double w = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) w += coefficient_one_norm(commutator(parts[i], parts[j]));
  return w;
}

void record(SuiteResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (!ok) {
    ++r.violations;
    if (r.failures.size() < 20) r.failures.push_back(what);
  }
}

std::string describe(const char* fmt_head, double a, double b) {
  std::ostringstream o;
  o.precision(6);
  o << fmt_head << ' ' << a << " vs " << b;
  return o.str();
}

}  // namespace

GroupedHamiltonian random_grouped_hamiltonian(int n, int gamma, int terms_per_group, int max_locality,
                                              std::mt19937_64& rng) {
  GroupedHamiltonian h;
  h.n = n;
  for (int g = 0; g < gamma; ++g) {
    TermGroup tg;
    tg.label = "H" + std::to_string(g + 1);
    for (int i = 0; i < terms_per_group; ++i) tg.terms.push_back(random_pauli_string(n, max_locality, rng));
    h.groups.push_back(std::move(tg));
  }
  return h;
}

SuiteResult suite_order_conditions(std::uint64_t seed, const std::vector<int>& orders, int n, int instances) {
  SuiteResult r;
  r.name = "order-conditions";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < instances; ++i) {
    int gamma = uniform_int(rng, 2, 3);
    auto h = random_grouped_hamiltonian(n, gamma, 3, 2, rng);
    while (commutator_weight(h) < 0.5) h = random_grouped_hamiltonian(n, gamma, 3, 2, rng);
    for (int p : orders) {
      double lo = p >= 6 ? 3e-2 : 1e-2, hi = p >= 6 ? 1.5e-1 : 1e-1;
      auto rep = order_condition_check(h, formula_for_order(p, gamma), TimeMode::real_time, 7, lo, hi);
      r.worst = std::max({r.worst, std::abs(rep.slope_additive - (p + 1)), std::abs(rep.slope_exponentiated - p)});
      std::ostringstream o;
      o << "instance " << i << " p=" << p << " slopes " << rep.slope_additive << ", " << rep.slope_exponentiated;
      record(r, rep.ok(), o.str());
    }
  }
  return r;
}

SuiteResult suite_conjugation(std::uint64_t seed, int instances, int max_n, double tau_max) {
  SuiteResult r;
  r.name = "conjugation-remainder";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < instances; ++i) {
    int n = uniform_int(rng, 1, max_n);
    int s = uniform_int(rng, 1, 3);
    int p = uniform_int(rng, 1, 3);
    double tau = uniform_real(rng, 0.0, tau_max);
    std::vector<PauliSum> a;
    for (int k = 0; k < s; ++k) a.push_back(random_operator(n, uniform_int(rng, 1, 3), 2, rng));
    PauliSum b = random_operator(n, uniform_int(rng, 1, 3), 2, rng);
    auto c = conjugation_remainder_check(a, b, p, tau);
    bool ok = c.remainder <= c.bound * (1 + 1e-9) + 1e-13;
    if (c.bound > 0) r.worst = std::max(r.worst, c.remainder / c.bound);
    record(r, ok, describe("remainder vs bound", c.remainder, c.bound));
  }
  return r;
}

SuiteResult suite_cancellation(const std::vector<std::uint64_t>& seeds, int n, double alpha,
                               const std::vector<double>& ts, double tol, char obs_op) {
  SuiteResult r;
  r.name = "cancellation";
  for (auto seed : seeds) {
    GroupedHamiltonian h = alpha < 0 ? heisenberg_chain(n, seed) : power_law_heisenberg(n, alpha, seed);
    int mid = n / 2;
    auto d = shell_decomposition(h, {mid}, 2, 3);
    PauliSum obs = PauliSum::single(n, mid, obs_op);
    auto diffs = cancellation_check(d, obs, ts, 2);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      r.worst = std::max(r.worst, diffs[i]);
      std::ostringstream o;
      o << "seed " << seed << " t=" << ts[i] << " difference " << diffs[i];
      record(r, diffs[i] <= tol, o.str());
    }
  }
  return r;
}

SuiteResult suite_qmc(std::uint64_t seed, int instances, int max_n, double eps) {
  SuiteResult r;
  r.name = "qmc-multiplicative";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < instances; ++i) {
    int n = uniform_int(rng, 2, max_n);
    std::map<std::pair<int, int>, double> j;
    std::map<int, double> h;
    for (int u = 0; u < n; ++u) {
      h[u] = uniform_real(rng, 0, 1);
      for (int v = u + 1; v < n; ++v) j[{u, v}] = uniform_real(rng, 0, 1);
    }
    auto parts = tfim(n, j, h);
    double t = uniform_real(rng, 0.5, 2.0);
    auto plan = tfim_trotter_number(parts.a, parts.b, t, eps);
    auto er = multiplicative_factor_check(parts.a, parts.b, t, plan.r);
    double z = partition_ratio(parts.a, parts.b, t, plan.r);
    double e = std::exp(eps);
    bool ok = er.max_ratio <= e && er.min_ratio >= 1 / e && z <= e && z >= 1 / e;
    r.worst = std::max({r.worst, std::abs(std::log(er.max_ratio)) / eps, std::abs(std::log(er.min_ratio)) / eps,
                        std::abs(std::log(z)) / eps});
    std::ostringstream o;
    o << "n=" << n << " r=" << plan.r << " max " << er.max_ratio << " min " << er.min_ratio << " Z'/Z " << z;
    record(r, ok, o.str());
  }
  return r;
}

SuiteResult suite_bound_dominance(std::uint64_t seed, int instances, int max_n, const std::vector<double>& ts) {
  SuiteResult r;
  r.name = "bound-dominance";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < instances; ++i) {
    int n = uniform_int(rng, 2, max_n);
    int gamma = uniform_int(rng, 2, 3);
    auto h = random_grouped_hamiltonian(n, gamma, uniform_int(rng, 1, 3), 2, rng);
    Evolver ev(h, TimeMode::real_time);
    for (int p : {1, 2, 4}) {
      auto seq = formula_for_order(p, gamma).sequence();
      for (double t : ts) {
        double bound = p == 4 ? fourth_order_bound(h, t, NormMode::dense_exact).value
                              : tight_low_order_bound(h, t, p, NormMode::dense_exact).value;
        double err = empirical_error(ev, seq, t, 1);
        bool ok = err <= bound * (1 + 1e-9) + 1e-13;
        if (bound > 0) r.worst = std::max(r.worst, err / bound);
        std::ostringstream o;
        o << "instance " << i << " n=" << n << " gamma=" << gamma << " p=" << p << " t=" << t << " error " << err
          << " bound " << bound;
        record(r, ok, o.str());
      }
    }
  }
  return r;
}

SuiteResult suite_counting_dominance(std::uint64_t seed, int instances, int max_n, const std::vector<int>& orders) {
  SuiteResult r;
  r.name = "counting-dominance";
  std::mt19937_64 rng(seed);
  for (int i = 0; i < instances; ++i) {
    int n = uniform_int(rng, 2, max_n);
    GroupedHamiltonian one;
    one.n = n;
    one.groups.push_back(TermGroup{"H", {}});
    int count = uniform_int(rng, 2, 6);
    for (int k = 0; k < count; ++k) one.groups[0].terms.push_back(random_operator(n, uniform_int(rng, 1, 2), 2, rng));
    // one summand per site tuple
    std::vector<std::string> labels;
    for (const auto& term : one.elementary_terms()) {
      std::string key;
      for (int s : support(term)) key += std::to_string(s) + ",";
      labels.push_back(key);
    }
    auto grouped = group_terms(one, Grouping::custom, labels);
    auto tensor = lattice_tensor(grouped);
    for (int p : orders) {
      double counting = counting_bound_klocal(tensor, p);
      double exact = alpha_tilde(grouped, p, NormMode::dense_exact).value;
      bool ok = exact <= counting * (1 + 1e-9) + 1e-12;
      if (counting > 0) r.worst = std::max(r.worst, exact / counting);
      record(r, ok, describe("alpha_tilde vs counting", exact, counting));
    }
  }
  return r;
}

}  // namespace trotter
