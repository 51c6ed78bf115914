// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance            criteria 1-10
//   acceptance exponents  bound-side scaling exponents
//   acceptance all        both
#include <array>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "trotter/checks.hpp"
#include "trotter/error_bounds.hpp"
#include "trotter/product_formula.hpp"

using namespace trotter;

namespace {

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
  std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool within(double x, double lo, double hi) { return x >= lo && x <= hi; }

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

double mean(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); }

struct Fig {
  double emp = 0.0, bound = 0.0;
  double ratio() const { return bound / emp; }
};

// mean empirical and bound Trotter numbers over seeds 1..5 at n=10, t=10, eps=1e-3
Fig reproduce(const std::function<GroupedHamiltonian(std::uint64_t)>& make, NormMode mode) {
  const double t = 10.0, eps = 1e-3;
  std::vector<double> emp, bnd;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GroupedHamiltonian g = make(seed);
    BoundReport b = fourth_order_bound(g, 1.0, mode);
    bnd.push_back(static_cast<double>(bound_trotter_number(b.value, 4, t, eps)));
    Evolver ev(g, TimeMode::real_time);
    FormulaSchedule s = suzuki(4, g.gamma());
    SearchOptions o;
    o.start = extrapolated_start(ev, s, t, eps);
    emp.push_back(static_cast<double>(empirical_trotter_number(ev, s, t, eps, o).r));
  }
  return {mean(emp), mean(bnd)};
}

void criterion_fig3() {
  Fig eo = reproduce([](std::uint64_t s) { return group_terms(heisenberg_chain(10, s), Grouping::even_odd); },
                     NormMode::cluster);
  report("C1 even-odd n=10",
         within(eo.emp, 120, 133) && within(eo.bound, 580, 710) && within(eo.ratio(), 4.6, 5.6),
         fmt("empirical %.1f in [120,133], bound %.1f in [580,710], ratio %.3f in [4.6,5.6]", eo.emp, eo.bound,
             eo.ratio()));
  Fig xyz = reproduce([](std::uint64_t s) { return group_terms(heisenberg_chain(10, s), Grouping::xyz); },
                      NormMode::cluster);
  report("C2 x-y-z n=10",
         within(xyz.emp, 127, 142) && within(xyz.bound, 870, 1065) && within(xyz.ratio(), 6.48, 7.92),
         fmt("empirical %.1f in [127,142], bound %.1f in [870,1065], ratio %.3f in [6.48,7.92]", xyz.emp, xyz.bound,
             xyz.ratio()));
}

void criterion_fig4() {
  Fig a0 = reproduce([](std::uint64_t s) { return group_terms(power_law_heisenberg(10, 0.0, s), Grouping::xyz); },
                     NormMode::dense_exact);
  Fig a4 = reproduce([](std::uint64_t s) { return group_terms(power_law_heisenberg(10, 4.0, s), Grouping::xyz); },
                     NormMode::dense_exact);
  bool ok0 = within(a0.bound, 5050, 6170) && within(a0.emp, 500, 610) && within(a0.ratio(), 8.67, 11.73);
  bool ok4 = within(a4.bound, 800, 975) && within(a4.emp, 116, 142) && within(a4.ratio(), 5.865, 7.935);
  report("C3 power-law n=10", ok0 && ok4,
         fmt("alpha=0: bound %.1f in [5050,6170], empirical %.1f in [500,610], ratio %.3f in [8.67,11.73]; "
             "alpha=4: bound %.1f in [800,975], empirical %.1f in [116,142], ratio %.3f in [5.865,7.935]",
             a0.bound, a0.emp, a0.ratio(), a4.bound, a4.emp, a4.ratio()));
}

void suite_line(const std::string& id, const SuiteResult& r, const char* worst_label) {
  report(id, r.ok(), fmt("%d cases, %d violations, %s %.4g", r.cases, r.violations, worst_label, r.worst));
  for (std::size_t i = 0; i < r.failures.size() && i < 5; ++i) std::printf("    %s\n", r.failures[i].c_str());
}

double hand_one_norm(const std::vector<double>& norms, int stages, int p, double t, bool anti) {
  double sum = 0.0;
  for (double x : norms) sum += x;
  double fact = 1.0;
  for (int k = 2; k <= p + 1; ++k) fact *= k;
  double big = stages * sum;
  double e1 = anti ? 1.0 : std::exp(t * big);
  double e2 = anti ? 1.0 : std::exp(t * sum);
  return std::pow(t, p + 1) / fact * (std::pow(big, p + 1) * e1 + std::pow(sum, p + 1) * e2);
}

void criterion_identities() {
  struct Tuple {
    std::vector<double> norms;
    int p;
    double t;
    bool anti;
  };
  const std::vector<Tuple> tuples = {
      {{1.0, 1.0}, 1, 0.1, true},        {{0.5, 2.0}, 2, 0.05, true},      {{1.0, 2.0, 3.0}, 4, 0.01, true},
      {{0.3, 0.7, 1.1}, 6, 0.02, true},  {{4.0}, 2, 0.2, true},           {{1.0, 1.0}, 1, 0.1, false},
      {{0.5, 2.0}, 2, 0.05, false},      {{1.0, 2.0, 3.0}, 4, 0.003, false}, {{0.2, 0.2, 0.2, 0.2}, 2, 0.1, false},
      {{2.5, 0.1}, 4, 0.01, false},
  };
  double worst = 0.0;
  for (const auto& tp : tuples) {
    int stages = stage_count(tp.p);
    double got = one_norm_bound(tp.norms, stages, tp.p, tp.t, tp.anti);
    double want = hand_one_norm(tp.norms, stages, tp.p, tp.t, tp.anti);
    worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
  }
  bool one_norm_ok = worst <= 1e-12;

  double u2 = suzuki_u(2);
  double u2_closed = 1.0 / (4.0 - std::cbrt(4.0));
  // the merged two-term S_4 sequence has B coefficients u2, u2, 1-4u2, u2, u2
  auto seq = suzuki(4, 2).sequence();
  std::vector<double> b;
  for (const auto& e : seq)
    if (e.group == 1) b.push_back(e.a);
  bool b_ok = b.size() == 5 && std::abs(b[2] - (1.0 - 4.0 * u2_closed)) <= 1e-14 &&
              std::abs(b[0] - u2_closed) <= 1e-14;
  bool u_ok = std::abs(u2 - u2_closed) <= 1e-14;

  // two-term set: [A,[A,[A,[B,A]]]] ... [B,[B,[B,[B,A]]]], A = 0, B = 1
  const std::vector<std::pair<std::array<int, 5>, double>> two = {
      {{0, 0, 0, 1, 0}, 0.0047}, {{0, 0, 1, 1, 0}, 0.0057}, {{0, 1, 0, 1, 0}, 0.0046}, {{0, 1, 1, 1, 0}, 0.0074},
      {{1, 0, 0, 1, 0}, 0.0097}, {{1, 0, 1, 1, 0}, 0.0097}, {{1, 1, 0, 1, 0}, 0.0173}, {{1, 1, 1, 1, 0}, 0.0284},
  };
  const auto& table = fourth_order_two_term();
  bool two_ok = table.size() == two.size();
  for (const auto& [pat, c] : two) {
    bool found = false;
    for (const auto& e : table)
      if (e.pattern == pat && e.coeff == c) found = true;
    two_ok = two_ok && found;
  }

  // 1-based (i,j,k,l,m) for [H_i,[H_j,[H_k,[H_l,H_m]]]]
  const std::vector<std::pair<std::array<int, 5>, double>> spots = {
      {{3, 3, 3, 3, 2}, 0.0628}, {{2, 2, 2, 2, 1}, 0.0315}, {{3, 2, 2, 2, 1}, 0.0585},
      {{3, 3, 2, 2, 1}, 0.0681}, {{1, 2, 1, 3, 2}, 0.0035}, {{2, 3, 2, 3, 2}, 0.0179},
  };
  bool three_ok = true;
  for (const auto& [k, c] : spots) three_ok = three_ok && three_term_coefficient(k[0], k[1], k[2], k[3], k[4]) == c;

  report("C10 formula identities", one_norm_ok && u_ok && b_ok && two_ok && three_ok,
         fmt("one-norm rel err %.2e (<=1e-12); u2 %s; b3 %s; two-term set %s; three-term spots %s", worst,
             u_ok ? "ok" : "mismatch", b_ok ? "ok" : "mismatch", two_ok ? "exact" : "mismatch",
             three_ok ? "exact" : "mismatch"));
}

void run_criteria() {
  criterion_fig3();
  criterion_fig4();
  suite_line("C4 bound dominance", suite_bound_dominance(4, 200, 6, {0.05, 0.1, 0.2}), "max error/bound");
  {
    SuiteResult r = suite_order_conditions(5, {1, 2, 4, 6}, 4, 3);
    suite_line("C5 order conditions", r, "max slope offset");
  }
  suite_line("C6 conjugation expansion", suite_conjugation(6, 100, 4, 0.1), "max remainder/bound");
  suite_line("C7 cancellation identity", suite_cancellation({1, 2, 3, 4, 5}, 12, -1.0, {0.1, 0.5, 1.0, 2.0}, 1e-10, 'Z'),
             "max difference");
  suite_line("C8 qmc multiplicative", suite_qmc(8, 20, 6, 0.1), "max |log ratio|/eps");
  suite_line("C9 counting dominance", suite_counting_dominance(9, 100, 5, {1, 2}), "max alpha_tilde/counting");
  criterion_identities();
}

void exponent_line(const std::string& id, const std::vector<double>& ns, const std::vector<double>& rs,
                   double target) {
  double slope = fitted_slope(ns, rs);
  std::string pts;
  for (std::size_t i = 0; i < ns.size(); ++i) pts += fmt(" %g:%g", ns[i], rs[i]);
  report(id, std::abs(slope - target) <= 0.1, fmt("slope %.3f vs %.2f +- 0.1;%s", slope, target, pts.c_str()));
}

void run_exponents() {
  const std::vector<int> ns = {10, 16, 32, 64, 128, 256};
  const double eps = 1e-3;
  std::vector<double> x(ns.begin(), ns.end());
  for (auto [gr, target, id] : {std::tuple{Grouping::even_odd, 1.52, "E1 even-odd bound exponent"},
                                std::tuple{Grouping::xyz, 1.52, "E2 x-y-z bound exponent"}}) {
    std::vector<double> r;
    for (int n : ns) {
      BoundReport b = chain_fourth_order_bound(random_fields(n - 1, 1), gr, 1.0, NormMode::cluster);
      r.push_back(static_cast<double>(bound_trotter_number(b.value, 4, n, eps)));
    }
    exponent_line(id, x, r, target);
  }
  for (auto [alpha, target, id] : {std::tuple{0.0, 2.84, "E3 power-law alpha=0 counting exponent"},
                                   std::tuple{4.0, 1.64, "E4 power-law alpha=4 counting exponent"}}) {
    std::vector<double> r;
    for (int n : ns) {
      double at = counting_bound_klocal(power_law_term_tensor(n, alpha, random_fields(n - 1, 1)), 4);
      r.push_back(static_cast<double>(comm_trotter_number(at, 4, n, eps)));
    }
    exponent_line(id, x, r, target);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::string what = argc > 1 ? argv[1] : "criteria";
  if (what != "criteria" && what != "exponents" && what != "all") {
    std::fprintf(stderr, "usage: acceptance [criteria|exponents|all]\n");
    return 2;
  }
  auto t0 = std::chrono::steady_clock::now();
  if (what != "exponents") run_criteria();
  if (what != "criteria") run_exponents();
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d failing, %.0f s\n", failures, dt);
  return failures == 0 ? 0 : 1;
}
