#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "trotter/hamiltonians.hpp"

namespace trotter {

// Randomized property suites shared by the CLI `check` command and the
// acceptance binary.
struct SuiteResult {
  std::string name;
  int cases = 0;
  int violations = 0;
  double worst = 0.0;  // suite-specific worst margin (see each suite)
  std::vector<std::string> failures;
  bool ok() const { return cases > 0 && violations == 0; }
};

// Random Hermitian Pauli strings of locality 1..max_locality with coefficients
// uniform in [-1, 1], spread over gamma groups.
GroupedHamiltonian random_grouped_hamiltonian(int n, int gamma, int terms_per_group, int max_locality,
                                              std::mt19937_64& rng);

// fitted slopes of the additive and exponentiated errors; worst = largest
// distance from the target slope
SuiteResult suite_order_conditions(std::uint64_t seed, const std::vector<int>& orders, int n, int instances);

// ||C(tau)|| <= alpha_comm tau^p / p!; worst = max remainder / bound
SuiteResult suite_conjugation(std::uint64_t seed, int instances, int max_n, double tau_max);

// ||S^dag B S - R^dag B R|| on chains with B = obs_op on the middle site;
// alpha < 0 means nearest neighbour; worst = largest difference. B = Z keeps
// the magnetization blocks and is much cheaper than X for n >= 12.
SuiteResult suite_cancellation(const std::vector<std::uint64_t>& seeds, int n, double alpha,
                               const std::vector<double>& ts, double tol = 1e-10, char obs_op = 'X');

// TFIM eigenvalue and trace ratios at the planned r; worst = max |log ratio| / eps
SuiteResult suite_qmc(std::uint64_t seed, int instances, int max_n, double eps);

// 1st/2nd-order tight and 4th-order bounds against the single-step error;
// worst = max error / bound
SuiteResult suite_bound_dominance(std::uint64_t seed, int instances, int max_n, const std::vector<double>& ts);

// counting bound against the exact alpha_tilde of the per-site-tuple grouping;
// worst = max alpha_tilde / counting
SuiteResult suite_counting_dominance(std::uint64_t seed, int instances, int max_n, const std::vector<int>& orders);

}  // namespace trotter
