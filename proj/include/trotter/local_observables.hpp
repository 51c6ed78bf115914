#pragma once

#include <vector>

#include "trotter/hamiltonians.hpp"
#include "trotter/pauli.hpp"
#include "trotter/product_formula.hpp"

namespace trotter {

// Terms of a 1-D Hamiltonian grouped by their distance to an observable.
// Shell 0 is the observable's support; shell s >= 1 holds the sites at
// distance in ((s-1)l, sl].
//   H_1:     every site of the term in shells 0..1
//   H_g:     sites in shells {g-1, g}, at least one in g   (2 <= g <= Gamma-1)
//   H_Gamma: sites in shells >= Gamma-1, at least one in shells >= Gamma
// Anything else spans non-adjacent shells and is dropped.
struct ShellDecomposition {
  int n = 0;
  int gamma = 0;
  int ell = 0;
  std::vector<TermGroup> groups;  // H_1..H_Gamma, labels "H1".."HGamma"
  std::vector<int> obs_support;
  std::vector<int> shell_of_site;
  PauliSum dropped;
  double dropped_weight = 0.0;  // sum |coeff| of the dropped Pauli strings

  std::vector<PauliSum> summands() const;
  GroupedHamiltonian as_grouped() const;
};

ShellDecomposition shell_decomposition(const GroupedHamiltonian& h, const std::vector<int>& obs_support, int ell,
                                       int gamma);

// Suzuki formula of order base_order with the stage permutations
// (2,4,6,...,1,3,5,...) for odd stages and (1,3,5,...,2,4,6,...) for even
// ones. The sequence is stored reversed so that stage 1 sits next to the
// observable in S^dagger B S.
FormulaSchedule constrained_schedule(int stages, int gamma, int base_order, bool require_cancellation = true);

// stage v keeps only the exponentials of H_1..H_v, in their original order;
// dropped positions get coefficient 0
FormulaSchedule reduced_formula(const FormulaSchedule& s);
int exponential_count(const FormulaSchedule& s);

// || S^dagger B S - R^dagger B R || for the constrained formula S and its
// reduction R, evaluated densely (per invariant block)
double cancellation_check(const ShellDecomposition& d, const PauliSum& obs, double t, int base_order = 2);
// several times sharing one diagonalization
std::vector<double> cancellation_check(const ShellDecomposition& d, const PauliSum& obs, const std::vector<double>& ts,
                                       int base_order = 2);

struct LightConePlan {
  double alpha = 0.0;
  int d = 1;
  int p = 0;
  double t = 0.0;
  double eps = 0.0;
  double x0 = 0.0;
  int stages = 0;
  int gamma = 0;
  long r = 0;
  long ell = 0;
  double radius = 0.0;
  double gate_count = 0.0;
  double gate_exponent = 0.0;        // exponent of t at this p
  double gate_exponent_limit = 0.0;  // p -> infinity
  double lr_time_exponent = 0.0;     // C(t, rho) ~ t^a / rho^b
  double lr_distance_exponent = 0.0;
  double light_cone_exponent = 0.0;  // t ~ rho^{b/a}
  double lr_bound(double rho) const;
};

// All Theta/O prefactors are 1; integers are rounded up.
LightConePlan light_cone_planner(double alpha, int d, int p, double t, double eps, double x0 = 0.0);

}  // namespace trotter
