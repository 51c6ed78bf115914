#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "trotter/hamiltonians.hpp"
#include "trotter/pauli.hpp"

namespace trotter {

// dense_exact: exact spectral norm of the full nested commutator.
// coeff_1norm: sum of |coefficients| of the symbolic commutator.
// cluster: innermost operand expanded into its elementary terms, each
//   contribution normed exactly on its own support, then summed.
enum class NormMode { dense_exact, coeff_1norm, cluster };
NormMode parse_norm_mode(const std::string& s);
std::string norm_mode_name(NormMode m);

struct BoundTerm {
  std::string label;
  double coeff = 0.0;  // includes the power of t
  double norm = 0.0;
};

struct BoundReport {
  double value = 0.0;
  std::vector<BoundTerm> per_term;
  NormMode mode = NormMode::dense_exact;
  int order_p = 0;
  double t = 0.0;
};

double nested_norm(const PauliSum& op, NormMode mode);

// ---- 1-norm scaling ----
double one_norm_bound(const std::vector<double>& group_norms, int stages, int p, double t, bool anti_hermitian);
int stage_count(int p);  // 1 for Lie-Trotter, 2*5^{k-1} for order 2k
long one_norm_trotter_number(const std::vector<double>& group_norms, int p, double t, double eps,
                             bool anti_hermitian = true);

// ---- conjugation expansion ----
double alpha_comm_conjugation(const std::vector<PauliSum>& a_list, const PauliSum& b, int p,
                              NormMode mode = NormMode::dense_exact);
struct ConjugationCheck {
  double remainder = 0.0;
  double bound = 0.0;
};
// a_list Hermitian, generators -i*a; remainder of e^{-itA_s}..e^{-itA_1} B (..)^dagger
// after removing its degree p-1 Taylor polynomial
ConjugationCheck conjugation_remainder_check(const std::vector<PauliSum>& a_list, const PauliSum& b, int p,
                                             double tau);

// ---- commutator scaling ----
BoundReport alpha_tilde(const GroupedHamiltonian& h, int p, NormMode mode = NormMode::dense_exact,
                        double cap = 1e6);
long comm_trotter_number(double alpha_tilde, int p, double t, double eps, double prefactor = 1.0);

// ---- explicit bounds ----
BoundReport tight_low_order_bound(const GroupedHamiltonian& h, double t, int order,
                                  NormMode mode = NormMode::dense_exact);

struct FourthOrderEntry {
  std::array<int, 5> pattern;  // outer..inner, 0-based summand indices
  double coeff;
};
const std::vector<FourthOrderEntry>& fourth_order_two_term();
const std::vector<FourthOrderEntry>& fourth_order_three_term();
double three_term_coefficient(int i, int j, int k, int l, int m);  // 1-based, 0 if absent

BoundReport fourth_order_bound(const GroupedHamiltonian& h, double t, NormMode mode = NormMode::cluster);

// Same bound for the random-field Heisenberg chain with even-odd or x-y-z
// grouping, evaluated through a sliding window so n is not limited by the
// 64-bit Pauli masks. Only cluster and coeff_1norm modes.
BoundReport chain_fourth_order_bound(const std::vector<double>& fields, Grouping grouping, double t,
                                     NormMode mode = NormMode::cluster);

// ---- counting bound ----
double counting_bound_klocal(const LatticeTermTensor& norms, int p);
// term tensor of the power-law Heisenberg chain without building operators
LatticeTermTensor power_law_term_tensor(int n, double alpha, const std::vector<double>& fields);

// ---- Trotter number from a bound ----
// smallest r with r * bound_fn(t / r) <= eps
long bound_trotter_number(const std::function<double(double)>& bound_fn, double t, double eps,
                          long r_cap = 1000000000L);
// for bounds of the form c * tau^{p+1}
long bound_trotter_number(double c, int p, double t, double eps, long r_cap = 1000000000L);

}  // namespace trotter
