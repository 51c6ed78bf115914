#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "trotter/blocks.hpp"
#include "trotter/dense.hpp"
#include "trotter/hamiltonians.hpp"

namespace trotter {

// One factor e^{t a H_group} of a product formula.
struct Exponential {
  double a = 0.0;
  int group = 0;  // 0-based summand index
};

// Coefficient/permutation table of S(t) = prod_v prod_g e^{t a_(v,g) H_{pi_v(g)}}.
// Within a stage position 1 acts first, and stage 1 acts first, unless
// `reversed` is set, in which case the whole sequence runs backwards (used by
// the shell-ordered local-observable formulas, whose stage 1 sits next to the
// observable).
struct FormulaSchedule {
  int stages = 0;
  int gamma = 0;
  std::vector<std::vector<double>> coeffs;  // [stage][position]
  std::vector<std::vector<int>> perms;      // [stage][position] -> summand, 0-based
  int order_p = 0;
  bool reversed = false;
  std::string name;

  // time-ordered factors with neighbours of the same summand merged
  std::vector<Exponential> sequence() const;
  // time-ordered factors exactly as listed in the table
  std::vector<Exponential> raw_sequence() const;
  void validate() const;
};

FormulaSchedule lie_trotter(int gamma);
FormulaSchedule suzuki(int order_2k, int gamma);
double suzuki_u(int k);  // 1/(4 - 4^{1/(2k-1)})
FormulaSchedule formula_for_order(int p, int gamma);  // 1 -> Lie-Trotter, even -> Suzuki
FormulaSchedule permuted(const FormulaSchedule& s, const std::vector<int>& relabel);

enum class TimeMode { real_time, imaginary_time };

// Block-diagonal evaluator: diagonalizes every summand (and the total) once
// per invariant block, then forms products in the eigenbases.
class Evolver {
 public:
  Evolver(const std::vector<PauliSum>& summands, TimeMode mode, const std::vector<PauliSum>& extra = {});
  Evolver(const GroupedHamiltonian& h, TimeMode mode, const std::vector<PauliSum>& extra = {});

  int n() const { return n_; }
  TimeMode mode() const { return mode_; }
  const BasisBlocks& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.count(); }

  // product of the sequence at time t on block k
  Eigen::MatrixXcd product(std::size_t k, const std::vector<Exponential>& seq, double t) const;
  // e^{-itH} (real time) or e^{tH} on block k
  Eigen::MatrixXcd exact(std::size_t k, double t) const;
  // e^{-it a H_g} or e^{t a H_g} on block k
  Eigen::MatrixXcd factor(std::size_t k, int group, double ta) const;
  // place per-block matrices into a full 2^n matrix
  DenseOperator assemble(const std::vector<Eigen::MatrixXcd>& per_block) const;

 private:
  void build(const std::vector<PauliSum>& summands, const std::vector<PauliSum>& extra);
  const Eigen::MatrixXd& real_transition(std::size_t k, int to, int from) const;
  const Eigen::MatrixXcd& complex_transition(std::size_t k, int to, int from) const;

  int n_ = 0;
  TimeMode mode_;
  BasisBlocks blocks_;
  std::vector<std::vector<HermitianEigen>> eig_;  // [block][group]
  PauliSum total_sum_;
  mutable std::vector<HermitianEigen> total_;  // diagonalized on first use
  mutable std::vector<bool> total_ready_;
  mutable std::vector<std::map<std::pair<int, int>, Eigen::MatrixXd>> wr_;
  mutable std::vector<std::map<std::pair<int, int>, Eigen::MatrixXcd>> wc_;
};

DenseOperator evaluate(const FormulaSchedule& s, const GroupedHamiltonian& h, double t,
                       TimeMode mode = TimeMode::real_time);
DenseOperator exact_evolution(const GroupedHamiltonian& h, double t, TimeMode mode = TimeMode::real_time);

// ||S(t/r)^r - e^{-itH}||
double empirical_error(const GroupedHamiltonian& h, const FormulaSchedule& s, double t, long r);
double empirical_error(const Evolver& ev, const std::vector<Exponential>& seq, double t, long r);

struct TrotterSearch {
  long r = 0;
  double error_at_r = 0.0;
  double error_below = 0.0;  // at r-1 (0 when r == 1)
  std::map<long, double> probes;
  bool monotone = true;
  std::vector<std::string> diagnostics;
};

struct SearchOptions {
  long start = 1;
  double growth = 2.0;  // bracket growth factor
  long r_cap = 10000000;
};

TrotterSearch empirical_trotter_number(const GroupedHamiltonian& h, const FormulaSchedule& s, double t, double eps,
                                       const SearchOptions& opt = {});
TrotterSearch empirical_trotter_number(const Evolver& ev, const FormulaSchedule& s, double t, double eps,
                                       const SearchOptions& opt = {});
// r0 * (err(r0)/eps)^{1/p}, refined twice; a cheap starting point for the search
long extrapolated_start(const Evolver& ev, const FormulaSchedule& s, double t, double eps, long r0 = 16);

// Generic bracket-and-bisect for the smallest r with pass(r) true.
TrotterSearch minimal_passing_r(const std::function<double(long)>& err, double eps, const SearchOptions& opt);

struct ErrorOperators {
  DenseOperator additive;        // S(t) - e^{tH}
  DenseOperator multiplicative;  // e^{-tH} S(t) - I
};
ErrorOperators error_operators(const GroupedHamiltonian& h, const FormulaSchedule& s, double t,
                               TimeMode mode = TimeMode::real_time);

DenseOperator exponentiated_error_sample(const GroupedHamiltonian& h, const FormulaSchedule& s, double tau,
                                         TimeMode mode = TimeMode::real_time);

struct OrderReport {
  int p = 0;
  double slope_additive = 0.0;     // expected p+1
  double slope_exponentiated = 0.0;  // expected p
  bool additive_ok = false;
  bool exponentiated_ok = false;
  std::vector<double> ts, additive_norms, exponentiated_norms;
  bool ok() const { return additive_ok && exponentiated_ok; }
};
// Fits log-log slopes over a geometric grid on [t_lo, t_hi]; evaluated in
// extended precision. Sixth order needs t_lo around 3e-2 to stay above the
// ~1e-17 rounding floor.
OrderReport order_condition_check(const GroupedHamiltonian& h, const FormulaSchedule& s,
                                  TimeMode mode = TimeMode::real_time, int points = 7, double t_lo = 1e-2,
                                  double t_hi = 1e-1);

double fitted_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace trotter
