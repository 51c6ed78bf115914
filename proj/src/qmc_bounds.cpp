#include "trotter/qmc_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "trotter/errors.hpp"

namespace trotter {

namespace {

void check_qmc_inputs(const PauliSum& a, const PauliSum& b, double t) {
  if (a.n() != b.n()) throw dimension_error("A and B act on different qubit counts");
  if (!is_hermitian(a) || !is_hermitian(b)) throw input_error("A and B must be Hermitian");
  if (!(t > 0)) throw input_error("t must be positive");
}

// log eigenvalues of V, nonincreasing, and eigenvalues of A+B, nonincreasing
std::pair<Eigen::VectorXd, Eigen::VectorXd> log_spectra(const PauliSum& a, const PauliSum& b, double t, long r) {
  if (r < 1) throw input_error("r must be >= 1");
  check_dense_qubits(a.n(), "qmc eigenvalue check");
  DenseOperator da = to_dense(a), db = to_dense(b);
  double tau = t / static_cast<double>(r);
  DenseOperator ea = expm_real_hermitian(da, tau / 2);
  DenseOperator v = ea * expm_real_hermitian(db, tau) * ea;
  v = (0.5 * (v + v.adjoint())).eval();
  Eigen::VectorXd lv = eigvals_hermitian(v);
  for (Eigen::Index i = 0; i < lv.size(); ++i) {
    if (!(lv[i] > 0)) throw contract_error("symmetrized step is not positive definite");
    lv[i] = std::log(lv[i]);
  }
  Eigen::VectorXd lh = eigvals_hermitian(da + db);
  return {lv, lh};
}

double log_sum_exp(const Eigen::VectorXd& x) {
  double m = x.maxCoeff();
  return m + std::log((x.array() - m).exp().sum());
}

long next_power_of_two(double x) {
  long r = 1;
  while (static_cast<double>(r) < x * (1 - 1e-12)) r *= 2;
  return r;
}

}  // namespace

QmcPlan tfim_trotter_number(const PauliSum& a, const PauliSum& b, double t, double eps, NormMode mode) {
  check_qmc_inputs(a, b, t);
  if (!(eps > 0 && eps < 1)) throw input_error("eps must lie in (0, 1)");
  double na = nested_norm(a, mode), nb = nested_norm(b, mode);
  PauliSum ab = commutator(a, b);
  double aab = nested_norm(commutator(a, ab), mode);
  double bba = nested_norm(commutator(b, commutator(b, a)), mode);
  QmcPlan p;
  p.eps = eps;
  p.t = t;
  p.power_of_two = true;
  p.constraints = {{"4t(|A|+|B|)", 4 * t * (na + nb)},
                   {"sqrt(t^3|[A,[A,B]]|/eps)", std::sqrt(t * t * t * aab / eps)},
                   {"sqrt(2t^3|[B,[B,A]]|/(3eps))", std::sqrt(2 * t * t * t * bba / (3 * eps))}};
  double m = 0;
  for (const auto& c : p.constraints) m = std::max(m, c.second);
  p.r = next_power_of_two(m);
  return p;
}

EigenRatio multiplicative_factor_check(const PauliSum& a, const PauliSum& b, double t, long r) {
  check_qmc_inputs(a, b, t);
  auto [lv, lh] = log_spectra(a, b, t, r);
  Eigen::VectorXd lr = static_cast<double>(r) * lv - t * lh;
  return {std::exp(lr.maxCoeff()), std::exp(lr.minCoeff())};
}

double partition_ratio(const PauliSum& a, const PauliSum& b, double t, long r) {
  check_qmc_inputs(a, b, t);
  auto [lv, lh] = log_spectra(a, b, t, r);
  Eigen::VectorXd zv = static_cast<double>(r) * lv;
  Eigen::VectorXd zh = t * lh;
  return std::exp(log_sum_exp(zv) - log_sum_exp(zh));
}

DenseOperator matchgate(char kind, double param) {
  if (!std::isfinite(param)) throw input_error("gate parameter must be finite");
  if (kind == 'f') {
    if (!(std::abs(param) < 0.5)) throw input_error("f gate needs |t| < 1/2");
    DenseOperator m = DenseOperator::Zero(2, 2);
    m(0, 0) = std::exp(param);
    m(1, 1) = 1.0;
    return m;
  }
  if (kind != 'g' && kind != 'h') throw input_error(std::string("unknown matchgate '") + kind + "'");
  if (!(param >= 0 && param < 0.5)) throw input_error("g and h gates need 0 <= t < 1/2");
  DenseOperator m = DenseOperator::Identity(4, 4);
  int i = kind == 'g' ? 0 : 1, j = kind == 'g' ? 3 : 2;
  m(i, i) = 1.0 + param * param;
  m(i, j) = param;
  m(j, i) = param;
  return m;
}

QmcPlan ferromagnet_trotter_number(int n, double beta, double eps, double c) {
  if (n < 1) throw input_error("n must be >= 1");
  if (!(beta > 0) || !(eps > 0) || !(c > 0)) throw input_error("beta, eps and c must be positive");
  const double nn = static_cast<double>(n) * n;
  QmcPlan p;
  p.eps = eps;
  p.t = beta;
  p.constraints = {{"2beta (strict)", 2 * beta},
                   {"24n^2beta", 24 * nn * beta},
                   {"8n^2beta^2/eps", 8 * nn * beta * beta / eps},
                   {"2sqrt(c)n^2beta^1.5/sqrt(eps)", 2 * std::sqrt(c) * nn * std::pow(beta, 1.5) / std::sqrt(eps)}};
  double m = 1.0;
  for (std::size_t i = 1; i < p.constraints.size(); ++i) m = std::max(m, p.constraints[i].second);
  long r = std::max(1L, static_cast<long>(std::ceil(m * (1 - 1e-12))));
  long strict = static_cast<long>(std::floor(2 * beta)) + 1;  // r > 2 beta
  if (2 * beta < 1) strict = 1;
  p.r = std::max(r, strict);
  return p;
}

}  // namespace trotter
