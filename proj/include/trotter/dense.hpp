#pragma once

#include <complex>

#include <Eigen/Dense>

namespace trotter {

using cplx = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;

// Largest qubit count that may be materialized densely. Defaults to 14
// (dimension 2^14); TROTTER_DENSE_CAP holds a dimension and overrides it.
int dense_qubit_cap();
void set_dense_qubit_cap(int qubits);
void check_dense_qubits(int n, const char* what);

bool is_hermitian(const DenseOperator& m, double tol = 1e-10);

// e^{-i theta h} for Hermitian h
DenseOperator expm_i_hermitian(const DenseOperator& h, double theta);
// e^{theta h} for Hermitian h
DenseOperator expm_real_hermitian(const DenseOperator& h, double theta);

double spectral_norm(const DenseOperator& m);
// eigenvalues, nonincreasing
Eigen::VectorXd eigvals_hermitian(const DenseOperator& m);

// Cached eigendecomposition of a Hermitian matrix. Real symmetric input
// keeps real eigenvectors, which halves the cost of later products.
class HermitianEigen {
 public:
  HermitianEigen() = default;
  explicit HermitianEigen(const DenseOperator& h);

  Eigen::Index dim() const { return w_.size(); }
  bool is_real() const { return real_; }
  const Eigen::VectorXd& values() const { return w_; }
  const Eigen::MatrixXd& real_vectors() const { return vr_; }
  const Eigen::MatrixXcd& vectors() const { return vc_; }

  // e^{-i theta h} (real_time) or e^{theta h} otherwise
  DenseOperator exp(double theta, bool real_time) const;
  Eigen::VectorXcd exp_diagonal(double theta, bool real_time) const;

 private:
  bool real_ = false;
  Eigen::VectorXd w_;
  Eigen::MatrixXd vr_;
  Eigen::MatrixXcd vc_;
};

// Power iteration on m^dagger m for the largest singular value.
double power_iteration_norm(const DenseOperator& m, double tol = 1e-12, int max_iter = 10000);

}  // namespace trotter
