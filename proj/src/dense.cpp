#include "trotter/dense.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <string>

#include "trotter/errors.hpp"

namespace trotter {

namespace {

int initial_cap() {
  if (const char* env = std::getenv("TROTTER_DENSE_CAP")) {
    char* end = nullptr;
    unsigned long long dim = std::strtoull(env, &end, 10);
    if (end != env && dim >= 2) {
      int q = 0;
      while ((2ull << q) <= dim && q < 40) ++q;
      return q;
    }
  }
  return 14;
}

int& cap_ref() {
  static int cap = initial_cap();
  return cap;
}

void require_hermitian(const DenseOperator& h, const char* what) {
  if (h.rows() != h.cols()) throw dimension_error(std::string(what) + ": matrix is not square");
  if (!is_hermitian(h)) throw contract_error(std::string(what) + ": input is not Hermitian");
}

bool is_real_matrix(const DenseOperator& m) {
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return m.imag().cwiseAbs().maxCoeff() <= 1e-15 * scale;
}

// largest |eigenvalue| of a Hermitian matrix
double hermitian_norm(const DenseOperator& h) {
  if (h.size() == 0) return 0.0;
  if (is_real_matrix(h)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.real(), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

int dense_qubit_cap() { return cap_ref(); }
void set_dense_qubit_cap(int qubits) { cap_ref() = qubits; }

void check_dense_qubits(int n, const char* what) {
  if (n > dense_qubit_cap())
    throw dimension_error(std::string(what) + ": " + std::to_string(n) + " qubits exceeds the dense cap of " +
                          std::to_string(dense_qubit_cap()));
}

bool is_hermitian(const DenseOperator& m, double tol) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

DenseOperator expm_i_hermitian(const DenseOperator& h, double theta) {
  require_hermitian(h, "expm_i_hermitian");
  return HermitianEigen(h).exp(theta, true);
}

DenseOperator expm_real_hermitian(const DenseOperator& h, double theta) {
  require_hermitian(h, "expm_real_hermitian");
  return HermitianEigen(h).exp(theta, false);
}

Eigen::VectorXd eigvals_hermitian(const DenseOperator& m) {
  require_hermitian(m, "eigvals_hermitian");
  Eigen::VectorXd w;
  if (is_real_matrix(m)) {
    w = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m.real(), Eigen::EigenvaluesOnly).eigenvalues();
  } else {
    w = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(m, Eigen::EigenvaluesOnly).eigenvalues();
  }
  return w.reverse();
}

double spectral_norm(const DenseOperator& m) {
  if (m.size() == 0) return 0.0;
  if (is_hermitian(m, 1e-13)) return hermitian_norm(m);
  DenseOperator im = cplx(0, 1) * m;
  if (is_hermitian(im, 1e-13)) return hermitian_norm(im);
  // A full eigensolve of m^dagger m is cheap below a few thousand rows and,
  // unlike power iteration, does not stall on near-degenerate top values.
  if (m.rows() <= 2048 && m.cols() <= 2048) {
    DenseOperator g = m.adjoint() * m;
    g = 0.5 * (g + g.adjoint()).eval();
    return std::sqrt(std::max(0.0, hermitian_norm(g)));
  }
  return power_iteration_norm(m);
}

double power_iteration_norm(const DenseOperator& m, double tol, int max_iter) {
  if (m.size() == 0) return 0.0;
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> nd;
  auto random_vec = [&] {
    Eigen::VectorXcd v(m.cols());
    for (auto& c : v) c = cplx(nd(rng), nd(rng));
    return Eigen::VectorXcd(v.normalized());
  };
  Eigen::VectorXcd v = random_vec();
  double prev = 0, sigma2 = 0;
  int stagnant = 0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::VectorXcd w = m.adjoint() * (m * v);
    sigma2 = w.norm();
    if (sigma2 == 0.0) {
      // landed in the null space; restart unless m is zero
      if (m.cwiseAbs().maxCoeff() == 0.0) return 0.0;
      v = random_vec();
      continue;
    }
    v = w / sigma2;
    if (std::abs(sigma2 - prev) <= tol * sigma2) break;
    if (sigma2 <= prev) {
      if (++stagnant > 50) {
        v = random_vec();
        stagnant = 0;
      }
    }
    prev = sigma2;
  }
  return std::sqrt(sigma2);
}

HermitianEigen::HermitianEigen(const DenseOperator& h) {
  if (h.rows() != h.cols()) throw dimension_error("HermitianEigen: matrix is not square");
  if (h.size() == 0) return;
  real_ = is_real_matrix(h);
  if (real_) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.real());
    w_ = es.eigenvalues();
    vr_ = es.eigenvectors();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    w_ = es.eigenvalues();
    vc_ = es.eigenvectors();
  }
}

Eigen::VectorXcd HermitianEigen::exp_diagonal(double theta, bool real_time) const {
  Eigen::VectorXcd d(w_.size());
  for (Eigen::Index i = 0; i < w_.size(); ++i)
    d[i] = real_time ? std::polar(1.0, -theta * w_[i]) : cplx(std::exp(theta * w_[i]), 0.0);
  return d;
}

DenseOperator HermitianEigen::exp(double theta, bool real_time) const {
  Eigen::VectorXcd d = exp_diagonal(theta, real_time);
  if (real_) {
    if (!real_time) {
      Eigen::MatrixXd scaled = vr_ * d.real().asDiagonal();
      return (scaled * vr_.transpose()).cast<cplx>();
    }
    Eigen::MatrixXd re = vr_ * d.real().asDiagonal() * vr_.transpose();
    Eigen::MatrixXd im = vr_ * d.imag().asDiagonal() * vr_.transpose();
    DenseOperator out(re.rows(), re.cols());
    out.real() = re;
    out.imag() = im;
    return out;
  }
  return vc_ * d.asDiagonal() * vc_.adjoint();
}

}  // namespace trotter
