#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "trotter/blocks.hpp"
#include "trotter/dense.hpp"

using namespace trotter;
using testing_helpers::P;

namespace {
const cplx I1{0.0, 1.0};
}

TEST_CASE("expm_i_hermitian") {
  auto z = to_dense(P("Z")), x = to_dense(P("X"));
  CHECK(expm_i_hermitian(z, 0.0).isApprox(DenseOperator::Identity(2, 2)));
  DenseOperator d = DenseOperator::Zero(2, 2);
  d(0, 0) = std::exp(-I1 * (M_PI / 2));
  d(1, 1) = std::exp(I1 * (M_PI / 2));
  CHECK((expm_i_hermitian(z, M_PI / 2) - d).norm() < 1e-12);
  CHECK((expm_i_hermitian(x, M_PI) + DenseOperator::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("expm_real_hermitian") {
  auto z = to_dense(P("Z")), x = to_dense(P("X"));
  CHECK(expm_real_hermitian(z, 0.0).isApprox(DenseOperator::Identity(2, 2)));
  auto e = expm_real_hermitian(z, 1.0);
  CHECK(std::abs(e(0, 0) - std::exp(1.0)) < 1e-12);
  CHECK(std::abs(e(1, 1) - std::exp(-1.0)) < 1e-12);
  auto w = eigvals_hermitian(expm_real_hermitian(x, std::log(2.0)));
  CHECK(w[0] == doctest::Approx(2.0));
  CHECK(w[1] == doctest::Approx(0.5));
}

TEST_CASE("spectral norm") {
  CHECK(spectral_norm(DenseOperator::Identity(4, 4)) == doctest::Approx(1.0));
  DenseOperator d = DenseOperator::Zero(2, 2);
  d(0, 0) = 3;
  d(1, 1) = -5;
  CHECK(spectral_norm(d) == doctest::Approx(5.0));
  CHECK(spectral_norm(to_dense(P("X") + P("Z"))) == doctest::Approx(std::sqrt(2.0)));
  // non-normal: [[0,1],[0,0]] has norm 1
  DenseOperator j = DenseOperator::Zero(2, 2);
  j(0, 1) = 1;
  CHECK(spectral_norm(j) == doctest::Approx(1.0));
  CHECK(power_iteration_norm(j) == doctest::Approx(1.0));
}

TEST_CASE("eigvals_hermitian") {
  auto w = eigvals_hermitian(DenseOperator::Identity(4, 4));
  for (int i = 0; i < 4; ++i) CHECK(w[i] == doctest::Approx(1.0));
  auto wz = eigvals_hermitian(to_dense(P("Z")));
  CHECK(wz[0] == doctest::Approx(1.0));
  CHECK(wz[1] == doctest::Approx(-1.0));
  auto wxx = eigvals_hermitian(to_dense(P("XX")));
  CHECK(wxx[0] == doctest::Approx(1.0));
  CHECK(wxx[1] == doctest::Approx(1.0));
  CHECK(wxx[2] == doctest::Approx(-1.0));
  CHECK(wxx[3] == doctest::Approx(-1.0));
  CHECK_THROWS_AS(eigvals_hermitian(to_dense(P("X")) * I1), contract_error);
}

TEST_CASE("dense cap") {
  int saved = dense_qubit_cap();
  set_dense_qubit_cap(3);
  CHECK_THROWS_AS(check_dense_qubits(4, "test"), dimension_error);
  CHECK_NOTHROW(check_dense_qubits(3, "test"));
  set_dense_qubit_cap(saved);
}

TEST_CASE("block operator norm matches dense") {
  auto h = P("XXII") + P("IYYI") * 0.7 + P("IIZZ") * -0.3 + P("ZIII") * 0.2;
  CHECK(operator_norm(h) == doctest::Approx(spectral_norm(to_dense(h))).epsilon(1e-10));
  auto c = commutator(h, P("XIII") + P("IIIY"));
  CHECK(operator_norm(c) == doctest::Approx(spectral_norm(to_dense(c))).epsilon(1e-10));
}
