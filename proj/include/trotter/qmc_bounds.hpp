#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trotter/dense.hpp"
#include "trotter/error_bounds.hpp"
#include "trotter/pauli.hpp"

namespace trotter {

struct QmcPlan {
  long r = 0;
  std::vector<std::pair<std::string, double>> constraints;  // lower bounds on r
  double eps = 0.0;
  double t = 0.0;  // imaginary time (beta for ferromagnets)
  bool power_of_two = false;
};

// Trotter number for Tr (e^{tA/2r} e^{tB/r} e^{tA/2r})^r against Tr e^{t(A+B)}:
// max{4t(|A|+|B|), sqrt(t^3 |[A,[A,B]]| / eps), sqrt(2t^3 |[B,[B,A]]| / (3 eps))},
// rounded up to a power of 2
QmcPlan tfim_trotter_number(const PauliSum& a, const PauliSum& b, double t, double eps,
                            NormMode mode = NormMode::dense_exact);

struct EigenRatio {
  double max_ratio = 0.0;
  double min_ratio = 0.0;
};
// lambda_i(V^r) / lambda_i(U^r) with both spectra sorted nonincreasingly,
// U = e^{(t/r)(A+B)}, V = e^{(t/2r)A} e^{(t/r)B} e^{(t/2r)A}
EigenRatio multiplicative_factor_check(const PauliSum& a, const PauliSum& b, double t, long r);
// Tr V^r / Tr e^{t(A+B)}
double partition_ratio(const PauliSum& a, const PauliSum& b, double t, long r);

// f: diag(e^{param}, 1), i.e. f(e^{+-t}) with param = +-t
// g, h: the 4x4 gates g(param), h(param)
DenseOperator matchgate(char kind, double param);

// r = max{2 beta (strict), 24 n^2 beta, 8 n^2 beta^2 / eps, 2 sqrt(c) n^2 beta^{3/2} / sqrt(eps)}
QmcPlan ferromagnet_trotter_number(int n, double beta, double eps, double c = 1.0);

}  // namespace trotter
