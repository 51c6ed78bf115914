#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace trotter {

using cplx = std::complex<double>;
using mask_t = std::uint64_t;

constexpr int max_qubits = 62;
constexpr double drop_tol = 1e-14;

// A single weighted Pauli string. Bit q of x/z marks an X/Z factor on qubit q;
// x=z=1 on a qubit is Y, so the operator is coeff * i^{|x&z|} X^x Z^z.
struct PauliTerm {
  int n = 0;
  mask_t x = 0;
  mask_t z = 0;
  cplx coeff{1.0, 0.0};
};

PauliTerm multiply(const PauliTerm& p, const PauliTerm& q);
bool commutes(mask_t x1, mask_t z1, mask_t x2, mask_t z2);

class PauliSum {
 public:
  struct Entry {
    mask_t x;
    mask_t z;
    cplx c;
  };

  PauliSum() = default;
  explicit PauliSum(int n);
  PauliSum(const PauliTerm& t);

  static PauliSum identity(int n, cplx c = 1.0);
  // "1.5*XIZY" or "XIZY"; qubit 0 is the leftmost letter.
  static PauliSum parse(const std::string& text);
  static PauliSum single(int n, int q, char op, cplx c = 1.0);
  static PauliSum pair(int n, int q1, char op1, int q2, char op2, cplx c = 1.0);

  int n() const { return n_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // sorted by (x, z), no duplicates, no coefficients below drop_tol
  const std::vector<Entry>& terms() const { return terms_; }

  PauliSum& operator+=(const PauliSum& o);
  PauliSum& operator-=(const PauliSum& o);
  PauliSum& operator*=(cplx s);
  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, cplx s) { return a *= s; }
  friend PauliSum operator*(cplx s, PauliSum a) { return a *= s; }

  cplx coefficient(mask_t x, mask_t z) const;
  mask_t support_mask() const;
  std::string to_string() const;

  // Build from unsorted (x,z,c) triples, merging duplicates.
  static PauliSum from_entries(int n, std::vector<Entry> raw);

 private:
  int n_ = 0;
  std::vector<Entry> terms_;
};

PauliSum product(const PauliSum& a, const PauliSum& b);
PauliSum commutator(const PauliSum& a, const PauliSum& b);
// ops = [O_{p+1}, ..., O_2, O_1] -> [O_{p+1}, ... [O_2, O_1]]
PauliSum nested_commutator(const std::vector<PauliSum>& ops);
double coefficient_one_norm(const PauliSum& s);
std::vector<int> support(const PauliSum& s);
std::string pauli_string(int n, mask_t x, mask_t z);

bool is_hermitian(const PauliSum& s, double tol = 1e-12);

// Dense matrix in the computational basis, qubit 0 least significant.
Eigen::MatrixXcd to_dense(const PauliSum& s);

// Same operator restricted to the qubits in `keep` (which must contain the
// support); qubit keep[i] becomes qubit i.
PauliSum compress(const PauliSum& s, const std::vector<int>& keep);
// Relabel onto m qubits, qubit i -> place[i].
PauliSum embed(const PauliSum& s, int m, const std::vector<int>& place);

}  // namespace trotter
