#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "trotter/pauli.hpp"

namespace trotter {

// Partition of the computational basis into subspaces left invariant by a
// set of operators (connected components of their nonzero pattern). Every
// operator in the set is block diagonal with respect to it.
struct BasisBlocks {
  int n = 0;
  std::vector<std::vector<std::uint32_t>> blocks;  // basis states, ascending
  std::vector<std::uint32_t> block_of;
  std::vector<std::uint32_t> index_in_block;

  std::size_t count() const { return blocks.size(); }
  std::size_t largest() const;
};

BasisBlocks invariant_blocks(int n, const std::vector<PauliSum>& ops);

// s restricted to block k (must be one of the operators used to build bb,
// or otherwise block diagonal).
Eigen::MatrixXcd block_matrix(const PauliSum& s, const BasisBlocks& bb, std::size_t k);
Eigen::SparseMatrix<cplx> block_sparse(const PauliSum& s, const BasisBlocks& bb, std::size_t k);

// Exact spectral norm of a Pauli sum, computed on its support with the basis
// split into invariant blocks. Small blocks are diagonalized densely, large
// ones by Lanczos with full reorthogonalization. Hermitian and
// anti-Hermitian sums are handled directly, anything else through s^dagger s.
double operator_norm(const PauliSum& s);

// Largest |eigenvalue| of a Hermitian sparse matrix.
double lanczos_norm(const Eigen::SparseMatrix<cplx>& a, double rel_tol = 1e-12, int max_iter = 400);

}  // namespace trotter
