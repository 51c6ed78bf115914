#include "trotter/blocks.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "trotter/dense.hpp"
#include "trotter/errors.hpp"

namespace trotter {

namespace {

const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// terms sharing an X mask act as one permutation with a diagonal weight
struct XGroup {
  mask_t x;
  std::vector<std::pair<mask_t, cplx>> zc;  // coefficient already carries i^{|xz|}
};

std::vector<XGroup> by_x_mask(const PauliSum& s) {
  std::vector<XGroup> out;
  for (const auto& e : s.terms()) {  // terms are sorted by x first
    if (out.empty() || out.back().x != e.x) out.push_back({e.x, {}});
    out.back().zc.emplace_back(e.z, e.c * ipow[std::popcount(e.x & e.z) % 4]);
  }
  return out;
}

inline cplx amplitude(const XGroup& g, mask_t b) {
  cplx a = 0;
  for (const auto& [z, c] : g.zc) a += (std::popcount(z & b) & 1) ? -c : c;
  return a;
}

double amp_tol(const PauliSum& s) { return 1e-13 * std::max(1.0, coefficient_one_norm(s)); }

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

double dense_hermitian_norm(const Eigen::MatrixXcd& h) {
  if (h.size() == 0) return 0.0;
  if (h.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h.real(), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// norm of a Hermitian Pauli sum on exactly its own qubits
double hermitian_sum_norm(const PauliSum& h) {
  if (h.empty()) return 0.0;
  if (h.n() <= 6) return dense_hermitian_norm(to_dense(h));
  BasisBlocks bb = invariant_blocks(h.n(), {h});
  double best = 0.0;
  for (std::size_t k = 0; k < bb.count(); ++k) {
    double v = bb.blocks[k].size() <= 384 ? dense_hermitian_norm(block_matrix(h, bb, k))
                                          : lanczos_norm(block_sparse(h, bb, k));
    best = std::max(best, v);
  }
  return best;
}

}  // namespace

std::size_t BasisBlocks::largest() const {
  std::size_t m = 0;
  for (const auto& b : blocks) m = std::max(m, b.size());
  return m;
}

BasisBlocks invariant_blocks(int n, const std::vector<PauliSum>& ops) {
  check_dense_qubits(n, "invariant_blocks");
  if (n > 30) throw dimension_error("invariant_blocks: too many qubits");
  const std::uint32_t dim = 1u << n;
  UnionFind uf(dim);
  for (const auto& op : ops) {
    if (op.empty()) continue;
    if (op.n() != n) throw dimension_error("invariant_blocks: qubit count mismatch");
    double tol = amp_tol(op);
    for (const auto& g : by_x_mask(op)) {
      if (g.x == 0) continue;
      for (std::uint32_t b = 0; b < dim; ++b) {
        std::uint32_t c = b ^ static_cast<std::uint32_t>(g.x);
        if (c < b) continue;
        if (std::abs(amplitude(g, b)) > tol || std::abs(amplitude(g, c)) > tol) uf.unite(b, c);
      }
    }
  }
  BasisBlocks bb;
  bb.n = n;
  bb.block_of.assign(dim, 0);
  bb.index_in_block.assign(dim, 0);
  std::vector<std::int64_t> slot(dim, -1);
  for (std::uint32_t b = 0; b < dim; ++b) {
    std::uint32_t r = uf.find(b);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(bb.blocks.size());
      bb.blocks.emplace_back();
    }
    auto k = static_cast<std::uint32_t>(slot[r]);
    bb.block_of[b] = k;
    bb.index_in_block[b] = static_cast<std::uint32_t>(bb.blocks[k].size());
    bb.blocks[k].push_back(b);
  }
  return bb;
}

Eigen::MatrixXcd block_matrix(const PauliSum& s, const BasisBlocks& bb, std::size_t k) {
  const auto& states = bb.blocks.at(k);
  const Eigen::Index d = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  if (s.empty()) return m;
  if (s.n() != bb.n) throw dimension_error("block_matrix: qubit count mismatch");
  double tol = amp_tol(s);
  auto groups = by_x_mask(s);
  for (Eigen::Index j = 0; j < d; ++j) {
    mask_t b = states[j];
    for (const auto& g : groups) {
      cplx a = amplitude(g, b);
      if (std::abs(a) <= tol) continue;
      auto row = static_cast<std::uint32_t>(b ^ g.x);
      if (bb.block_of[row] != k) throw contract_error("block_matrix: operator is not block diagonal");
      m(bb.index_in_block[row], j) += a;
    }
  }
  return m;
}

Eigen::SparseMatrix<cplx> block_sparse(const PauliSum& s, const BasisBlocks& bb, std::size_t k) {
  const auto& states = bb.blocks.at(k);
  const Eigen::Index d = static_cast<Eigen::Index>(states.size());
  Eigen::SparseMatrix<cplx> m(d, d);
  if (s.empty()) return m;
  double tol = amp_tol(s);
  auto groups = by_x_mask(s);
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(static_cast<std::size_t>(d) * std::min<std::size_t>(groups.size(), 64));
  for (Eigen::Index j = 0; j < d; ++j) {
    mask_t b = states[j];
    for (const auto& g : groups) {
      cplx a = amplitude(g, b);
      if (std::abs(a) <= tol) continue;
      auto row = static_cast<std::uint32_t>(b ^ g.x);
      if (bb.block_of[row] != k) throw contract_error("block_sparse: operator is not block diagonal");
      trip.emplace_back(bb.index_in_block[row], j, a);
    }
  }
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

double lanczos_norm(const Eigen::SparseMatrix<cplx>& a, double rel_tol, int max_iter) {
  const Eigen::Index d = a.rows();
  if (d == 0) return 0.0;
  if (d <= 64) return dense_hermitian_norm(Eigen::MatrixXcd(a));
  std::mt19937_64 rng(0x1a2c05);
  std::normal_distribution<double> nd;
  Eigen::VectorXcd v(d);
  for (auto& c : v) c = cplx(nd(rng), nd(rng));
  v.normalize();

  int cap = static_cast<int>(std::min<Eigen::Index>(d, max_iter));
  Eigen::MatrixXcd basis(d, cap);
  std::vector<double> alpha, beta;
  double theta = 0.0;
  for (int j = 0; j < cap; ++j) {
    basis.col(j) = v;
    Eigen::VectorXcd w = a * v;
    alpha.push_back(v.dot(w).real());
    // two passes of classical Gram-Schmidt against the whole basis
    for (int pass = 0; pass < 2; ++pass) {
      Eigen::VectorXcd coef = basis.leftCols(j + 1).adjoint() * w;
      w -= basis.leftCols(j + 1) * coef;
    }
    double b = w.norm();
    bool last = (j + 1 == cap);
    bool check = last || j < 8 || (j % 4 == 3) || b == 0.0;
    if (check) {
      int m = j + 1;
      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
      Eigen::VectorXd sub(std::max(m - 1, 0));
      for (int i = 0; i + 1 < m; ++i) sub[i] = beta[i];
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      const auto& ev = tri.eigenvalues();
      theta = std::max(std::abs(ev[0]), std::abs(ev[m - 1]));
      double res_lo = b * std::abs(tri.eigenvectors()(m - 1, 0));
      double res_hi = b * std::abs(tri.eigenvectors()(m - 1, m - 1));
      double scale = std::max(theta, 1e-300);
      if (b <= 1e-14 * scale || last) return theta;
      if (j >= 8 && std::max(res_lo, res_hi) <= rel_tol * scale) return theta;
    }
    beta.push_back(b);
    v = w / b;
  }
  return theta;
}

double operator_norm(const PauliSum& s) {
  if (s.empty()) return 0.0;
  std::vector<int> supp = support(s);
  PauliSum c = compress(s, supp);
  bool real = true, imag = true;
  for (const auto& e : c.terms()) {
    if (e.c.imag() != 0.0 && std::abs(e.c.imag()) > 1e-15 * std::abs(e.c)) real = false;
    if (e.c.real() != 0.0 && std::abs(e.c.real()) > 1e-15 * std::abs(e.c)) imag = false;
  }
  if (real) {
    std::vector<PauliSum::Entry> raw;
    for (const auto& e : c.terms()) raw.push_back({e.x, e.z, cplx(e.c.real(), 0)});
    return hermitian_sum_norm(PauliSum::from_entries(c.n(), raw));
  }
  if (imag) {
    std::vector<PauliSum::Entry> raw;
    for (const auto& e : c.terms()) raw.push_back({e.x, e.z, cplx(e.c.imag(), 0)});
    return hermitian_sum_norm(PauliSum::from_entries(c.n(), raw));
  }
  std::vector<PauliSum::Entry> conj;
  for (const auto& e : c.terms()) conj.push_back({e.x, e.z, std::conj(e.c)});
  PauliSum g = product(PauliSum::from_entries(c.n(), conj), c);
  std::vector<PauliSum::Entry> raw;
  for (const auto& e : g.terms()) raw.push_back({e.x, e.z, cplx(e.c.real(), 0)});
  return std::sqrt(std::max(0.0, hermitian_sum_norm(PauliSum::from_entries(c.n(), raw))));
}

}  // namespace trotter
