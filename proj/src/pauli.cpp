#include "trotter/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "trotter/dense.hpp"
#include "trotter/errors.hpp"

namespace trotter {

namespace {

const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// phase of (i^{|x1z1|} X^x1 Z^z1)(i^{|x2z2|} X^x2 Z^z2) relative to the
// canonical form of the product string
inline cplx product_phase(mask_t x1, mask_t z1, mask_t x2, mask_t z2) {
  mask_t x3 = x1 ^ x2, z3 = z1 ^ z2;
  int e = std::popcount(x1 & z1) + std::popcount(x2 & z2) - std::popcount(x3 & z3) +
          2 * std::popcount(z1 & x2);
  return ipow[((e % 4) + 4) % 4];
}

void check_n(int a, int b) {
  if (a != b) throw dimension_error("qubit counts differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

mask_t low_bits(int n) { return n >= 64 ? ~mask_t{0} : ((mask_t{1} << n) - 1); }

}  // namespace

bool commutes(mask_t x1, mask_t z1, mask_t x2, mask_t z2) {
  return ((std::popcount(x1 & z2) + std::popcount(z1 & x2)) & 1) == 0;
}

PauliTerm multiply(const PauliTerm& p, const PauliTerm& q) {
  check_n(p.n, q.n);
  PauliTerm r;
  r.n = p.n;
  r.x = p.x ^ q.x;
  r.z = p.z ^ q.z;
  r.coeff = p.coeff * q.coeff * product_phase(p.x, p.z, q.x, q.z);
  return r;
}

PauliSum::PauliSum(int n) : n_(n) {
  if (n < 0 || n > max_qubits) throw input_error("qubit count out of range");
}

PauliSum::PauliSum(const PauliTerm& t) : PauliSum(t.n) {
  if ((t.x | t.z) & ~low_bits(t.n)) throw input_error("Pauli mask has bits beyond n");
  if (std::abs(t.coeff) >= drop_tol) terms_.push_back({t.x, t.z, t.coeff});
}

PauliSum PauliSum::identity(int n, cplx c) { return PauliSum(PauliTerm{n, 0, 0, c}); }

PauliSum PauliSum::single(int n, int q, char op, cplx c) {
  std::string s(n, 'I');
  s.at(q) = op;
  PauliSum r = parse(s);
  return r *= c;
}

PauliSum PauliSum::pair(int n, int q1, char op1, int q2, char op2, cplx c) {
  if (q1 == q2) throw input_error("pair() needs two distinct qubits");
  std::string s(n, 'I');
  s.at(q1) = op1;
  s.at(q2) = op2;
  PauliSum r = parse(s);
  return r *= c;
}

PauliSum PauliSum::parse(const std::string& text) {
  std::string body = text;
  double coeff = 1.0;
  auto star = text.find('*');
  if (star != std::string::npos) {
    std::string head = text.substr(0, star);
    char* end = nullptr;
    coeff = std::strtod(head.c_str(), &end);
    if (end == head.c_str()) throw input_error("bad Pauli coefficient in '" + text + "'");
    body = text.substr(star + 1);
  }
  int n = static_cast<int>(body.size());
  if (n > max_qubits) throw input_error("Pauli string too long");
  PauliTerm t{n, 0, 0, coeff};
  for (int q = 0; q < n; ++q) {
    switch (std::toupper(static_cast<unsigned char>(body[q]))) {
      case 'I': break;
      case 'X': t.x |= mask_t{1} << q; break;
      case 'Z': t.z |= mask_t{1} << q; break;
      case 'Y':
        t.x |= mask_t{1} << q;
        t.z |= mask_t{1} << q;
        break;
      default: throw input_error("bad Pauli letter in '" + text + "'");
    }
  }
  return PauliSum(t);
}

PauliSum PauliSum::from_entries(int n, std::vector<Entry> raw) {
  PauliSum s(n);
  std::sort(raw.begin(), raw.end(),
            [](const Entry& a, const Entry& b) { return a.x != b.x ? a.x < b.x : a.z < b.z; });
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t j = i;
    cplx c = 0;
    while (j < raw.size() && raw[j].x == raw[i].x && raw[j].z == raw[i].z) c += raw[j++].c;
    if (std::abs(c) >= drop_tol) s.terms_.push_back({raw[i].x, raw[i].z, c});
    i = j;
  }
  return s;
}

PauliSum& PauliSum::operator+=(const PauliSum& o) {
  if (o.empty()) return *this;
  if (empty()) {
    n_ = o.n_;
    terms_ = o.terms_;
    return *this;
  }
  check_n(n_, o.n_);
  std::vector<Entry> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.cbegin();
  auto b = o.terms_.cbegin();
  auto less = [](const Entry& u, const Entry& v) { return u.x != v.x ? u.x < v.x : u.z < v.z; };
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && less(*a, *b))) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || less(*b, *a)) {
      merged.push_back(*b++);
    } else {
      cplx c = a->c + b->c;
      if (std::abs(c) >= drop_tol) merged.push_back({a->x, a->z, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& o) { return *this += o * cplx(-1.0); }

PauliSum& PauliSum::operator*=(cplx s) {
  if (std::abs(s) == 0.0) {
    terms_.clear();
    return *this;
  }
  std::vector<Entry> kept;
  for (auto e : terms_) {
    e.c *= s;
    if (std::abs(e.c) >= drop_tol) kept.push_back(e);
  }
  terms_ = std::move(kept);
  return *this;
}

cplx PauliSum::coefficient(mask_t x, mask_t z) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Entry{x, z, 0},
                             [](const Entry& a, const Entry& b) { return a.x != b.x ? a.x < b.x : a.z < b.z; });
  if (it != terms_.end() && it->x == x && it->z == z) return it->c;
  return 0.0;
}

mask_t PauliSum::support_mask() const {
  mask_t m = 0;
  for (const auto& e : terms_) m |= e.x | e.z;
  return m;
}

std::string pauli_string(int n, mask_t x, mask_t z) {
  std::string s(n, 'I');
  for (int q = 0; q < n; ++q) {
    bool bx = (x >> q) & 1, bz = (z >> q) & 1;
    s[q] = bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
  }
  return s;
}

std::string PauliSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& e : terms_) {
    if (!first) os << " + ";
    first = false;
    if (e.c.imag() == 0.0)
      os << e.c.real();
    else
      os << "(" << e.c.real() << (e.c.imag() < 0 ? "" : "+") << e.c.imag() << "i)";
    os << "*" << pauli_string(n_, e.x, e.z);
  }
  return os.str();
}

PauliSum product(const PauliSum& a, const PauliSum& b) {
  if (a.empty() || b.empty()) return PauliSum(std::max(a.n(), b.n()));
  check_n(a.n(), b.n());
  std::vector<PauliSum::Entry> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& p : a.terms())
    for (const auto& q : b.terms())
      raw.push_back({p.x ^ q.x, p.z ^ q.z, p.c * q.c * product_phase(p.x, p.z, q.x, q.z)});
  return PauliSum::from_entries(a.n(), std::move(raw));
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  if (a.empty() || b.empty()) return PauliSum(std::max(a.n(), b.n()));
  check_n(a.n(), b.n());
  std::vector<PauliSum::Entry> raw;
  mask_t bsupp = b.support_mask();
  for (const auto& p : a.terms()) {
    if (((p.x | p.z) & bsupp) == 0) continue;
    for (const auto& q : b.terms()) {
      if (commutes(p.x, p.z, q.x, q.z)) continue;
      // anticommuting strings: PQ - QP = 2PQ
      raw.push_back({p.x ^ q.x, p.z ^ q.z, 2.0 * p.c * q.c * product_phase(p.x, p.z, q.x, q.z)});
    }
  }
  return PauliSum::from_entries(a.n(), std::move(raw));
}

PauliSum nested_commutator(const std::vector<PauliSum>& ops) {
  if (ops.size() < 2) throw input_error("nested_commutator needs at least two operands");
  PauliSum acc = commutator(ops[ops.size() - 2], ops.back());
  for (std::size_t i = ops.size() - 2; i-- > 0;) acc = commutator(ops[i], acc);
  return acc;
}

double coefficient_one_norm(const PauliSum& s) {
  double t = 0;
  for (const auto& e : s.terms()) t += std::abs(e.c);
  return t;
}

std::vector<int> support(const PauliSum& s) {
  std::vector<int> out;
  mask_t m = s.support_mask();
  for (int q = 0; q < s.n(); ++q)
    if ((m >> q) & 1) out.push_back(q);
  return out;
}

bool is_hermitian(const PauliSum& s, double tol) {
  // each string is Hermitian, so the sum is iff every coefficient is real
  for (const auto& e : s.terms())
    if (std::abs(e.c.imag()) > tol) return false;
  return true;
}

Eigen::MatrixXcd to_dense(const PauliSum& s) {
  int n = s.n();
  if (n > dense_qubit_cap())
    throw dimension_error("to_dense: " + std::to_string(n) + " qubits exceeds the dense cap of " +
                          std::to_string(dense_qubit_cap()));
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& e : s.terms()) {
    cplx base = e.c * ipow[std::popcount(e.x & e.z) % 4];
    for (Eigen::Index b = 0; b < dim; ++b) {
      double sign = (std::popcount(e.z & static_cast<mask_t>(b)) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(static_cast<mask_t>(b) ^ e.x), b) += sign * base;
    }
  }
  return m;
}

PauliSum compress(const PauliSum& s, const std::vector<int>& keep) {
  int m = static_cast<int>(keep.size());
  std::vector<PauliSum::Entry> raw;
  raw.reserve(s.size());
  mask_t kept = 0;
  for (int q : keep) kept |= mask_t{1} << q;
  for (const auto& e : s.terms()) {
    if ((e.x | e.z) & ~kept) throw input_error("compress: qubit set does not cover the support");
    PauliSum::Entry r{0, 0, e.c};
    for (int i = 0; i < m; ++i) {
      r.x |= ((e.x >> keep[i]) & 1) << i;
      r.z |= ((e.z >> keep[i]) & 1) << i;
    }
    raw.push_back(r);
  }
  return PauliSum::from_entries(m, std::move(raw));
}

PauliSum embed(const PauliSum& s, int m, const std::vector<int>& place) {
  std::vector<PauliSum::Entry> raw;
  for (const auto& e : s.terms()) {
    PauliSum::Entry r{0, 0, e.c};
    for (int i = 0; i < s.n(); ++i) {
      r.x |= ((e.x >> i) & 1) << place[i];
      r.z |= ((e.z >> i) & 1) << place[i];
    }
    raw.push_back(r);
  }
  return PauliSum::from_entries(m, std::move(raw));
}

}  // namespace trotter
