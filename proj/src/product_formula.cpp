#include "trotter/product_formula.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "trotter/errors.hpp"

namespace trotter {

// ---------------------------------------------------------------- schedules

std::vector<Exponential> FormulaSchedule::raw_sequence() const {
  std::vector<Exponential> seq;
  for (int v = 0; v < stages; ++v)
    for (int g = 0; g < gamma; ++g) seq.push_back({coeffs[v][g], perms[v][g]});
  if (reversed) std::reverse(seq.begin(), seq.end());
  return seq;
}

std::vector<Exponential> FormulaSchedule::sequence() const {
  std::vector<Exponential> out;
  for (const auto& e : raw_sequence()) {
    if (e.a == 0.0) continue;
    if (!out.empty() && out.back().group == e.group)
      out.back().a += e.a;
    else
      out.push_back(e);
  }
  return out;
}

void FormulaSchedule::validate() const {
  if (stages < 1 || gamma < 1) throw input_error("schedule needs at least one stage and one summand");
  if (static_cast<int>(coeffs.size()) != stages || static_cast<int>(perms.size()) != stages)
    throw input_error("schedule table has the wrong number of stages");
  for (int v = 0; v < stages; ++v) {
    if (static_cast<int>(coeffs[v].size()) != gamma || static_cast<int>(perms[v].size()) != gamma)
      throw input_error("schedule stage has the wrong width");
    std::vector<int> p = perms[v];
    std::sort(p.begin(), p.end());
    for (int g = 0; g < gamma; ++g)
      if (p[g] != g) throw input_error("schedule permutation is not a bijection");
  }
}

FormulaSchedule lie_trotter(int gamma) {
  if (gamma < 1) throw input_error("lie_trotter needs at least one summand");
  FormulaSchedule s;
  s.stages = 1;
  s.gamma = gamma;
  s.coeffs = {std::vector<double>(gamma, 1.0)};
  std::vector<int> id(gamma);
  std::iota(id.begin(), id.end(), 0);
  s.perms = {id};
  s.order_p = 1;
  s.name = "lie-trotter";
  return s;
}

double suzuki_u(int k) { return 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * k - 1.0))); }

FormulaSchedule suzuki(int order_2k, int gamma) {
  if (order_2k < 2 || order_2k > 8 || order_2k % 2) throw input_error("suzuki order must be 2, 4, 6 or 8");
  if (gamma < 1) throw input_error("suzuki needs at least one summand");
  std::vector<int> fwd(gamma);
  std::iota(fwd.begin(), fwd.end(), 0);
  std::vector<int> bwd(fwd.rbegin(), fwd.rend());
  // (scale, permutation) per stage, in the order the stages act
  std::vector<std::pair<double, std::vector<int>>> st = {{0.5, fwd}, {0.5, bwd}};
  for (int k = 2; 2 * k <= order_2k; ++k) {
    double u = suzuki_u(k);
    std::vector<std::pair<double, std::vector<int>>> next;
    for (double w : {u, u, 1.0 - 4.0 * u, u, u})
      for (const auto& [c, p] : st) next.push_back({c * w, p});
    st = std::move(next);
  }
  FormulaSchedule s;
  s.stages = static_cast<int>(st.size());
  s.gamma = gamma;
  for (const auto& [c, p] : st) {
    s.coeffs.push_back(std::vector<double>(gamma, c));
    s.perms.push_back(p);
  }
  s.order_p = order_2k;
  s.name = "suzuki-" + std::to_string(order_2k);
  return s;
}

FormulaSchedule formula_for_order(int p, int gamma) {
  if (p == 1) return lie_trotter(gamma);
  if (p % 2 == 0) return suzuki(p, gamma);
  throw input_error("only order 1 and even orders are constructed");
}

FormulaSchedule permuted(const FormulaSchedule& s, const std::vector<int>& relabel) {
  FormulaSchedule out = s;
  for (auto& p : out.perms)
    for (auto& g : p) g = relabel.at(g);
  out.validate();
  return out;
}

// ------------------------------------------------------------------ evolver

Evolver::Evolver(const std::vector<PauliSum>& summands, TimeMode mode, const std::vector<PauliSum>& extra)
    : mode_(mode) {
  build(summands, extra);
}

Evolver::Evolver(const GroupedHamiltonian& h, TimeMode mode, const std::vector<PauliSum>& extra) : mode_(mode) {
  n_ = h.n;
  build(h.summands(), extra);
}

void Evolver::build(const std::vector<PauliSum>& summands, const std::vector<PauliSum>& extra) {
  if (summands.empty()) throw input_error("Evolver needs at least one summand");
  if (n_ == 0) n_ = summands.front().n();
  check_dense_qubits(n_, "Evolver");
  std::vector<PauliSum> all = summands;
  all.insert(all.end(), extra.begin(), extra.end());
  for (const auto& s : all)
    if (!s.empty() && s.n() != n_) throw dimension_error("Evolver: qubit count mismatch");
  blocks_ = invariant_blocks(n_, all);
  eig_.resize(blocks_.count());
  total_.resize(blocks_.count());
  total_ready_.assign(blocks_.count(), false);
  total_sum_ = PauliSum(n_);
  for (const auto& s : summands) total_sum_ += s;
  wr_.resize(blocks_.count());
  wc_.resize(blocks_.count());
  for (std::size_t k = 0; k < blocks_.count(); ++k) {
    for (const auto& s : summands) eig_[k].emplace_back(block_matrix(s, blocks_, k));
  }
}

const Eigen::MatrixXd& Evolver::real_transition(std::size_t k, int to, int from) const {
  auto key = std::make_pair(to, from);
  auto it = wr_[k].find(key);
  if (it == wr_[k].end())
    it = wr_[k].emplace(key, eig_[k][to].real_vectors().transpose() * eig_[k][from].real_vectors()).first;
  return it->second;
}

const Eigen::MatrixXcd& Evolver::complex_transition(std::size_t k, int to, int from) const {
  auto key = std::make_pair(to, from);
  auto it = wc_[k].find(key);
  if (it == wc_[k].end()) {
    auto vec = [&](int g) -> Eigen::MatrixXcd {
      return eig_[k][g].is_real() ? Eigen::MatrixXcd(eig_[k][g].real_vectors().cast<cplx>()) : eig_[k][g].vectors();
    };
    it = wc_[k].emplace(key, vec(to).adjoint() * vec(from)).first;
  }
  return it->second;
}

Eigen::MatrixXcd Evolver::factor(std::size_t k, int group, double ta) const {
  return eig_.at(k).at(group).exp(ta, mode_ == TimeMode::real_time);
}

Eigen::MatrixXcd Evolver::exact(std::size_t k, double t) const {
  if (!total_ready_.at(k)) {
    total_[k] = HermitianEigen(block_matrix(total_sum_, blocks_, k));
    total_ready_[k] = true;
  }
  return total_[k].exp(t, mode_ == TimeMode::real_time);
}

Eigen::MatrixXcd Evolver::product(std::size_t k, const std::vector<Exponential>& seq, double t) const {
  const auto& e = eig_.at(k);
  const Eigen::Index d = static_cast<Eigen::Index>(blocks_.blocks[k].size());
  if (seq.empty()) return Eigen::MatrixXcd::Identity(d, d);
  for (const auto& f : seq)
    if (f.group < 0 || f.group >= static_cast<int>(e.size())) throw dimension_error("schedule refers to a missing summand");
  bool rt = mode_ == TimeMode::real_time;
  bool all_real = std::all_of(e.begin(), e.end(), [](const HermitianEigen& h) { return h.is_real(); });

  // acc lives in the eigenbasis of the most recent factor
  int g0 = seq.front().group;
  Eigen::VectorXcd d0 = e[g0].exp_diagonal(t * seq.front().a, rt);
  Eigen::MatrixXcd acc = all_real ? Eigen::MatrixXcd(d0.asDiagonal() * e[g0].real_vectors().transpose().cast<cplx>())
                                  : Eigen::MatrixXcd(d0.asDiagonal() * (e[g0].is_real()
                                                                            ? Eigen::MatrixXcd(e[g0].real_vectors().cast<cplx>())
                                                                            : e[g0].vectors())
                                                                           .adjoint());
  int prev = g0;
  for (std::size_t j = 1; j < seq.size(); ++j) {
    int g = seq[j].group;
    if (g != prev) {
      if (all_real) {
        const Eigen::MatrixXd& w = real_transition(k, g, prev);
        Eigen::MatrixXd re = w * acc.real();
        Eigen::MatrixXd im = w * acc.imag();
        acc.real() = re;
        acc.imag() = im;
      } else {
        acc = complex_transition(k, g, prev) * acc;
      }
    }
    acc = e[g].exp_diagonal(t * seq[j].a, rt).asDiagonal() * acc;
    prev = g;
  }
  if (e[prev].is_real()) {
    const Eigen::MatrixXd& v = e[prev].real_vectors();
    Eigen::MatrixXcd out(d, d);
    out.real() = v * acc.real();
    out.imag() = v * acc.imag();
    return out;
  }
  return e[prev].vectors() * acc;
}

DenseOperator Evolver::assemble(const std::vector<Eigen::MatrixXcd>& per_block) const {
  const Eigen::Index dim = Eigen::Index{1} << n_;
  DenseOperator full = DenseOperator::Zero(dim, dim);
  for (std::size_t k = 0; k < blocks_.count(); ++k) {
    const auto& st = blocks_.blocks[k];
    for (std::size_t i = 0; i < st.size(); ++i)
      for (std::size_t j = 0; j < st.size(); ++j) full(st[i], st[j]) = per_block[k](i, j);
  }
  return full;
}

namespace {

void check_gamma(const FormulaSchedule& s, const GroupedHamiltonian& h) {
  s.validate();
  if (s.gamma != static_cast<int>(h.gamma()))
    throw dimension_error("schedule has " + std::to_string(s.gamma) + " summands but the Hamiltonian has " +
                          std::to_string(h.gamma()));
}

Eigen::MatrixXcd matrix_power(Eigen::MatrixXcd base, long r) {
  Eigen::MatrixXcd result;
  bool have = false;
  while (r > 0) {
    if (r & 1) {
      result = have ? Eigen::MatrixXcd(result * base) : base;
      have = true;
    }
    r >>= 1;
    if (r) base = base * base;
  }
  return result;
}

}  // namespace

DenseOperator evaluate(const FormulaSchedule& s, const GroupedHamiltonian& h, double t, TimeMode mode) {
  check_gamma(s, h);
  Evolver ev(h, mode);
  std::vector<Eigen::MatrixXcd> parts;
  auto seq = s.sequence();
  for (std::size_t k = 0; k < ev.block_count(); ++k) parts.push_back(ev.product(k, seq, t));
  return ev.assemble(parts);
}

DenseOperator exact_evolution(const GroupedHamiltonian& h, double t, TimeMode mode) {
  Evolver ev(h, mode);
  std::vector<Eigen::MatrixXcd> parts;
  for (std::size_t k = 0; k < ev.block_count(); ++k) parts.push_back(ev.exact(k, t));
  return ev.assemble(parts);
}

double empirical_error(const Evolver& ev, const std::vector<Exponential>& seq, double t, long r) {
  if (r < 1) throw input_error("Trotter number must be >= 1");
  double worst = 0.0;
  for (std::size_t k = 0; k < ev.block_count(); ++k) {
    Eigen::MatrixXcd p = matrix_power(ev.product(k, seq, t / static_cast<double>(r)), r);
    p -= ev.exact(k, t);
    worst = std::max(worst, spectral_norm(p));
  }
  return worst;
}

double empirical_error(const GroupedHamiltonian& h, const FormulaSchedule& s, double t, long r) {
  check_gamma(s, h);
  Evolver ev(h, TimeMode::real_time);
  return empirical_error(ev, s.sequence(), t, r);
}

TrotterSearch minimal_passing_r(const std::function<double(long)>& err, double eps, const SearchOptions& opt) {
  if (!(eps > 0)) throw input_error("error target must be positive");
  if (!(opt.growth > 1.0)) throw input_error("bracket growth factor must exceed 1");
  TrotterSearch out;
  auto f = [&](long r) {
    auto it = out.probes.find(r);
    if (it != out.probes.end()) return it->second;
    double e = err(r);
    out.probes.emplace(r, e);
    return e;
  };
  long g = std::max(1L, opt.start);
  long lo = 0, hi = 0;  // f(lo) > eps (lo = 0: none), f(hi) <= eps
  if (f(g) <= eps) {
    hi = g;
    while (hi > 1) {
      long c = std::max(1L, static_cast<long>(std::floor(static_cast<double>(hi) / opt.growth)));
      if (c >= hi) c = hi - 1;
      if (f(c) <= eps) {
        hi = c;
      } else {
        lo = c;
        break;
      }
    }
  } else {
    lo = g;
    for (;;) {
      long c = std::max(lo + 1, static_cast<long>(std::ceil(static_cast<double>(lo) * opt.growth)));
      if (c > opt.r_cap) {
        if (lo < opt.r_cap && f(opt.r_cap) <= eps) {
          hi = opt.r_cap;
          break;
        }
        throw contract_error("no Trotter number up to " + std::to_string(opt.r_cap) + " meets the error target");
      }
      if (f(c) <= eps) {
        hi = c;
        break;
      }
      lo = c;
    }
  }
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    (f(mid) <= eps ? hi : lo) = mid;
  }
  out.r = hi;
  out.error_at_r = f(hi);
  out.error_below = hi > 1 ? f(hi - 1) : 0.0;
  if (out.error_at_r > eps || (hi > 1 && out.error_below <= eps))
    throw contract_error("Trotter-number search failed its boundary verification");
  // any passing probe below a failing one means the error is not monotone in r
  double worst_fail_r = 0;
  for (const auto& [r, e] : out.probes)
    if (e > eps) worst_fail_r = static_cast<double>(r);
  for (const auto& [r, e] : out.probes)
    if (e <= eps && static_cast<double>(r) < worst_fail_r) {
      out.monotone = false;
      std::ostringstream os;
      os << "error not monotone in r: r=" << r << " passes but r=" << worst_fail_r << " fails";
      out.diagnostics.push_back(os.str());
      break;
    }
  return out;
}

TrotterSearch empirical_trotter_number(const Evolver& ev, const FormulaSchedule& s, double t, double eps,
                                       const SearchOptions& opt) {
  auto seq = s.sequence();
  return minimal_passing_r([&](long r) { return empirical_error(ev, seq, t, r); }, eps, opt);
}

TrotterSearch empirical_trotter_number(const GroupedHamiltonian& h, const FormulaSchedule& s, double t, double eps,
                                       const SearchOptions& opt) {
  check_gamma(s, h);
  Evolver ev(h, TimeMode::real_time);
  return empirical_trotter_number(ev, s, t, eps, opt);
}

long extrapolated_start(const Evolver& ev, const FormulaSchedule& s, double t, double eps, long r0) {
  auto seq = s.sequence();
  long r = std::max(1L, r0);
  for (int pass = 0; pass < 2; ++pass) {
    double e = empirical_error(ev, seq, t, r);
    if (e <= 0.0) return 1;
    double next = static_cast<double>(r) * std::pow(e / eps, 1.0 / s.order_p);
    r = std::max(1L, std::min(10000000L, static_cast<long>(std::llround(next))));
  }
  return r;
}

// ------------------------------------------------- error types, order checks

namespace {

template <class R>
using CMat = Eigen::Matrix<std::complex<R>, Eigen::Dynamic, Eigen::Dynamic>;

template <class R>
struct DenseModel {
  std::vector<CMat<R>> vecs;            // eigenvectors per summand
  std::vector<Eigen::Matrix<R, Eigen::Dynamic, 1>> vals;
  std::vector<CMat<R>> gens;            // the summands themselves
  CMat<R> total_vecs;
  Eigen::Matrix<R, Eigen::Dynamic, 1> total_vals;
};

template <class R>
CMat<R> cast_dense(const PauliSum& s, int n) {
  PauliSum z = s.empty() ? PauliSum(n) : s;
  return to_dense(z).template cast<std::complex<R>>();
}

template <class R>
DenseModel<R> dense_model(const GroupedHamiltonian& h) {
  check_dense_qubits(h.n, "dense evaluation");
  DenseModel<R> m;
  CMat<R> total = CMat<R>::Zero(Eigen::Index{1} << h.n, Eigen::Index{1} << h.n);
  for (const auto& s : h.summands()) {
    CMat<R> g = cast_dense<R>(s, h.n);
    Eigen::SelfAdjointEigenSolver<CMat<R>> es(g);
    m.vecs.push_back(es.eigenvectors());
    m.vals.push_back(es.eigenvalues());
    total += g;
    m.gens.push_back(std::move(g));
  }
  Eigen::SelfAdjointEigenSolver<CMat<R>> es(total);
  m.total_vecs = es.eigenvectors();
  m.total_vals = es.eigenvalues();
  return m;
}

// e^{-i x w} (real time) or e^{x w}
template <class R>
CMat<R> exp_from(const CMat<R>& v, const Eigen::Matrix<R, Eigen::Dynamic, 1>& w, R x, bool rt) {
  Eigen::Matrix<std::complex<R>, Eigen::Dynamic, 1> d(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    d[i] = rt ? std::complex<R>(std::cos(x * w[i]), -std::sin(x * w[i])) : std::complex<R>(std::exp(x * w[i]), 0);
  return v * d.asDiagonal() * v.adjoint();
}

template <class R>
CMat<R> product_dense(const DenseModel<R>& m, const std::vector<Exponential>& seq, R t, bool rt) {
  Eigen::Index d = m.total_vecs.rows();
  CMat<R> s = CMat<R>::Identity(d, d);
  for (const auto& f : seq) s = exp_from<R>(m.vecs[f.group], m.vals[f.group], t * static_cast<R>(f.a), rt) * s;
  return s;
}

template <class R>
R norm_of(const CMat<R>& a) {
  CMat<R> g = a.adjoint() * a;
  g = (g + g.adjoint()).eval() * static_cast<R>(0.5);
  Eigen::SelfAdjointEigenSolver<CMat<R>> es(g, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(static_cast<R>(0), es.eigenvalues().maxCoeff()));
}

// E(tau) = sum_j (later factors) G_j (later factors)^{-1} - G, with the
// generator G_j = -i a_j H_j (real time) or a_j H_j
template <class R>
CMat<R> exponentiated_dense(const DenseModel<R>& m, const std::vector<Exponential>& seq, R tau, bool rt) {
  Eigen::Index d = m.total_vecs.rows();
  const std::complex<R> scale = rt ? std::complex<R>(0, -1) : std::complex<R>(1, 0);
  CMat<R> later = CMat<R>::Identity(d, d), later_inv = CMat<R>::Identity(d, d);
  CMat<R> acc = CMat<R>::Zero(d, d);
  for (std::size_t j = seq.size(); j-- > 0;) {
    const auto& f = seq[j];
    acc += later * (scale * static_cast<R>(f.a) * m.gens[f.group]) * later_inv;
    CMat<R> e = exp_from<R>(m.vecs[f.group], m.vals[f.group], tau * static_cast<R>(f.a), rt);
    CMat<R> einv = exp_from<R>(m.vecs[f.group], m.vals[f.group], -tau * static_cast<R>(f.a), rt);
    later = later * e;
    later_inv = einv * later_inv;
  }
  for (const auto& g : m.gens) acc -= scale * g;
  return acc;
}

}  // namespace

ErrorOperators error_operators(const GroupedHamiltonian& h, const FormulaSchedule& s, double t, TimeMode mode) {
  check_gamma(s, h);
  bool rt = mode == TimeMode::real_time;
  auto m = dense_model<double>(h);
  DenseOperator sv = product_dense<double>(m, s.sequence(), t, rt);
  DenseOperator e_fwd = exp_from<double>(m.total_vecs, m.total_vals, t, rt);
  DenseOperator e_back = exp_from<double>(m.total_vecs, m.total_vals, -t, rt);
  ErrorOperators out;
  out.additive = sv - e_fwd;
  out.multiplicative = e_back * sv - DenseOperator::Identity(sv.rows(), sv.cols());
  return out;
}

DenseOperator exponentiated_error_sample(const GroupedHamiltonian& h, const FormulaSchedule& s, double tau,
                                         TimeMode mode) {
  check_gamma(s, h);
  auto m = dense_model<double>(h);
  return exponentiated_dense<double>(m, s.sequence(), tau, mode == TimeMode::real_time);
}

double fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw input_error("slope fit needs at least two points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

OrderReport order_condition_check(const GroupedHamiltonian& h, const FormulaSchedule& s, TimeMode mode, int points,
                                  double t_lo, double t_hi) {
  using R = long double;
  check_gamma(s, h);
  if (points < 2) throw input_error("order check needs at least two grid points");
  if (!(t_lo > 0 && t_hi > t_lo)) throw input_error("order check needs 0 < t_lo < t_hi");
  bool rt = mode == TimeMode::real_time;
  auto m = dense_model<R>(h);
  auto seq = s.sequence();
  OrderReport rep;
  rep.p = s.order_p;
  for (int i = 0; i < points; ++i) {
    R t = static_cast<R>(t_lo) *
          std::pow(static_cast<R>(t_hi) / static_cast<R>(t_lo), static_cast<R>(i) / (points - 1));
    CMat<R> diff = product_dense<R>(m, seq, t, rt) - exp_from<R>(m.total_vecs, m.total_vals, t, rt);
    rep.ts.push_back(static_cast<double>(t));
    rep.additive_norms.push_back(static_cast<double>(norm_of<R>(diff)));
    rep.exponentiated_norms.push_back(static_cast<double>(norm_of<R>(exponentiated_dense<R>(m, seq, t, rt))));
  }
  auto positive = [](const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return x > 0; });
  };
  if (positive(rep.additive_norms)) {
    rep.slope_additive = fitted_slope(rep.ts, rep.additive_norms);
    rep.additive_ok = rep.slope_additive >= rep.p + 1 - 0.2 && rep.slope_additive <= rep.p + 1 + 0.3;
  }
  if (positive(rep.exponentiated_norms)) {
    rep.slope_exponentiated = fitted_slope(rep.ts, rep.exponentiated_norms);
    rep.exponentiated_ok = rep.slope_exponentiated >= rep.p - 0.2 && rep.slope_exponentiated <= rep.p + 0.3;
  }
  return rep;
}

}  // namespace trotter
