#include "trotter/error_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "trotter/blocks.hpp"
#include "trotter/dense.hpp"
#include "trotter/errors.hpp"

namespace trotter {

NormMode parse_norm_mode(const std::string& s) {
  if (s == "dense" || s == "dense-exact") return NormMode::dense_exact;
  if (s == "coeff" || s == "coeff-1norm") return NormMode::coeff_1norm;
  if (s == "cluster" || s == "cluster-exact-innermost-triangle") return NormMode::cluster;
  throw input_error("unknown norm mode '" + s + "'");
}

std::string norm_mode_name(NormMode m) {
  switch (m) {
    case NormMode::dense_exact: return "dense-exact";
    case NormMode::coeff_1norm: return "coeff-1norm";
    case NormMode::cluster: return "cluster-exact-innermost-triangle";
  }
  return "?";
}

double nested_norm(const PauliSum& op, NormMode mode) {
  if (op.empty()) return 0.0;
  if (mode == NormMode::coeff_1norm) return coefficient_one_norm(op);
  return operator_norm(op);
}

namespace {

double factorial(int k) {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void check_nonneg(double v, const char* what) {
  if (!(v >= 0)) throw input_error(std::string(what) + " must be nonnegative");
}

// an operand of a nested commutator: its full sum and its elementary terms
struct Operand {
  std::string label;
  PauliSum sum;
  std::vector<PauliSum> terms;
};

struct Pattern {
  std::vector<int> ops;  // outer..inner
  double coeff;
};

std::string pattern_label(const std::vector<Operand>& ops, const std::vector<int>& p) {
  std::string s = ops[p.back()].label;
  for (std::size_t i = p.size() - 1; i-- > 0;) s = "[" + ops[p[i]].label + "," + s + "]";
  return s;
}

// Evaluates sum_k coeff_k * ||[O_{k,0},[O_{k,1},...,O_{k,last}]]||, sharing
// inner sub-commutators between patterns.
BoundReport evaluate_patterns(const std::vector<Operand>& ops, const std::vector<Pattern>& patterns, NormMode mode,
                              int p, double t) {
  BoundReport rep;
  rep.mode = mode;
  rep.order_p = p;
  rep.t = t;
  std::vector<double> norms(patterns.size(), 0.0);

  // key: operand indices from the innermost outwards
  auto eval = [&](const PauliSum& inner, int inner_op, const std::vector<std::size_t>& which, bool exact_norm) {
    std::map<std::vector<int>, PauliSum> memo;
    std::vector<int> root{inner_op};
    memo.emplace(root, inner);
    std::function<const PauliSum&(const std::vector<int>&)> node = [&](const std::vector<int>& key) -> const PauliSum& {
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      std::vector<int> sub(key.begin(), key.end() - 1);
      const PauliSum& below = node(sub);
      PauliSum c = below.empty() ? PauliSum(below.n()) : commutator(ops[key.back()].sum, below);
      return memo.emplace(key, std::move(c)).first->second;
    };
    for (std::size_t k : which) {
      const auto& pat = patterns[k].ops;
      std::vector<int> key(pat.rbegin(), pat.rend());
      const PauliSum& op = node(key);
      norms[k] += exact_norm ? nested_norm(op, NormMode::dense_exact) : coefficient_one_norm(op);
    }
  };

  std::map<int, std::vector<std::size_t>> by_inner;
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    if (patterns[k].ops.size() < 2) throw input_error("nested commutator needs two operands");
    by_inner[patterns[k].ops.back()].push_back(k);
  }
  for (const auto& [inner_op, which] : by_inner) {
    const Operand& o = ops[inner_op];
    if (mode == NormMode::cluster) {
      for (const auto& term : o.terms) eval(term, inner_op, which, true);
    } else {
      if (mode == NormMode::dense_exact && !o.sum.empty()) check_dense_qubits(o.sum.n(), "dense-exact bound");
      eval(o.sum, inner_op, which, mode == NormMode::dense_exact);
    }
  }
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    BoundTerm bt{pattern_label(ops, patterns[k].ops), patterns[k].coeff, norms[k]};
    rep.value += bt.coeff * bt.norm;
    rep.per_term.push_back(std::move(bt));
  }
  return rep;
}

std::vector<Operand> group_operands(const GroupedHamiltonian& h) {
  std::vector<Operand> ops;
  for (const auto& g : h.groups) {
    Operand o{g.label, g.sum(), g.terms};
    if (o.sum.empty()) o.sum = PauliSum(h.n);
    ops.push_back(std::move(o));
  }
  return ops;
}

}  // namespace

// ---- 1-norm scaling ----

int stage_count(int p) {
  if (p == 1) return 1;
  if (p < 1 || p % 2) throw input_error("order must be 1 or even");
  int s = 2;
  for (int k = 2; 2 * k <= p; ++k) s *= 5;
  return s;
}

double one_norm_bound(const std::vector<double>& group_norms, int stages, int p, double t, bool anti_hermitian) {
  check_nonneg(t, "t");
  if (stages < 1 || p < 1) throw input_error("one_norm_bound needs stages >= 1 and p >= 1");
  double sum = 0;
  for (double v : group_norms) {
    check_nonneg(v, "group norm");
    sum += v;
  }
  double ups = stages * sum;
  double e1 = anti_hermitian ? 1.0 : std::exp(t * ups);
  double e2 = anti_hermitian ? 1.0 : std::exp(t * sum);
  return std::pow(t, p + 1) / factorial(p + 1) * (std::pow(ups, p + 1) * e1 + std::pow(sum, p + 1) * e2);
}

long one_norm_trotter_number(const std::vector<double>& group_norms, int p, double t, double eps,
                             bool anti_hermitian) {
  if (!(eps > 0)) throw input_error("eps must be positive");
  int stages = stage_count(p);
  return bound_trotter_number(
      [&](double tau) { return one_norm_bound(group_norms, stages, p, tau, anti_hermitian); }, t, eps);
}

// ---- conjugation expansion ----

namespace {

// all (q_1..q_s) with q_i >= 0 summing to total
void compositions(int s, int total, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == s - 1) {
    cur.push_back(total);
    f(cur);
    cur.pop_back();
    return;
  }
  for (int q = 0; q <= total; ++q) {
    cur.push_back(q);
    compositions(s, total - q, cur, f);
    cur.pop_back();
  }
}

// ad_{A_s}^{q_s} ... ad_{A_1}^{q_1} (B)
PauliSum ad_chain(const std::vector<PauliSum>& a, const PauliSum& b, const std::vector<int>& q) {
  PauliSum acc = b;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int r = 0; r < q[i] && !acc.empty(); ++r) acc = commutator(a[i], acc);
  return acc;
}

}  // namespace

double alpha_comm_conjugation(const std::vector<PauliSum>& a_list, const PauliSum& b, int p, NormMode mode) {
  if (p < 1) throw input_error("alpha_comm needs p >= 1");
  if (a_list.empty()) return 0.0;
  double total = 0;
  std::vector<int> cur;
  compositions(static_cast<int>(a_list.size()), p, cur, [&](const std::vector<int>& q) {
    double multinom = factorial(p);
    for (int v : q) multinom /= factorial(v);
    total += multinom * nested_norm(ad_chain(a_list, b, q), mode);
  });
  return total;
}

ConjugationCheck conjugation_remainder_check(const std::vector<PauliSum>& a_list, const PauliSum& b, int p,
                                             double tau) {
  if (p < 1) throw input_error("conjugation check needs p >= 1");
  int n = b.n();
  for (const auto& a : a_list) {
    if (!is_hermitian(a)) throw input_error("conjugation check needs Hermitian generators");
    if (!a.empty()) n = std::max(n, a.n());
  }
  check_dense_qubits(n, "conjugation_remainder_check");
  const Eigen::Index dim = Eigen::Index(1) << n;
  auto dense = [&](const PauliSum& s) -> DenseOperator {
    return s.empty() ? DenseOperator(DenseOperator::Zero(dim, dim)) : to_dense(s);
  };
  DenseOperator u = DenseOperator::Identity(dim, dim);
  for (const auto& a : a_list) u = expm_i_hermitian(dense(a), tau) * u;
  DenseOperator conj = u * dense(b) * u.adjoint();

  // Taylor part: sum over |q| < p of tau^{|q|}/prod q_i! ad_{-iA_s}^{q_s}...ad_{-iA_1}^{q_1} B
  PauliSum poly(n);
  std::vector<int> cur;
  for (int total = 0; total < p; ++total)
    compositions(static_cast<int>(a_list.size()), total, cur, [&](const std::vector<int>& q) {
      double w = std::pow(tau, total);
      for (int v : q) w /= factorial(v);
      cplx phase = std::pow(cplx(0, -1), total);
      poly += ad_chain(a_list, b, q) * (phase * w);
    });
  if (a_list.empty()) poly = b;
  ConjugationCheck out;
  out.remainder = spectral_norm(conj - dense(poly));
  out.bound = alpha_comm_conjugation(a_list, b, p) * std::pow(std::abs(tau), p) / factorial(p);
  return out;
}

// ---- commutator scaling ----

BoundReport alpha_tilde(const GroupedHamiltonian& h, int p, NormMode mode, double cap) {
  if (p < 1) throw input_error("alpha_tilde needs p >= 1");
  const int g = static_cast<int>(h.groups.size());
  double count = std::pow(static_cast<double>(g), p + 1);
  if (count > cap) throw input_error("alpha_tilde: " + std::to_string(count) + " commutators exceed the cap");
  auto ops = group_operands(h);
  std::vector<Pattern> pats;
  std::vector<int> idx(p + 1, 0);
  for (long k = 0; k < static_cast<long>(count); ++k) {
    long v = k;
    for (int i = p; i >= 0; --i) {
      idx[i] = static_cast<int>(v % g);
      v /= g;
    }
    pats.push_back({idx, 1.0});
  }
  BoundReport rep = evaluate_patterns(ops, pats, mode, p, 1.0);
  // tuples with two equal innermost entries vanish identically; drop them from the listing
  std::vector<BoundTerm> kept;
  for (auto& bt : rep.per_term)
    if (bt.norm != 0.0) kept.push_back(std::move(bt));
  rep.per_term = std::move(kept);
  return rep;
}

long comm_trotter_number(double alpha, int p, double t, double eps, double prefactor) {
  if (!(alpha >= 0) || !(t >= 0) || !(eps > 0) || !(prefactor > 0) || p < 1)
    throw input_error("comm_trotter_number: invalid arguments");
  double r = prefactor * std::pow(alpha, 1.0 / p) * std::pow(t, 1.0 + 1.0 / p) / std::pow(eps, 1.0 / p);
  long out = static_cast<long>(std::ceil(r * (1 - 1e-12)));
  return std::max(1L, out);
}

// ---- explicit bounds ----

BoundReport tight_low_order_bound(const GroupedHamiltonian& h, double t, int order, NormMode mode) {
  check_nonneg(t, "t");
  if (order != 1 && order != 2) throw input_error("tight bound exists for order 1 and 2 only");
  auto ops = group_operands(h);
  const int g = static_cast<int>(ops.size());
  // suffix sums sum_{gamma2 > gamma1} H_gamma2, built once per gamma1
  std::vector<Pattern> pats;
  Operand suffix{"", PauliSum(h.n), {}};
  std::vector<int> suffix_index(g, -1);
  for (int k = g - 1; k >= 1; --k) {
    suffix.sum += ops[k].sum;
    suffix.terms.insert(suffix.terms.end(), ops[k].terms.begin(), ops[k].terms.end());
    suffix.label = suffix.label.empty() ? ops[k].label : ops[k].label + "+" + suffix.label;
    Operand s = suffix;
    if (k < g - 1) s.label = "(" + s.label + ")";
    suffix_index[k - 1] = static_cast<int>(ops.size());
    ops.push_back(std::move(s));
  }
  if (order == 1) {
    double c = t * t / 2;
    for (int k = 0; k + 1 < g; ++k) pats.push_back({{suffix_index[k], k}, c});
  } else {
    double c1 = t * t * t / 12, c2 = t * t * t / 24;
    for (int k = 0; k + 1 < g; ++k) {
      pats.push_back({{suffix_index[k], suffix_index[k], k}, c1});
      pats.push_back({{k, k, suffix_index[k]}, c2});
    }
  }
  if (pats.empty()) {
    BoundReport rep;
    rep.mode = mode;
    rep.order_p = order;
    rep.t = t;
    return rep;
  }
  return evaluate_patterns(ops, pats, mode, order, t);
}

const std::vector<FourthOrderEntry>& fourth_order_two_term() {
  // A = summand 0 (innermost), B = summand 1
  static const std::vector<FourthOrderEntry> table = {
      {{0, 0, 0, 1, 0}, 0.0047}, {{0, 0, 1, 1, 0}, 0.0057}, {{0, 1, 0, 1, 0}, 0.0046},
      {{0, 1, 1, 1, 0}, 0.0074}, {{1, 0, 0, 1, 0}, 0.0097}, {{1, 0, 1, 1, 0}, 0.0097},
      {{1, 1, 0, 1, 0}, 0.0173}, {{1, 1, 1, 1, 0}, 0.0284},
  };
  return table;
}

namespace {

// rows (i,j,k) in lexicographic order; columns (l,m) = (2,1), (3,1), (3,2)
const double three_term_rows[27][3] = {
    {0.0047, 0.0047, 0.0043},  // 111
    {0.0057, 0.0057, 0.0057},  // 112
    {0.0057, 0.0057, 0.0057},  // 113
    {0.0046, 0.0046, 0.0035},  // 121
    {0.0074, 0.0070, 0.0062},  // 122
    {0.0082, 0.0082, 0.0082},  // 123
    {0.0046, 0.0046, 0.0035},  // 131
    {0.0070, 0.0058, 0.0046},  // 132
    {0.0082, 0.0074, 0.0074},  // 133
    {0.0150, 0.0150, 0.0141},  // 211
    {0.0161, 0.0161, 0.0161},  // 212
    {0.0161, 0.0161, 0.0161},  // 213
    {0.0239, 0.0239, 0.0212},  // 221
    {0.0315, 0.0306, 0.0290},  // 222
    {0.0303, 0.0303, 0.0303},  // 223
    {0.0179, 0.0179, 0.0153},  // 231
    {0.0232, 0.0206, 0.0179},  // 232
    {0.0259, 0.0241, 0.0241},  // 233
    {0.0204, 0.0204, 0.0186},  // 311
    {0.0225, 0.0225, 0.0217},  // 312
    {0.0225, 0.0225, 0.0225},  // 313
    {0.0423, 0.0423, 0.0377},  // 321
    {0.0585, 0.0571, 0.0537},  // 322
    {0.0502, 0.0502, 0.0502},  // 323
    {0.0423, 0.0423, 0.0377},  // 331
    {0.0681, 0.0641, 0.0601},  // 332
    {0.0648, 0.0621, 0.0628},  // 333
};

}  // namespace

const std::vector<FourthOrderEntry>& fourth_order_three_term() {
  static const std::vector<FourthOrderEntry> table = [] {
    std::vector<FourthOrderEntry> t;
    const int lm[3][2] = {{1, 0}, {2, 0}, {2, 1}};
    for (int row = 0; row < 27; ++row)
      for (int col = 0; col < 3; ++col)
        t.push_back({{row / 9, (row / 3) % 3, row % 3, lm[col][0], lm[col][1]}, three_term_rows[row][col]});
    return t;
  }();
  return table;
}

double three_term_coefficient(int i, int j, int k, int l, int m) {
  for (const auto& e : fourth_order_three_term())
    if (e.pattern == std::array<int, 5>{i - 1, j - 1, k - 1, l - 1, m - 1}) return e.coeff;
  return 0.0;
}

namespace {

const std::vector<FourthOrderEntry>& table_for(std::size_t gamma) {
  if (gamma == 2) return fourth_order_two_term();
  if (gamma == 3) return fourth_order_three_term();
  throw input_error("fourth-order bound needs 2 or 3 summands, got " + std::to_string(gamma));
}

}  // namespace

BoundReport fourth_order_bound(const GroupedHamiltonian& h, double t, NormMode mode) {
  check_nonneg(t, "t");
  const auto& table = table_for(h.groups.size());
  double t5 = std::pow(t, 5);
  std::vector<Pattern> pats;
  for (const auto& e : table) pats.push_back({std::vector<int>(e.pattern.begin(), e.pattern.end()), e.coeff * t5});
  return evaluate_patterns(group_operands(h), pats, mode, 4, t);
}

BoundReport chain_fourth_order_bound(const std::vector<double>& fields, Grouping grouping, double t, NormMode mode) {
  check_nonneg(t, "t");
  if (mode == NormMode::dense_exact) throw input_error("chain bound supports cluster and coeff-1norm modes");
  if (grouping != Grouping::even_odd && grouping != Grouping::xyz)
    throw input_error("chain bound supports even-odd and x-y-z groupings");
  const int n = static_cast<int>(fields.size()) + 1;
  if (n < 2) throw input_error("chain needs n >= 2");
  const bool eo = grouping == Grouping::even_odd;
  const std::size_t gamma = eo ? 2 : 3;
  const auto& table = table_for(gamma);
  const double t5 = std::pow(t, 5);
  const std::vector<std::string> labels = eo ? std::vector<std::string>{"A", "B"}
                                             : std::vector<std::string>{"H1", "H2", "H3"};
  constexpr int reach = 4;  // four commutator layers grow a bond by at most 4 sites per side

  // the elementary terms on bond b, placed in a window starting at lo
  auto bond_terms = [&](int b, int lo, int wn) {
    std::vector<std::pair<int, PauliSum>> out;  // (group, term)
    int j = b - lo;
    if (eo) {
      PauliSum s = PauliSum::pair(wn, j, 'X', j + 1, 'X') + PauliSum::pair(wn, j, 'Y', j + 1, 'Y') +
                   PauliSum::pair(wn, j, 'Z', j + 1, 'Z') + PauliSum::single(wn, j, 'Z', fields[b]);
      out.emplace_back(b % 2, s);
    } else {
      out.emplace_back(0, PauliSum::pair(wn, j, 'X', j + 1, 'X'));
      out.emplace_back(1, PauliSum::pair(wn, j, 'Y', j + 1, 'Y'));
      out.emplace_back(2, PauliSum::pair(wn, j, 'Z', j + 1, 'Z') + PauliSum::single(wn, j, 'Z', fields[b]));
    }
    return out;
  };

  std::vector<double> norms(table.size(), 0.0);
  for (int b = 0; b + 1 < n; ++b) {
    int lo = std::max(0, b - reach), hi = std::min(n - 1, b + 1 + reach);
    int wn = hi - lo + 1;
    std::vector<Operand> ops(gamma);
    for (std::size_t g = 0; g < gamma; ++g) {
      ops[g].label = labels[g];
      ops[g].sum = PauliSum(wn);
    }
    for (int c = lo; c < hi; ++c)
      for (auto& [g, term] : bond_terms(c, lo, wn)) ops[g].sum += term;
    // innermost terms living on bond b only
    for (auto& [g, term] : bond_terms(b, lo, wn)) {
      ops[g].terms = {term};
      std::vector<Pattern> pats;
      std::vector<std::size_t> slot;
      for (std::size_t k = 0; k < table.size(); ++k)
        if (table[k].pattern[4] == g) {
          pats.push_back({std::vector<int>(table[k].pattern.begin(), table[k].pattern.end()), 1.0});
          slot.push_back(k);
        }
      if (pats.empty()) continue;
      BoundReport part = evaluate_patterns(ops, pats, mode == NormMode::cluster ? NormMode::cluster
                                                                                 : NormMode::coeff_1norm, 4, t);
      // coeff_1norm on the window still expands the innermost group, which is
      // exactly the per-term triangle inequality applied to the whole chain
      for (std::size_t q = 0; q < slot.size(); ++q) norms[slot[q]] += part.per_term[q].norm;
      ops[g].terms.clear();
    }
  }
  BoundReport rep;
  rep.mode = mode;
  rep.order_p = 4;
  rep.t = t;
  for (std::size_t k = 0; k < table.size(); ++k) {
    std::vector<Operand> lab(gamma);
    for (std::size_t g = 0; g < gamma; ++g) lab[g].label = labels[g];
    BoundTerm bt{pattern_label(lab, std::vector<int>(table[k].pattern.begin(), table[k].pattern.end())),
                 table[k].coeff * t5, norms[k]};
    rep.value += bt.coeff * bt.norm;
    rep.per_term.push_back(std::move(bt));
  }
  return rep;
}

// ---- counting bound ----

double counting_bound_klocal(const LatticeTermTensor& norms, int p) {
  if (p < 1) throw input_error("counting bound needs p >= 1");
  if (norms.entries.empty()) return 0.0;
  const double k = norms.k;
  if (k < 1) throw input_error("counting bound needs k >= 1");
  double induced = induced_one_norm(norms);
  double value = one_norm(norms);
  for (int j = 1; j <= p; ++j) value *= 2 * k * (k + (j - 1) * (k - 1)) * induced;
  return value;
}

LatticeTermTensor power_law_term_tensor(int n, double alpha, const std::vector<double>& fields) {
  if (n < 2) throw input_error("power-law chain needs n >= 2");
  if (!(alpha >= 0)) throw input_error("power-law exponent must be >= 0");
  if (static_cast<int>(fields.size()) != n - 1) throw input_error("power-law chain needs n-1 field values");
  LatticeTermTensor t;
  t.k = 2;
  // ||XX + YY + ZZ|| = 3
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) t.entries[{j, k}] = 3.0 * std::pow(static_cast<double>(k - j), -alpha);
  for (int j = 0; j + 1 < n; ++j)
    if (fields[j] != 0.0) t.entries[{j}] = std::abs(fields[j]);
  return t;
}

// ---- Trotter number from a bound ----

long bound_trotter_number(const std::function<double(double)>& bound_fn, double t, double eps, long r_cap) {
  if (!(eps > 0)) throw input_error("eps must be positive");
  check_nonneg(t, "t");
  auto pass = [&](long r) { return static_cast<double>(r) * bound_fn(t / static_cast<double>(r)) <= eps; };
  if (pass(1)) return 1;
  long lo = 1, hi = 2;
  while (!pass(hi)) {
    lo = hi;
    if (hi >= r_cap) throw contract_error("bound_trotter_number: r cap exceeded");
    hi = std::min(r_cap, hi * 2);
  }
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    (pass(mid) ? hi : lo) = mid;
  }
  if (!pass(hi) || pass(hi - 1)) {
    // non-monotone bound near the boundary: scan down to the first failure
    while (hi > 1 && pass(hi - 1)) --hi;
  }
  return hi;
}

long bound_trotter_number(double c, int p, double t, double eps, long r_cap) {
  check_nonneg(c, "bound constant");
  return bound_trotter_number([&](double tau) { return c * std::pow(tau, p + 1); }, t, eps, r_cap);
}

}  // namespace trotter
