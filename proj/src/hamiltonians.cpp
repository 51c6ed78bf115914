#include "trotter/hamiltonians.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "trotter/blocks.hpp"
#include "trotter/errors.hpp"

namespace trotter {

PauliSum TermGroup::sum() const {
  PauliSum s;
  for (const auto& t : terms) s += t;
  return s;
}

std::vector<PauliSum> GroupedHamiltonian::summands() const {
  std::vector<PauliSum> out;
  for (const auto& g : groups) {
    PauliSum s = g.sum();
    if (s.empty()) s = PauliSum(n);
    out.push_back(std::move(s));
  }
  return out;
}

PauliSum GroupedHamiltonian::total() const {
  PauliSum s(n);
  for (const auto& g : groups) s += g.sum();
  return s;
}

std::size_t GroupedHamiltonian::pauli_count() const {
  std::size_t c = 0;
  for (const auto& g : groups)
    for (const auto& t : g.terms) c += t.size();
  return c;
}

std::vector<PauliSum> GroupedHamiltonian::elementary_terms() const {
  std::vector<PauliSum> out;
  for (const auto& g : groups) out.insert(out.end(), g.terms.begin(), g.terms.end());
  return out;
}

FieldRng::FieldRng(std::uint64_t seed) {
  // splitmix64 step so that nearby seeds give unrelated states
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  z ^= z >> 31;
  s_ = z ? z : 0x9E3779B97F4A7C15ull;
}

std::uint64_t FieldRng::next() {
  s_ ^= s_ >> 12;
  s_ ^= s_ << 25;
  s_ ^= s_ >> 27;
  return s_ * 0x2545F4914F6CDD1Dull;
}

double FieldRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::vector<double> random_fields(std::size_t count, std::uint64_t seed) {
  FieldRng rng(seed);
  std::vector<double> h(count);
  for (auto& v : h) v = rng.symmetric();
  return h;
}

namespace {

PauliSum heisenberg_bond(int n, int j, int k, double c) {
  return PauliSum::pair(n, j, 'X', k, 'X', c) + PauliSum::pair(n, j, 'Y', k, 'Y', c) +
         PauliSum::pair(n, j, 'Z', k, 'Z', c);
}

}  // namespace

GroupedHamiltonian heisenberg_chain(int n, std::uint64_t seed) {
  if (n < 2) throw input_error("heisenberg_chain needs n >= 2");
  return heisenberg_chain(n, random_fields(static_cast<std::size_t>(n - 1), seed));
}

GroupedHamiltonian heisenberg_chain(int n, const std::vector<double>& fields) {
  if (n < 2) throw input_error("heisenberg_chain needs n >= 2");
  if (static_cast<int>(fields.size()) != n - 1) throw input_error("heisenberg_chain needs n-1 field values");
  GroupedHamiltonian h;
  h.n = n;
  h.geometry = Geometry{1, std::numeric_limits<double>::infinity()};
  h.fields = fields;
  TermGroup g{"H", {}};
  for (int j = 0; j + 1 < n; ++j) g.terms.push_back(heisenberg_bond(n, j, j + 1, 1.0));
  for (int j = 0; j + 1 < n; ++j) g.terms.push_back(PauliSum::single(n, j, 'Z', fields[j]));
  h.groups.push_back(std::move(g));
  return h;
}

GroupedHamiltonian power_law_heisenberg(int n, double alpha, std::uint64_t seed) {
  if (n < 2) throw input_error("power_law_heisenberg needs n >= 2");
  return power_law_heisenberg(n, alpha, random_fields(static_cast<std::size_t>(n - 1), seed));
}

GroupedHamiltonian power_law_heisenberg(int n, double alpha, const std::vector<double>& fields) {
  if (n < 2) throw input_error("power_law_heisenberg needs n >= 2");
  if (!(alpha >= 0)) throw input_error("power-law exponent must be >= 0");
  if (static_cast<int>(fields.size()) != n - 1) throw input_error("power_law_heisenberg needs n-1 field values");
  GroupedHamiltonian h;
  h.n = n;
  h.geometry = Geometry{1, alpha};
  h.fields = fields;
  TermGroup g{"H", {}};
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      double c = std::pow(static_cast<double>(k - j), -alpha);
      PauliSum bond = heisenberg_bond(n, j, k, c);
      if (!bond.empty()) g.terms.push_back(bond);
    }
  for (int j = 0; j + 1 < n; ++j) g.terms.push_back(PauliSum::single(n, j, 'Z', fields[j]));
  h.groups.push_back(std::move(g));
  return h;
}

TfimParts tfim(int n, const std::map<std::pair<int, int>, double>& couplings, const std::map<int, double>& fields) {
  TfimParts out{PauliSum(n), PauliSum(n)};
  for (const auto& [uv, j] : couplings) {
    if (j < 0) throw input_error("tfim couplings must be nonnegative");
    if (uv.first == uv.second || uv.first < 0 || uv.second < 0 || uv.first >= n || uv.second >= n)
      throw input_error("tfim coupling indices out of range");
    out.a += PauliSum::pair(n, uv.first, 'Z', uv.second, 'Z', j);
  }
  for (const auto& [u, hu] : fields) {
    if (hu < 0) throw input_error("tfim fields must be nonnegative");
    if (u < 0 || u >= n) throw input_error("tfim field index out of range");
    out.b += PauliSum::single(n, u, 'X', hu);
  }
  return out;
}

Grouping parse_grouping(const std::string& s) {
  if (s == "even-odd") return Grouping::even_odd;
  if (s == "x-y-z" || s == "xyz") return Grouping::xyz;
  if (s == "per-term") return Grouping::per_term;
  if (s == "custom") return Grouping::custom;
  throw input_error("unknown grouping '" + s + "'");
}

std::string grouping_name(Grouping g) {
  switch (g) {
    case Grouping::even_odd: return "even-odd";
    case Grouping::xyz: return "x-y-z";
    case Grouping::per_term: return "per-term";
    case Grouping::custom: return "custom";
  }
  return "?";
}

int term_span(const PauliSum& term) {
  auto s = support(term);
  if (s.empty()) return 0;
  return s.back() - s.front();
}

namespace {

GroupedHamiltonian even_odd(const GroupedHamiltonian& h) {
  if (!h.geometry || h.geometry->d != 1) throw input_error("even-odd grouping needs a 1-D chain");
  int n = h.n;
  // bond b couples (b, b+1); its field partner is the single-site term on b
  std::vector<PauliSum> bond(n > 1 ? n - 1 : 0, PauliSum(n));
  std::vector<bool> seen(bond.size(), false);
  for (const auto& t : h.elementary_terms()) {
    auto s = support(t);
    if (s.empty()) throw input_error("even-odd grouping: identity term");
    if (s.size() > 2 || (s.size() == 2 && s[1] != s[0] + 1))
      throw input_error("even-odd grouping needs nearest-neighbor terms only");
    int b = s[0];
    if (s.size() == 1 && b == n - 1) b = n - 2;  // last site folds into the last bond
    if (b < 0) throw input_error("even-odd grouping needs n >= 2");
    bond[b] += t;
    seen[b] = true;
  }
  GroupedHamiltonian out;
  out.n = n;
  out.geometry = h.geometry;
  out.fields = h.fields;
  TermGroup a{"A", {}}, bb{"B", {}};
  for (std::size_t b = 0; b < bond.size(); ++b) {
    if (!seen[b] || bond[b].empty()) continue;
    (b % 2 == 0 ? a : bb).terms.push_back(bond[b]);
  }
  out.groups = {a, bb};
  return out;
}

GroupedHamiltonian xyz(const GroupedHamiltonian& h) {
  GroupedHamiltonian out;
  out.n = h.n;
  out.geometry = h.geometry;
  out.fields = h.fields;
  TermGroup gx{"H1", {}}, gy{"H2", {}}, gz{"H3", {}};
  for (const auto& t : h.elementary_terms()) {
    std::vector<PauliSum::Entry> ex, ey, ez;
    for (const auto& e : t.terms()) {
      mask_t sx = e.x & ~e.z, sy = e.x & e.z, sz = e.z & ~e.x;
      int kinds = (sx != 0) + (sy != 0) + (sz != 0);
      if (kinds != 1) throw input_error("x-y-z grouping: term " + pauli_string(h.n, e.x, e.z) + " mixes Pauli types");
      (sx ? ex : sy ? ey : ez).push_back(e);
    }
    if (!ex.empty()) gx.terms.push_back(PauliSum::from_entries(h.n, ex));
    if (!ey.empty()) gy.terms.push_back(PauliSum::from_entries(h.n, ey));
    if (!ez.empty()) gz.terms.push_back(PauliSum::from_entries(h.n, ez));
  }
  // nearest-neighbor chains: fold each field into the ZZ bond starting at its
  // site, matching the (Z_jZ_{j+1} + h_j Z_j) terms of the X-Y-Z split
  if (h.geometry && std::isinf(h.geometry->alpha)) {
    std::vector<PauliSum> merged;
    std::vector<PauliSum> singles;
    for (auto& t : gz.terms) (support(t).size() == 1 ? singles : merged).push_back(t);
    for (const auto& f : singles) {
      int site = support(f)[0];
      bool placed = false;
      for (auto& m : merged) {
        auto s = support(m);
        if (s.size() == 2 && (s[0] == site || (site == h.n - 1 && s[1] == site))) {
          m += f;
          placed = true;
          break;
        }
      }
      if (!placed) merged.push_back(f);
    }
    gz.terms = merged;
  }
  out.groups = {gx, gy, gz};
  return out;
}

}  // namespace

GroupedHamiltonian group_terms(const GroupedHamiltonian& h, Grouping strategy,
                               const std::vector<std::string>& custom_labels) {
  switch (strategy) {
    case Grouping::even_odd: return even_odd(h);
    case Grouping::xyz: return xyz(h);
    case Grouping::per_term: {
      GroupedHamiltonian out = h;
      out.groups.clear();
      int i = 0;
      for (const auto& t : h.elementary_terms())
        for (const auto& e : t.terms()) {
          PauliSum one = PauliSum::from_entries(h.n, {e});
          out.groups.push_back({"T" + std::to_string(++i), {one}});
        }
      return out;
    }
    case Grouping::custom: {
      auto terms = h.elementary_terms();
      if (custom_labels.size() != terms.size())
        throw input_error("custom grouping needs one label per elementary term");
      GroupedHamiltonian out = h;
      out.groups.clear();
      std::map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        auto it = index.find(custom_labels[i]);
        if (it == index.end()) {
          it = index.emplace(custom_labels[i], out.groups.size()).first;
          out.groups.push_back({custom_labels[i], {}});
        }
        out.groups[it->second].terms.push_back(terms[i]);
      }
      return out;
    }
  }
  throw input_error("unknown grouping");
}

Truncation truncate_power_law(const GroupedHamiltonian& h, int ell) {
  if (!h.geometry) throw input_error("truncate_power_law needs lattice geometry");
  if (ell < 1) throw input_error("truncation distance must be >= 1");
  Truncation out;
  out.h = h;
  for (auto& g : out.h.groups) {
    std::vector<PauliSum> kept;
    for (auto& t : g.terms) {
      if (term_span(t) > ell) {
        out.removed_weight += coefficient_one_norm(t);
        out.removed_terms += t.size();
      } else {
        kept.push_back(t);
      }
    }
    g.terms = std::move(kept);
  }
  return out;
}

LatticeTermTensor lattice_tensor(const GroupedHamiltonian& h) {
  std::map<std::vector<int>, PauliSum> by_sites;
  for (const auto& t : h.elementary_terms())
    for (const auto& e : t.terms()) {
      PauliSum one = PauliSum::from_entries(h.n, {e});
      auto key = support(one);
      auto it = by_sites.find(key);
      if (it == by_sites.end())
        by_sites.emplace(key, one);
      else
        it->second += one;
    }
  LatticeTermTensor out;
  for (const auto& [key, op] : by_sites) {
    if (key.empty()) continue;  // identity shifts are irrelevant to commutators
    double v = operator_norm(op);
    if (v == 0.0) continue;
    out.entries[key] = v;
    out.k = std::max(out.k, static_cast<int>(key.size()));
  }
  return out;
}

double one_norm(const LatticeTermTensor& t) {
  double s = 0;
  for (const auto& [k, v] : t.entries) s += v;
  return s;
}

double induced_one_norm(const LatticeTermTensor& t) {
  // fix one site and sum the norms of every term touching it; take the largest
  std::map<int, double> site_sums;
  for (const auto& [key, v] : t.entries) {
    std::set<int> sites(key.begin(), key.end());
    for (int j : sites) site_sums[j] += v;
  }
  double best = 0;
  for (const auto& [j, v] : site_sums) best = std::max(best, v);
  return best;
}

double power_law_lattice_sum(int n, int d, double alpha, std::optional<double> tail_from) {
  if (n < 1) throw input_error("lattice size must be >= 1");
  if (d < 1 || d > 3) throw input_error("lattice dimension must be 1, 2 or 3");
  double total = 0;
  const int lo = -n, hi = n;
  int ylo = d >= 2 ? lo : 0, yhi = d >= 2 ? hi : 0;
  int zlo = d >= 3 ? lo : 0, zhi = d >= 3 ? hi : 0;
  double x0 = tail_from.value_or(0.0);
  for (int i = lo; i <= hi; ++i)
    for (int j = ylo; j <= yhi; ++j)
      for (int k = zlo; k <= zhi; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        double r = std::sqrt(double(i) * i + double(j) * j + double(k) * k);
        if (r < x0) continue;
        total += alpha == 0.0 ? 1.0 : std::pow(r, -alpha);
      }
  return total;
}

}  // namespace trotter
