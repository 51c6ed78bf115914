#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trotter/pauli.hpp"

namespace trotter {

// One summand H_gamma, kept as the list of its elementary terms so that
// bounds can expand it term by term.
struct TermGroup {
  std::string label;
  std::vector<PauliSum> terms;
  PauliSum sum() const;
};

struct Geometry {
  int d = 1;
  double alpha = 0.0;  // infinity for nearest-neighbor chains
};

struct GroupedHamiltonian {
  int n = 0;
  std::vector<TermGroup> groups;
  std::optional<Geometry> geometry;
  std::optional<std::vector<double>> fields;

  std::size_t gamma() const { return groups.size(); }
  std::vector<PauliSum> summands() const;
  PauliSum total() const;
  std::size_t pauli_count() const;
  std::vector<PauliSum> elementary_terms() const;
};

// xorshift64* seeded through splitmix64; see README for the exact recurrence.
class FieldRng {
 public:
  explicit FieldRng(std::uint64_t seed);
  std::uint64_t next();
  double uniform();  // [0, 1) with 53 random bits
  double symmetric() { return 2.0 * uniform() - 1.0; }

 private:
  std::uint64_t s_;
};

std::vector<double> random_fields(std::size_t count, std::uint64_t seed);

// sum_{j} X_jX_{j+1} + Y_jY_{j+1} + Z_jZ_{j+1} + h_j Z_j, open chain, one group
GroupedHamiltonian heisenberg_chain(int n, std::uint64_t seed);
GroupedHamiltonian heisenberg_chain(int n, const std::vector<double>& fields);

GroupedHamiltonian power_law_heisenberg(int n, double alpha, std::uint64_t seed);
GroupedHamiltonian power_law_heisenberg(int n, double alpha, const std::vector<double>& fields);

struct TfimParts {
  PauliSum a;  // sum j_uv Z_u Z_v
  PauliSum b;  // sum h_u X_u
};
TfimParts tfim(int n, const std::map<std::pair<int, int>, double>& couplings, const std::map<int, double>& fields);

enum class Grouping { even_odd, xyz, per_term, custom };
Grouping parse_grouping(const std::string& s);
std::string grouping_name(Grouping g);

// custom: one label per elementary term (order of elementary_terms()); groups
// appear in order of first use.
GroupedHamiltonian group_terms(const GroupedHamiltonian& h, Grouping strategy,
                               const std::vector<std::string>& custom_labels = {});

struct Truncation {
  GroupedHamiltonian h;
  double removed_weight = 0.0;  // sum of |coeff| over dropped Pauli strings
  std::size_t removed_terms = 0;
};
// keep only terms whose sites are at most `ell` apart
Truncation truncate_power_law(const GroupedHamiltonian& h, int ell);

// k-local term tensor: sorted site tuple -> spectral norm of the term on it
struct LatticeTermTensor {
  int k = 0;
  std::map<std::vector<int>, double> entries;
};
LatticeTermTensor lattice_tensor(const GroupedHamiltonian& h);
double one_norm(const LatticeTermTensor& t);
double induced_one_norm(const LatticeTermTensor& t);

// sum over the nonzero points of {-n..n}^d of |j|_2^{-alpha}, optionally only
// those with |j|_2 >= tail_from
double power_law_lattice_sum(int n, int d, double alpha, std::optional<double> tail_from = std::nullopt);

// largest distance between two sites of a term
int term_span(const PauliSum& term);

}  // namespace trotter
