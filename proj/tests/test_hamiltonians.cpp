#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "trotter/hamiltonians.hpp"

using namespace trotter;
using testing_helpers::P;

namespace {
bool same(const PauliSum& a, const PauliSum& b) { return (a - b).empty(); }
const cplx I1{0.0, 1.0};
}  // namespace

TEST_CASE("heisenberg chain") {
  auto h = heisenberg_chain(2, std::vector<double>{0.0});
  CHECK(same(h.total(), P("XX") + P("YY") + P("ZZ")));
  CHECK(random_fields(11, 3) == random_fields(11, 3));
  CHECK(heisenberg_chain(12, 5).fields == heisenberg_chain(12, 5).fields);
  CHECK(heisenberg_chain(12, 5).pauli_count() == 44);
  for (double f : random_fields(100, 9)) {
    CHECK(f >= -1.0);
    CHECK(f < 1.0);
  }
}

TEST_CASE("power-law heisenberg") {
  auto far = power_law_heisenberg(4, 50.0, std::vector<double>{0, 0, 0});
  CHECK(std::abs(far.total().coefficient(0b101, 0)) < 1e-15);
  auto flat = power_law_heisenberg(3, 0.0, std::vector<double>{0, 0});
  CHECK(flat.total().coefficient(0b011, 0) == cplx(1.0));
  CHECK(flat.total().coefficient(0b101, 0) == cplx(1.0));
  CHECK(flat.total().coefficient(0b110, 0) == cplx(1.0));
  auto a4 = power_law_heisenberg(3, 4.0, std::vector<double>{0, 0});
  CHECK(a4.total().coefficient(0b101, 0).real() == doctest::Approx(1.0 / 16));
}

TEST_CASE("tfim") {
  auto e = tfim(2, {}, {{0, 1.0}});
  CHECK(e.a.empty());
  auto chain = tfim(3, {{{0, 1}, 1.0}, {{1, 2}, 1.0}}, {{0, 1.0}, {1, 1.0}, {2, 1.0}});
  CHECK(coefficient_one_norm(chain.a) == doctest::Approx(2.0));
  CHECK(coefficient_one_norm(chain.b) == doctest::Approx(3.0));
  auto two = tfim(2, {{{0, 1}, 1.0}}, {{0, 1.0}, {1, 1.0}});
  CHECK(same(commutator(two.a, two.b), (P("YZ") + P("ZY")) * (2.0 * I1)));
}

TEST_CASE("grouping") {
  auto h = heisenberg_chain(4, std::vector<double>{0.1, 0.2, 0.3});
  auto eo = group_terms(h, Grouping::even_odd);
  REQUIRE(eo.gamma() == 2);
  // A: bonds (0,1), (2,3) with fields on sites 0, 2; B: bond (1,2) with field on site 1
  CHECK(support(eo.groups[0].sum()) == std::vector<int>{0, 1, 2, 3});
  CHECK(eo.groups[0].sum().coefficient(0, 0b0001).real() == doctest::Approx(0.1));
  CHECK(eo.groups[0].sum().coefficient(0, 0b0100).real() == doctest::Approx(0.3));
  CHECK(support(eo.groups[1].sum()) == std::vector<int>{1, 2});
  CHECK(eo.groups[1].sum().coefficient(0, 0b0010).real() == doctest::Approx(0.2));

  auto xyz = group_terms(h, Grouping::xyz);
  REQUIRE(xyz.gamma() == 3);
  auto gx = xyz.groups[0].sum(), gy = xyz.groups[1].sum(), gz = xyz.groups[2].sum();
  for (const auto& e : gx.terms()) CHECK(e.z == 0);
  for (const auto& e : gy.terms()) CHECK(e.x == e.z);
  for (const auto& e : gz.terms()) CHECK(e.x == 0);

  auto per = group_terms(h, Grouping::per_term);
  CHECK(per.gamma() == 12);  // 3 bonds x 3 strings + 3 fields
  for (const auto& g : per.groups) CHECK(g.terms.size() == 1);
  CHECK(same(per.total(), h.total()));
}

TEST_CASE("power-law truncation") {
  auto h = power_law_heisenberg(4, 4.0, std::vector<double>{0, 0, 0});
  auto keep = truncate_power_law(h, 3);
  CHECK(keep.removed_terms == 0);
  CHECK(same(keep.h.total(), h.total()));
  auto cut = truncate_power_law(h, 1);
  CHECK(cut.removed_weight == doctest::Approx(3.0 / 16 + 3.0 / 16 + 3.0 / 81));
  auto nn = heisenberg_chain(6, 2);
  auto nn_cut = truncate_power_law(nn, 1);
  CHECK(nn_cut.removed_terms == 0);
}

TEST_CASE("term tensor norms") {
  LatticeTermTensor one;
  one.k = 2;
  one.entries[{0, 1}] = 3.0;
  CHECK(one_norm(one) == doctest::Approx(3.0));
  CHECK(induced_one_norm(one) == doctest::Approx(3.0));

  const int n = 7;
  LatticeTermTensor all;
  all.k = 2;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.entries[{i, j}] = 1.0;
  CHECK(one_norm(all) == doctest::Approx(n * (n - 1) / 2.0));
  CHECK(induced_one_norm(all) == doctest::Approx(n - 1.0));

  // alpha > d: the induced norm saturates
  double prev = 0, last = 0;
  for (int m : {25, 50, 100, 200}) {
    LatticeTermTensor t;
    t.k = 2;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) t.entries[{i, j}] = std::pow(j - i, -2.0);
    last = induced_one_norm(t);
    CHECK(last >= prev);
    prev = last;
  }
  CHECK(last < M_PI * M_PI / 3);
}

TEST_CASE("lattice sums") {
  CHECK(power_law_lattice_sum(10000, 1, 2.0) == doctest::Approx(M_PI * M_PI / 3).epsilon(1e-3));
  CHECK(power_law_lattice_sum(7, 1, 0.0) == doctest::Approx(14.0));
  double tail = 0;
  for (int j = 10; j < 2000000; ++j) tail += 2.0 / (double(j) * j);
  CHECK(power_law_lattice_sum(2000000, 1, 2.0, 10.0) == doctest::Approx(tail).epsilon(1e-9));
  CHECK(tail == doctest::Approx(0.2100).epsilon(1e-3));
}
