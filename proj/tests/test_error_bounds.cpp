#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "trotter/error_bounds.hpp"
#include "trotter/product_formula.hpp"

using namespace trotter;
using testing_helpers::grouped;
using testing_helpers::P;

TEST_CASE("one-norm bound") {
  CHECK(one_norm_bound({1.0}, 1, 1, 0.1, true) == doctest::Approx(0.01));
  CHECK(one_norm_bound({1.0}, 1, 1, 0.1, false) == doctest::Approx(0.01 * std::exp(0.1)));
  CHECK(one_norm_bound({0.4, 0.6}, 1, 1, 0.0, true) == 0.0);
  CHECK(one_norm_trotter_number({1.0}, 2, 1.0, 1e9) == 1);
  long r = one_norm_trotter_number({1.0}, 2, 1.0, 1e-3);
  int st = stage_count(2);
  CHECK(r * one_norm_bound({1.0}, st, 2, 1.0 / r, true) <= 1e-3);
  CHECK((r - 1) * one_norm_bound({1.0}, st, 2, 1.0 / (r - 1), true) > 1e-3);
  CHECK(one_norm_trotter_number({1.0}, 2, 2.0, 1e-3) > r);
}

TEST_CASE("conjugation expansion") {
  CHECK(alpha_comm_conjugation({P("ZI")}, P("IZ"), 2) == 0.0);
  CHECK(alpha_comm_conjugation({P("X")}, P("Z"), 2) == doctest::Approx(4.0));
  CHECK(alpha_comm_conjugation({P("X"), P("Z")}, P("Z"), 1) == doctest::Approx(2.0));

  auto c0 = conjugation_remainder_check({P("ZI")}, P("IZ"), 2, 0.1);
  CHECK(c0.remainder < 1e-12);
  CHECK(c0.bound == 0.0);
  std::vector<PauliSum> a = {P("XYI") + P("IZZ") * 0.4, P("ZIX") * 0.7 + P("YII")};
  auto b = P("XXX") * 0.5 + P("IYZ");
  auto c = conjugation_remainder_check(a, b, 2, 0.05);
  CHECK(c.remainder < c.bound);
  auto c2 = conjugation_remainder_check(a, b, 2, 0.1);
  CHECK(c2.bound / c.bound == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("alpha tilde") {
  CHECK(alpha_tilde(grouped({P("ZI"), P("IZ")}), 2).value == 0.0);
  CHECK(alpha_tilde(grouped({P("X"), P("Z")}), 1).value == doctest::Approx(4.0));
  auto h = grouped({P("XY") + P("ZI"), P("YY") * 0.3 + P("IX")});
  auto ab = operator_norm(commutator(h.groups[0].sum(), h.groups[1].sum()));
  CHECK(alpha_tilde(h, 1).value == doctest::Approx(2 * ab));
}

TEST_CASE("commutator trotter number") {
  CHECK(comm_trotter_number(0.0, 2, 1.0, 1e-3) == 1);
  CHECK(comm_trotter_number(16.0, 1, 1.0, 1e-2) == 1600);
  long r1 = comm_trotter_number(3.0, 2, 1.0, 1e-2), r4 = comm_trotter_number(3.0, 2, 1.0, 0.25e-2);
  CHECK(static_cast<double>(r4) / r1 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("tight low-order bounds") {
  CHECK(tight_low_order_bound(grouped({P("ZI"), P("IZ")}), 0.1, 1).value == 0.0);
  auto xz = grouped({P("X"), P("Z")});
  CHECK(tight_low_order_bound(xz, 0.1, 1).value == doctest::Approx(0.01));
  CHECK(tight_low_order_bound(xz, 0.1, 2).value == doctest::Approx(5.0e-4));
  for (int p : {1, 2})
    CHECK(empirical_error(xz, formula_for_order(p, 2), 0.1, 1) <= tight_low_order_bound(xz, 0.1, p).value);
}

TEST_CASE("fourth-order coefficient tables") {
  const auto& two = fourth_order_two_term();
  CHECK(two.size() == 8);
  bool found = false;
  for (const auto& e : two)
    if (e.pattern == std::array<int, 5>{1, 1, 1, 1, 0}) {
      CHECK(e.coeff == 0.0284);
      found = true;
    }
  CHECK(found);
  CHECK(three_term_coefficient(3, 3, 3, 3, 2) == 0.0628);
  CHECK(three_term_coefficient(2, 2, 2, 2, 1) == 0.0315);
  CHECK(fourth_order_three_term().size() == 81);
}

TEST_CASE("fourth-order bound dominates the error") {
  auto h = grouped({P("XYI") + P("ZIZ") * 0.3, P("IZZ") + P("XIY") * 0.5});
  for (double t : {0.05, 0.1, 0.2}) {
    double b = fourth_order_bound(h, t, NormMode::dense_exact).value;
    CHECK(empirical_error(h, suzuki(4, 2), t, 1) <= b);
  }
  auto h3 = grouped({P("XYI"), P("IZZ") * 0.6, P("YIX") * 0.8});
  CHECK(empirical_error(h3, suzuki(4, 3), 0.1, 1) <= fourth_order_bound(h3, 0.1, NormMode::dense_exact).value);
}

TEST_CASE("norm modes are ordered") {
  auto g = group_terms(heisenberg_chain(6, 3), Grouping::even_odd);
  double dense = fourth_order_bound(g, 1.0, NormMode::dense_exact).value;
  double cluster = fourth_order_bound(g, 1.0, NormMode::cluster).value;
  double coeff = fourth_order_bound(g, 1.0, NormMode::coeff_1norm).value;
  CHECK(dense <= cluster * (1 + 1e-12));
  CHECK(cluster <= coeff * (1 + 1e-12));
  auto w = chain_fourth_order_bound(*heisenberg_chain(6, 3).fields, Grouping::even_odd, 1.0, NormMode::cluster);
  CHECK(w.value == doctest::Approx(cluster).epsilon(1e-10));
}

TEST_CASE("counting bound") {
  LatticeTermTensor t;
  t.k = 2;
  t.entries[{0, 1}] = 1.0;
  CHECK(counting_bound_klocal(t, 1) == doctest::Approx(8.0));
  CHECK(counting_bound_klocal(t, 2) == doctest::Approx(96.0));
}

TEST_CASE("bound trotter number") {
  CHECK(bound_trotter_number([](double) { return 0.0; }, 1.0, 1e-3) == 1);
  long r = bound_trotter_number(2.0, 2, 1.0, 1e-3);
  CHECK(r * 2.0 * std::pow(1.0 / r, 3) <= 1e-3);
  CHECK((r - 1) * 2.0 * std::pow(1.0 / (r - 1), 3) > 1e-3);
}

TEST_CASE("norm mode names") {
  CHECK(parse_norm_mode("dense") == NormMode::dense_exact);
  CHECK(parse_norm_mode("coeff") == NormMode::coeff_1norm);
  CHECK(parse_norm_mode("cluster") == NormMode::cluster);
  CHECK_THROWS(parse_norm_mode("bogus"));
}
