#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "trotter/dense.hpp"
#include "trotter/product_formula.hpp"

using namespace trotter;
using testing_helpers::grouped;
using testing_helpers::P;

TEST_CASE("lie-trotter") {
  auto s = lie_trotter(2);
  auto seq = s.sequence();
  REQUIRE(seq.size() == 2);
  CHECK(seq[0].group == 0);
  CHECK(seq[1].group == 1);
  // the first factor acts first: S = e^{-itH2} e^{-itH1}
  auto h = grouped({P("X"), P("Z")});
  double t = 0.3;
  DenseOperator expect = expm_i_hermitian(to_dense(P("Z")), t) * expm_i_hermitian(to_dense(P("X")), t);
  CHECK((evaluate(s, h, t) - expect).norm() < 1e-12);

  auto one = grouped({P("XY") + P("ZZ")});
  CHECK((evaluate(lie_trotter(1), one, 0.7) - exact_evolution(one, 0.7)).norm() < 1e-12);
  CHECK(lie_trotter(3).sequence().size() == 3);
}

TEST_CASE("suzuki") {
  auto s2 = suzuki(2, 2).sequence();
  REQUIRE(s2.size() == 3);
  CHECK(s2[0].a == doctest::Approx(0.5));
  CHECK(s2[1].a == doctest::Approx(1.0));
  CHECK(s2[2].a == doctest::Approx(0.5));
  CHECK(s2[0].group == s2[2].group);

  double u2 = 1.0 / (4.0 - std::cbrt(4.0));
  CHECK(std::abs(suzuki_u(2) - u2) < 1e-15);
  CHECK(suzuki_u(2) == doctest::Approx(0.4144908).epsilon(1e-7));
  auto s4 = suzuki(4, 2);
  auto seq = s4.sequence();
  CHECK(seq.size() == 11);
  CHECK(seq.front().a == doctest::Approx(u2 / 2));
  bool found = false;
  for (const auto& e : seq) found = found || std::abs(e.a - (1 - 4 * u2)) < 1e-14;
  CHECK(found);
  CHECK(1 - 4 * u2 == doctest::Approx(-0.6579631).epsilon(1e-7));
  // per-summand coefficients sum to one
  for (int g = 0; g < 2; ++g) {
    double sum = 0;
    for (const auto& e : s4.raw_sequence())
      if (e.group == g) sum += e.a;
    CHECK(sum == doctest::Approx(1.0));
  }
}

TEST_CASE("evaluate") {
  auto h = grouped({P("XI"), P("IZ")});
  CHECK((evaluate(suzuki(4, 2), h, 0.0) - DenseOperator::Identity(4, 4)).norm() < 1e-12);
  CHECK((evaluate(suzuki(4, 2), h, 0.9) - exact_evolution(h, 0.9)).norm() < 1e-12);
  auto nc = grouped({P("X"), P("Z")});
  double err = (evaluate(lie_trotter(2), nc, 0.1) - exact_evolution(nc, 0.1)).norm();
  CHECK(spectral_norm(evaluate(lie_trotter(2), nc, 0.1) - exact_evolution(nc, 0.1)) <= 0.01);
  CHECK(err > 0);
}

TEST_CASE("empirical error") {
  auto h = grouped({P("ZI"), P("IZ")});
  for (long r : {1L, 3L, 10L}) CHECK(empirical_error(h, suzuki(2, 2), 2.0, r) < 1e-12);
  auto nc = grouped({P("XY") + P("ZI") * 0.3, P("ZZ") + P("IX") * 0.5});
  for (int p : {1, 2, 4}) {
    auto s = formula_for_order(p, 2);
    double ratio = empirical_error(nc, s, 0.5, 8) / empirical_error(nc, s, 0.5, 16);
    CHECK(ratio == doctest::Approx(std::pow(2.0, p)).epsilon(0.2));
  }
  auto search = empirical_trotter_number(h, suzuki(2, 2), 1.0, 1e-6);
  CHECK(search.r == 1);
}

TEST_CASE("trotter search is minimal") {
  auto nc = grouped({P("XY") + P("ZI") * 0.3, P("ZZ") + P("IX") * 0.5});
  auto s = suzuki(2, 2);
  auto res = empirical_trotter_number(nc, s, 2.0, 1e-4);
  CHECK(empirical_error(nc, s, 2.0, res.r) <= 1e-4);
  CHECK(empirical_error(nc, s, 2.0, res.r - 1) > 1e-4);
}

TEST_CASE("error operators") {
  auto h = grouped({P("ZX"), P("XI") + P("IY")});
  auto s = suzuki(2, 2);
  auto zero = error_operators(h, s, 0.0);
  CHECK(zero.additive.norm() < 1e-12);
  CHECK(zero.multiplicative.norm() < 1e-12);
  auto e = error_operators(h, s, 0.4);
  CHECK(spectral_norm(e.additive) == doctest::Approx(spectral_norm(e.multiplicative)).epsilon(1e-10));

  auto zx = grouped({P("Z"), P("X")});
  auto im = error_operators(zx, s, 0.3, TimeMode::imaginary_time);
  DenseOperator eth = exact_evolution(zx, 0.3, TimeMode::imaginary_time);
  CHECK((im.additive - eth * im.multiplicative).norm() < 1e-10);
  CHECK(spectral_norm(im.multiplicative) > 0);
}

TEST_CASE("exponentiated error") {
  auto h = grouped({P("X"), P("Z")});
  CHECK(exponentiated_error_sample(h, lie_trotter(2), 0.0).norm() < 1e-12);
  // Lie-Trotter: E(tau) = e^{tau B'} A' e^{-tau B'} - A' with A' = -iA, B' = -iB
  double tau = 0.2;
  const cplx mi{0.0, -1.0};
  DenseOperator a = mi * to_dense(P("X")), b = to_dense(P("Z"));
  DenseOperator eb = expm_i_hermitian(b, tau);
  DenseOperator expect = eb * a * eb.adjoint() - a;
  CHECK((exponentiated_error_sample(h, lie_trotter(2), tau) - expect).norm() < 1e-12);

  auto nc = grouped({P("XY") + P("ZI") * 0.3, P("ZZ") + P("IX") * 0.5});
  for (int p : {1, 2}) {
    auto s = formula_for_order(p, 2);
    double r1 = spectral_norm(exponentiated_error_sample(nc, s, 1e-2)) / std::pow(1e-2, p);
    double r2 = spectral_norm(exponentiated_error_sample(nc, s, 1e-3)) / std::pow(1e-3, p);
    CHECK(r1 / r2 == doctest::Approx(1.0).epsilon(0.5));
  }
}

TEST_CASE("order conditions") {
  auto nc = grouped({P("XYII") + P("ZIIZ") * 0.3 + P("IXXI") * 0.4, P("IZZI") + P("IIXY") * 0.5 + P("YIIX") * 0.2});
  for (int p : {1, 2, 4}) {
    auto rep = order_condition_check(nc, formula_for_order(p, 2));
    CHECK(rep.slope_additive == doctest::Approx(p + 1).epsilon(0.1));
    CHECK(rep.ok());
  }
}

TEST_CASE("schedule validation") {
  auto s = suzuki(2, 3);
  s.perms[0][0] = s.perms[0][1];
  CHECK_THROWS(s.validate());
  CHECK_THROWS(suzuki(3, 2));
}
