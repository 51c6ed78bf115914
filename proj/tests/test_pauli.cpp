#include "doctest.h"
#include "helpers.hpp"
#include "trotter/dense.hpp"
#include "trotter/pauli.hpp"

using namespace trotter;
using testing_helpers::P;

namespace {
const cplx I1{0.0, 1.0};

bool same(const PauliSum& a, const PauliSum& b) { return (a - b).empty(); }
}  // namespace

TEST_CASE("multiply") {
  PauliTerm x{2, 1, 0, 1.0}, id{2, 0, 0, 1.0};
  auto r = multiply(x, id);
  CHECK(r.x == 1);
  CHECK(r.z == 0);
  CHECK(r.coeff == cplx(1.0));

  PauliTerm x1{1, 1, 0, 1.0}, z1{1, 0, 1, 1.0};
  auto y = multiply(x1, z1);
  CHECK(y.x == 1);
  CHECK(y.z == 1);
  CHECK(std::abs(y.coeff - (-I1)) < 1e-15);

  PauliTerm x2{1, 1, 0, 2.0}, x3{1, 1, 0, 3.0};
  auto six = multiply(x2, x3);
  CHECK(six.x == 0);
  CHECK(six.z == 0);
  CHECK(std::abs(six.coeff - cplx(6.0)) < 1e-15);
}

TEST_CASE("commutator") {
  CHECK(commutator(P("ZI"), P("IZ")).empty());
  CHECK(same(commutator(P("X"), P("Z")), P("Y") * (-2.0 * I1)));
  CHECK(same(commutator(P("XX"), P("ZI")), P("YX") * (-2.0 * I1)));
  // against dense matrices
  auto a = P("XX") + P("ZI") * 0.5, b = P("YZ") + P("IX");
  Eigen::MatrixXcd da = to_dense(a), db = to_dense(b);
  CHECK((to_dense(commutator(a, b)) - (da * db - db * da)).norm() < 1e-12);
}

TEST_CASE("nested commutator") {
  CHECK(same(nested_commutator({P("X"), P("X"), P("Z")}), P("Z") * 4.0));
  CHECK(nested_commutator({P("X"), P("Z"), P("Z")}).empty());
  CHECK(same(nested_commutator({P("Z"), P("Z"), P("X")}), P("X") * 4.0));
}

TEST_CASE("coefficient one norm and support") {
  CHECK(coefficient_one_norm(PauliSum(2)) == 0.0);
  CHECK(coefficient_one_norm(P("X") * 2.0 + P("Z") * 3.0) == doctest::Approx(5.0));
  CHECK(coefficient_one_norm(P("X") + P("Z")) == doctest::Approx(2.0));
  CHECK(spectral_norm(to_dense(P("X") + P("Z"))) == doctest::Approx(std::sqrt(2.0)));

  CHECK(support(PauliSum(5)).empty());
  CHECK(support(P("IIIXX") + P("IIIZI")) == std::vector<int>{3, 4});
  auto bond = P("IXXI") + P("IYYI") + P("IZZI");
  CHECK(support(bond) == std::vector<int>{1, 2});
}

TEST_CASE("to_dense") {
  CHECK(to_dense(PauliSum::identity(1)).isApprox(Eigen::MatrixXcd::Identity(2, 2)));
  Eigen::MatrixXcd y(2, 2);
  y << 0, -I1, I1, 0;
  CHECK(to_dense(P("Y")).isApprox(y));
  // X on qubit 0 plus Z on qubit 1 has eigenvalues {+-1 +- 1}
  auto w = eigvals_hermitian(to_dense(P("XI") + P("IZ")));
  REQUIRE(w.size() == 4);
  CHECK(w[0] == doctest::Approx(2.0));
  CHECK(w[1] == doctest::Approx(0.0));
  CHECK(w[2] == doctest::Approx(0.0));
  CHECK(w[3] == doctest::Approx(-2.0));
}

TEST_CASE("parse and hermiticity") {
  auto s = PauliSum::parse("1.5*XIZY");
  CHECK(s.n() == 4);
  CHECK(s.size() == 1);
  CHECK(is_hermitian(s));
  CHECK_FALSE(is_hermitian(P("X") * I1));
  CHECK_THROWS(PauliSum::parse("XQ"));
}
