#include <cmath>
#include <cstdio>

#include "doctest.h"
#include "helpers.hpp"
#include "trotter/io.hpp"
#include "trotter/resource_planner.hpp"

using namespace trotter;

namespace {
PlanParams base() {
  PlanParams q;
  q.n = 100;
  q.t = 10;
  q.eps = 1e-2;
  q.p = 4;
  return q;
}
}  // namespace

TEST_CASE("k-local plans") {
  auto q = base();
  q.induced_norm = 0;
  q.one_norm = 0;
  CHECK(plan(PlanModel::k_local, q).r == 1);
  q.induced_norm = 3;
  q.one_norm = 50;
  auto p = plan(PlanModel::k_local, q);
  CHECK(p.r == static_cast<long>(std::ceil(3 * std::pow(50, 0.25) * std::pow(10, 1.25) / std::pow(1e-2, 0.25))));
  CHECK(p.gates >= p.r);
}

TEST_CASE("power-law plans") {
  PlanParams q;
  q.n = 1000;
  q.t = 1000;
  q.eps = 1;
  q.p = 4;
  q.alpha = 4;
  q.d = 1;
  CHECK(plan(PlanModel::power_law_truncated, q).ell == 100);
  CHECK(plan(PlanModel::power_law, q).ell == 100);
  // alpha in (d, 2d]: gate exponent 2 in n (+1/p)
  q.alpha = 1.5;
  CHECK(plan(PlanModel::power_law, q).gate_n_exponent == doctest::Approx(2.25));
  // continuity at alpha = d
  q.alpha = 1 - 1e-9;
  double below = plan(PlanModel::power_law, q).gate_n_exponent;
  q.alpha = 1;
  CHECK(plan(PlanModel::power_law, q).gate_n_exponent == doctest::Approx(below).epsilon(1e-6));
  // alpha -> infinity: the truncated exponent meets the quasilocal one
  q.alpha = 1e4;
  CHECK(plan(PlanModel::power_law_truncated, q).gate_n_exponent ==
        doctest::Approx(plan(PlanModel::quasilocal, q).gate_n_exponent).epsilon(0.01));
  q.alpha = 0.5;
  CHECK_THROWS_AS(plan(PlanModel::power_law_truncated, q), input_error);
}

TEST_CASE("clustered plans") {
  auto q = base();
  q.p = 1;
  q.h_b = 2;
  q.cc = 3;
  auto p = plan(PlanModel::clustered, q);
  CHECK(p.r == static_cast<long>(std::ceil(2 * 100 / 1e-2)));
  CHECK(p.gate_t_exponent == doctest::Approx(2.0));
  CHECK(p.runtime_exponent == doctest::Approx(3.0 * p.r));
  q.p = 4;
  CHECK(plan(PlanModel::clustered, q).gate_t_exponent < 2.0);
}

TEST_CASE("plans are monotone in t and 1/eps") {
  for (auto m : {PlanModel::electronic_structure, PlanModel::power_law, PlanModel::power_law_truncated,
                 PlanModel::quasilocal, PlanModel::clustered}) {
    auto q = base();
    q.alpha = 3;
    q.h_b = 1;
    long r0 = plan(m, q).r;
    q.t *= 2;
    long r1 = plan(m, q).r;
    q.eps /= 2;
    long r2 = plan(m, q).r;
    CHECK(r1 >= r0);
    CHECK(r2 >= r1);
  }
  CHECK(plan_csv({plan(PlanModel::electronic_structure, base())}).size() == 2);
  CHECK_THROWS_AS(parse_plan_model("nope"), input_error);
}

TEST_CASE("hamiltonian JSON round trip") {
  auto h = group_terms(heisenberg_chain(5, 2), Grouping::even_odd);
  auto j = hamiltonian_to_json(h);
  CHECK(j["schema"] == schema_version);
  auto back = hamiltonian_from_json(j);
  REQUIRE(back.gamma() == h.gamma());
  for (std::size_t g = 0; g < h.gamma(); ++g) {
    CHECK(back.groups[g].label == h.groups[g].label);
    REQUIRE(back.groups[g].terms.size() == h.groups[g].terms.size());
    for (std::size_t k = 0; k < h.groups[g].terms.size(); ++k)
      CHECK((back.groups[g].terms[k] - h.groups[g].terms[k]).empty());
  }
  CHECK(back.fields == h.fields);
  REQUIRE(back.geometry.has_value());
  CHECK(std::isinf(back.geometry->alpha));

  auto pl = power_law_heisenberg(4, 2.5, 1);
  auto pj = hamiltonian_from_json(hamiltonian_to_json(pl));
  CHECK(pj.geometry->alpha == 2.5);

  // entries without "term" are elementary on their own
  json raw = json::parse(R"({"version":1,"n":2,"groups":[{"label":"A","terms":[
      {"coeff":[1,0],"pauli":"XX"},{"coeff":[0.5,0],"pauli":"ZI"}]}],"geometry":null,"fields":null})");
  auto r = hamiltonian_from_json(raw);
  CHECK(r.groups[0].terms.size() == 2);
  CHECK_FALSE(r.geometry.has_value());
  json bad = json::parse(R"({"version":1,"n":2,"groups":[{"terms":[{"coeff":[1,0],"pauli":"XXX"}]}]})");
  CHECK_THROWS_AS(hamiltonian_from_json(bad), input_error);
  CHECK_THROWS_AS(hamiltonian_from_json(json::parse(R"({"version":2})")), input_error);
}

TEST_CASE("report JSON carries the schema") {
  BoundReport r;
  r.value = 1.5;
  r.per_term.push_back({"[A,B]", 0.5, 3.0});
  auto j = bound_report_to_json(r);
  CHECK(j["schema"] == schema_version);
  CHECK(j["per_term"].size() == 1);
  CHECK(plan_to_json(plan(PlanModel::quasilocal, base()))["schema"] == schema_version);
  CHECK(format_real(0.1) == "0.10000000000000001");
}
