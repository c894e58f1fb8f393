#include <doctest.h>

#include "globop/collections.hpp"

using namespace globop;

TEST_CASE("C^0 cell counts at D=3: 1, 2, 3, 4") {
  Collection c0 = build_C0(3);
  CHECK(c0.gens(0).size() == 1);
  CHECK(c0.gens(1).size() == 2);
  CHECK(c0.gens(2).size() == 3);
  CHECK(c0.gens(3).size() == 4);
}

TEST_CASE("C^0 boundary data matches the table") {
  Collection c0 = build_C0(3);
  const Generator& mu12 = c0.at(2, "mu_1^2");
  CHECK(mu12.src == "u_1");
  CHECK(mu12.tgt == "u_1");
  const Generator& mu02 = c0.at(2, "mu_0^2");
  CHECK(mu02.src == "mu_0^1");
  const Generator& mu01 = c0.at(1, "mu_0^1");
  CHECK(mu01.src == "u_0");
  CHECK(mu01.arity == glue(color_globe(1, 1), color_globe(1, 1), 0));
  CHECK(mu01.coarity == 1);
  // lambda^0(1(2)) = u_2.
  CHECK(c0.point(1, 2).name == "u_2");
}

TEST_CASE("C doubles C^0 with the v copy in color 2") {
  Collection c = build_C(3);
  Collection c0 = build_C0(3);
  for (int k = 0; k <= 3; ++k) CHECK(c.gens(k).size() == 2 * c0.gens(k).size());
  const Generator& v01 = c.at(1, "v_0^1");
  CHECK(v01.arity == glue(color_globe(2, 1), color_globe(2, 1), 0));
  CHECK(v01.coarity == 2);
  CHECK(c.point(2, 1).name == "v_1");
}

TEST_CASE("realized C restricted to color 1 matches realized C^0") {
  Collection c = build_C(3);
  PointedTGraph pc = c.realize();
  CHECK(validate_pointed(pc).ok());
  Collection c0 = build_C0(3);
  for (int k = 0; k <= 3; ++k) {
    size_t count = 0;
    for (const auto& g : c.gens(k))
      if (g.coarity == 1) ++count;
    CHECK(count == c0.gens(k).size());
  }
}

TEST_CASE("C^2 at dim 1 has the 7 listed cells") {
  Collection c2 = build_Cn(2, 3);
  REQUIRE(c2.gens(1).size() == 7);
  for (const char* name :
       {"u_1", "mu_0^1", "v_1", "v_0^1", "F^1", "H^1", "tau"})
    CHECK(c2.has(1, name));
  const Generator& tau = c2.at(1, "tau");
  CHECK(tau.src == "F^0");
  CHECK(tau.tgt == "H^0");
  CHECK(tau.arity == degenerate(color_globe(1, 0), 1));
  CHECK(tau.coarity == 2);
}

TEST_CASE("C^1 adds exactly the functor symbols") {
  Collection c1 = build_Cn(1, 3);
  const Generator& f2 = c1.at(2, "F^2");
  CHECK(f2.src == "F^1");
  CHECK(f2.arity == color_globe(1, 2));
  CHECK(f2.coarity == 2);
}

TEST_CASE("C^3 has the higher-cell symbols with the stated boundaries") {
  Collection c3 = build_Cn(3, 3);
  const Generator& xi = c3.at(3, "xi_3");
  CHECK(xi.src == "alpha_2");
  CHECK(xi.tgt == "beta_2");
  CHECK(xi.arity == degenerate(color_globe(1, 0), 3));
  CHECK(xi.coarity == 2);
  const Generator& a1 = c3.at(1, "alpha_1");
  CHECK(a1.src == "alpha_0^0");
  CHECK(a1.tgt == "beta_0^0");
  const Generator& a2 = c3.at(2, "alpha_2");
  CHECK(a2.src == "alpha_1");
  CHECK(a2.tgt == "beta_1");
  CHECK(c3.has(3, "alpha_0^3"));
  CHECK_THROWS_AS(build_Cn(3, 2), std::invalid_argument);
}

TEST_CASE("every built collection realizes a valid pointed T-graph") {
  for (int n : {0, 1, 2, 3, 4}) {
    Collection c = build_Cn(n, 4);
    CHECK(validate_pointed(c.realize()).ok());
  }
}

TEST_CASE("delta and kappa follow the section tables") {
  int D = 3;
  CoglobularMap d10 = delta(0, D), k10 = kappa(0, D);
  CHECK(d10("mu_0^1") == "mu_0^1");
  CHECK(d10("u_2") == "u_2");
  CHECK(k10("mu_0^1") == "v_0^1");
  CHECK(k10("u_2") == "v_2");
  CHECK(k10("mu_1^2") == "v_1^2");

  CoglobularMap d21 = delta(1, D), k21 = kappa(1, D);
  CHECK(d21("F^2") == "F^2");
  CHECK(k21("F^2") == "H^2");
  CHECK(k21("v_0^1") == "v_0^1");

  CoglobularMap d32 = delta(2, D), k32 = kappa(2, D);
  CHECK(d32("tau") == "alpha_1");
  CHECK(k32("tau") == "beta_1");
  CHECK(d32("F^1") == "alpha_0^1");
  CHECK(d32("H^1") == "beta_0^1");
  CHECK(k32("H^1") == "beta_0^1");

  CoglobularMap d43 = delta(3, D), k43 = kappa(3, D);
  CHECK(d43("xi_3") == "alpha_3");
  CHECK(k43("xi_3") == "beta_3");
  CHECK(d43("alpha_1") == "alpha_1");
}

TEST_CASE("composed coglobular maps agree on the examples") {
  int D = 3;
  CoglobularMap k10 = kappa(0, D);
  CoglobularMap d21 = delta(1, D), k21 = kappa(1, D);
  CoglobularMap d32 = delta(2, D), k32 = kappa(2, D);
  // delta_3^2 . delta_2^1 (F^m) = alpha_0^m = kappa_3^2 . delta_2^1 (F^m)
  CHECK(d32(d21("F^1")) == "alpha_0^1");
  CHECK(k32(d21("F^1")) == "alpha_0^1");
  // delta_2^1 . kappa_1^0 (u_m) = v_m = kappa_2^1 . kappa_1^0 (u_m)
  CHECK(d21(k10("u_1")) == "v_1");
  CHECK(k21(k10("u_1")) == "v_1");
}

TEST_CASE("full coglobular suite up to n = 4") {
  Report r = check_coglobular(4, 6);
  INFO(r.to_string());
  CHECK(r.ok());
}
