#include <doctest.h>

#include <cmath>
#include <numbers>

#include "groupft/errors.hpp"
#include "groupft/quadrature.hpp"

using namespace groupft;

TEST_CASE("Gauss-Legendre integrates degree 2n-1 exactly") {
  for (std::size_t n : {1, 2, 3, 4, 7}) {
    const auto rule = gauss_legendre(n);
    REQUIRE(rule.size() == n);
    for (std::size_t deg = 0; deg <= 2 * n - 1; ++deg) {
      double s = 0.0;
      for (const auto& q : rule) s += q.w * std::pow(q.x, static_cast<double>(deg));
      const double exact = deg % 2 ? 0.0 : 2.0 / static_cast<double>(deg + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-14).scale(1.0));
    }
  }
}

TEST_CASE("composite rules") {
  // ∫_1^3 x³ dx = 20
  for (auto rule : {QuadratureRule::GaussLegendre, QuadratureRule::Midpoint, QuadratureRule::Trapezoid}) {
    const auto nodes = composite_rule(1.0, 3.0, 2001, rule);
    CHECK(nodes.size() == 2001);
    double s = 0.0, w = 0.0;
    for (const auto& q : nodes) {
      s += q.w * q.x * q.x * q.x;
      w += q.w;
    }
    CHECK(w == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(s == doctest::Approx(20.0).epsilon(1e-5));
  }
  // Gauss panels with a remainder are still exact on cubics.
  double s = 0.0;
  for (const auto& q : composite_rule(1.0, 3.0, 10, QuadratureRule::GaussLegendre)) s += q.w * q.x * q.x * q.x;
  CHECK(s == doctest::Approx(20.0).epsilon(1e-13));
  CHECK_THROWS_AS(composite_rule(1.0, 1.0, 4, QuadratureRule::Midpoint), DomainError);
  CHECK_THROWS_AS(composite_rule(0.0, 1.0, 1, QuadratureRule::Trapezoid), DomainError);
}

TEST_CASE("rule names round trip") {
  for (auto rule : {QuadratureRule::GaussLegendre, QuadratureRule::Midpoint, QuadratureRule::Trapezoid}) {
    CHECK(parse_rule(rule_name(rule)) == rule);
  }
  CHECK(parse_rule("gl") == QuadratureRule::GaussLegendre);
  CHECK_THROWS_AS(parse_rule("simpson"), DomainError);
}

TEST_CASE("Plancherel density") {
  CHECK(plancherel_density(2.0) == doctest::Approx(2.0 / (4.0 * std::numbers::pi * std::numbers::pi)));
  CHECK(plancherel_density(-2.0) == plancherel_density(2.0));
  CHECK_THROWS_AS(plancherel_density(0.0), DomainError);
}

TEST_CASE("lambda grid: total count, mirrored halves, density integral") {
  const auto grid = make_lambda_grid(0.05, 6.0, 200);
  REQUIRE(grid.nodes.size() == 200);
  for (std::size_t i = 0; i < 100; ++i) {
    CHECK(grid.nodes[i].lambda < 0.0);
    CHECK(grid.nodes[i].lambda == doctest::Approx(-grid.nodes[199 - i].lambda));
    CHECK(grid.nodes[i].plancherel_weight() > 0.0);
  }
  // 2·∫_{a}^{b} λ/(4π²) dλ = (b² − a²)/(4π²)
  const double exact = (36.0 - 0.0025) / (4.0 * std::numbers::pi * std::numbers::pi);
  CHECK(grid.integrate_density() == doctest::Approx(exact).epsilon(1e-12));

  CHECK_THROWS_AS(make_lambda_grid(0.05, 6.0, 7), DomainError);
  CHECK_THROWS_AS(make_lambda_grid(0.05, 6.0, 0), DomainError);
  CHECK_THROWS_AS(make_lambda_grid(0.0, 6.0, 10), DomainError);
  CHECK_THROWS_AS(make_lambda_grid(2.0, 1.0, 10), DomainError);
}

TEST_CASE("explicit lambda grid") {
  const auto grid = explicit_lambda_grid({-1.0, 0.5, 2.0});
  REQUIRE(grid.nodes.size() == 3);
  CHECK(grid.nodes[1].quad_weight == 1.0);
  CHECK_THROWS_AS(explicit_lambda_grid({}), DomainError);
  CHECK_THROWS_AS(explicit_lambda_grid({0.0}), DomainError);
}
