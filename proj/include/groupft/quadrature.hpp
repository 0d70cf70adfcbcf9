#pragma once

// One-dimensional quadrature rules and the λ-grids that discretize
// integrals over the Heisenberg dual.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace groupft {

enum class QuadratureRule { GaussLegendre, Midpoint, Trapezoid };

QuadratureRule parse_rule(std::string_view name);
std::string rule_name(QuadratureRule rule);

struct QuadratureNode {
  double x = 0.0;
  double w = 0.0;
};

/// n-point Gauss–Legendre rule on [-1, 1].
std::vector<QuadratureNode> gauss_legendre(std::size_t n);

/// count nodes on [a, b]. Gauss–Legendre is applied in panels of four nodes
/// (the last panel takes the remainder); midpoint and trapezoid are the usual
/// composite rules.
std::vector<QuadratureNode> composite_rule(double a, double b, std::size_t count, QuadratureRule rule);

/// (2π)^{-2}·|λ|, the Plancherel density of the three-dimensional Heisenberg
/// group. Throws DomainError at λ = 0.
double plancherel_density(double lambda);

struct LambdaNode {
  double lambda = 0.0;
  double quad_weight = 0.0;

  double plancherel_weight() const;
};

struct LambdaGrid {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  QuadratureRule rule = QuadratureRule::GaussLegendre;
  std::vector<LambdaNode> nodes;  // negative half first, then positive

  double integrate_density() const;
};

/// count nodes in total, half on [λ_min, λ_max] and the mirror image on
/// [−λ_max, −λ_min]. Requires 0 < λ_min < λ_max and an even count ≥ 2.
LambdaGrid make_lambda_grid(double lambda_min, double lambda_max, std::size_t count,
                            QuadratureRule rule = QuadratureRule::GaussLegendre);

/// A sampled dual with unit quadrature weights, used to probe individual
/// representations.
LambdaGrid explicit_lambda_grid(const std::vector<double>& lambdas);

}  // namespace groupft
