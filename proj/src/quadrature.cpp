#include "groupft/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "groupft/errors.hpp"

namespace groupft {

QuadratureRule parse_rule(std::string_view name) {
  if (name == "gauss-legendre" || name == "gl") return QuadratureRule::GaussLegendre;
  if (name == "midpoint") return QuadratureRule::Midpoint;
  if (name == "trapezoid") return QuadratureRule::Trapezoid;
  throw DomainError("unknown quadrature rule '" + std::string(name) + "'");
}

std::string rule_name(QuadratureRule rule) {
  switch (rule) {
    case QuadratureRule::GaussLegendre: return "gauss-legendre";
    case QuadratureRule::Midpoint: return "midpoint";
    case QuadratureRule::Trapezoid: return "trapezoid";
  }
  return "unknown";
}

std::vector<QuadratureNode> gauss_legendre(std::size_t n) {
  if (n == 0) throw DomainError("gauss_legendre: need at least one node");
  if (n == 1) return {{0.0, 2.0}};
  std::vector<QuadratureNode> nodes(n);
  const double nd = static_cast<double>(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
        p0 = p1;
        p1 = p2;
      }
      dp = nd * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = {-x, w};
    nodes[n - 1 - i] = {x, w};
  }
  return nodes;
}

std::vector<QuadratureNode> composite_rule(double a, double b, std::size_t count, QuadratureRule rule) {
  if (!(b > a)) throw DomainError("composite_rule: empty interval");
  if (count == 0) throw DomainError("composite_rule: need at least one node");
  std::vector<QuadratureNode> out;
  out.reserve(count);
  const double width = b - a;
  switch (rule) {
    case QuadratureRule::Midpoint: {
      const double h = width / static_cast<double>(count);
      for (std::size_t i = 0; i < count; ++i) out.push_back({a + (static_cast<double>(i) + 0.5) * h, h});
      break;
    }
    case QuadratureRule::Trapezoid: {
      if (count < 2) throw DomainError("composite_rule: trapezoid needs at least two nodes");
      const double h = width / static_cast<double>(count - 1);
      for (std::size_t i = 0; i < count; ++i) {
        const double w = (i == 0 || i + 1 == count) ? 0.5 * h : h;
        out.push_back({a + static_cast<double>(i) * h, w});
      }
      break;
    }
    case QuadratureRule::GaussLegendre: {
      constexpr std::size_t kPanelOrder = 4;
      const std::size_t panels = (count + kPanelOrder - 1) / kPanelOrder;
      const double h = width / static_cast<double>(panels);
      std::size_t remaining = count;
      for (std::size_t p = 0; p < panels; ++p) {
        const std::size_t order = std::min(kPanelOrder, remaining);
        remaining -= order;
        const double lo = a + static_cast<double>(p) * h;
        for (const auto& node : gauss_legendre(order)) {
          out.push_back({lo + 0.5 * h * (node.x + 1.0), 0.5 * h * node.w});
        }
      }
      break;
    }
  }
  return out;
}

double plancherel_density(double lambda) {
  if (lambda == 0.0 || !std::isfinite(lambda)) {
    throw DomainError("plancherel_density: λ must be finite and nonzero");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  return std::abs(lambda) / (two_pi * two_pi);
}

double LambdaNode::plancherel_weight() const { return quad_weight * plancherel_density(lambda); }

double LambdaGrid::integrate_density() const {
  double s = 0.0;
  for (const auto& n : nodes) s += n.plancherel_weight();
  return s;
}

LambdaGrid make_lambda_grid(double lambda_min, double lambda_max, std::size_t count, QuadratureRule rule) {
  if (!(lambda_min > 0.0) || !(lambda_max > lambda_min) || !std::isfinite(lambda_max)) {
    throw DomainError("make_lambda_grid: need 0 < lambda_min < lambda_max");
  }
  if (count < 2 || count % 2 != 0) {
    throw DomainError("make_lambda_grid: node count must be even and at least 2, got " +
                      std::to_string(count));
  }
  const auto half = composite_rule(lambda_min, lambda_max, count / 2, rule);
  LambdaGrid grid;
  grid.lambda_min = lambda_min;
  grid.lambda_max = lambda_max;
  grid.rule = rule;
  for (auto it = half.rbegin(); it != half.rend(); ++it) grid.nodes.push_back({-it->x, it->w});
  for (const auto& n : half) grid.nodes.push_back({n.x, n.w});
  return grid;
}

LambdaGrid explicit_lambda_grid(const std::vector<double>& lambdas) {
  if (lambdas.empty()) throw DomainError("explicit_lambda_grid: no λ values");
  LambdaGrid grid;
  grid.lambda_min = std::abs(lambdas.front());
  for (double l : lambdas) {
    if (l == 0.0 || !std::isfinite(l)) throw DomainError("explicit_lambda_grid: λ must be nonzero");
    grid.nodes.push_back({l, 1.0});
    grid.lambda_min = std::min(grid.lambda_min, std::abs(l));
    grid.lambda_max = std::max(grid.lambda_max, std::abs(l));
  }
  return grid;
}

}  // namespace groupft
