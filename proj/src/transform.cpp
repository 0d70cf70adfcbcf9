#include "groupft/transform.hpp"

#include <algorithm>
#include <cmath>

namespace groupft {

double plancherel_norm_sq(const OperatorField& field) {
  double s = 0.0;
  for (const auto& e : field.entries) s += e.weight * e.matrix.squaredNorm();
  return s;
}

double trace_class_norm(const OperatorField& field) {
  double s = 0.0;
  for (const auto& e : field.entries) s += e.weight * schatten_norm(e.matrix, 1.0);
  return s;
}

double field_lq_norm(const OperatorField& field, double q) {
  if (std::isinf(q)) {
    double m = 0.0;
    for (const auto& e : field.entries) m = std::max(m, operator_norm(e.matrix));
    return m;
  }
  double s = 0.0;
  for (const auto& e : field.entries) s += e.weight * std::pow(schatten_norm(e.matrix, q), q);
  return std::pow(s, 1.0 / q);
}

OperatorField gram_field(const OperatorField& field) {
  OperatorField out;
  out.entries.reserve(field.entries.size());
  for (const auto& e : field.entries) out.entries.push_back({e.irrep, e.weight, e.matrix.adjoint() * e.matrix});
  return out;
}

GroupFunction<FiniteGroup> convolve(const GroupFunction<FiniteGroup>& f, const GroupFunction<FiniteGroup>& g) {
  detail::require_same(f.group(), g.group());
  const FiniteGroup& grp = f.group();
  const std::size_t n = grp.order();
  std::vector<Complex> out(n, Complex(0.0));
  for (std::size_t q = 0; q < n; ++q) {
    if (f[q] == 0.0) continue;
    const std::size_t qinv = grp.inverse(q);
    for (std::size_t p = 0; p < n; ++p) out[p] += grp.haar_weight(q) * f[q] * g[grp.multiply(qinv, p)];
  }
  return GroupFunction<FiniteGroup>(grp, std::move(out));
}

double convolution_theorem_defect(const GroupFunction<FiniteGroup>& f, const GroupFunction<FiniteGroup>& g) {
  detail::require_same(f.group(), g.group());
  const auto lhs = fourier_function(convolve(f, g));
  const auto fh = fourier_function(f);
  const auto gh = fourier_function(g);
  double worst = 0.0;
  for (std::size_t k = 0; k < lhs.entries.size(); ++k) {
    worst = std::max(worst, operator_norm(lhs.entries[k].matrix - fh.entries[k].matrix * gh.entries[k].matrix));
  }
  return worst;
}

GroupFunction<FiniteGroup> approx_identity(const FiniteGroup& g, double eps) {
  if (!(eps > 0.0)) throw DomainError("approx_identity: ε must be positive");
  std::vector<Complex> v(g.order(), Complex(0.0));
  v[g.identity()] = 1.0;
  return GroupFunction<FiniteGroup>(g, std::move(v));
}

GroupFunction<HeisenbergGroup> approx_identity(const HeisenbergGroup& g, double eps) {
  if (!(eps > 0.0)) throw DomainError("approx_identity: ε must be positive");
  auto tri = [eps](double s) { return std::max(0.0, 1.0 - std::abs(s) / eps); };
  std::vector<Complex> v(g.haar_size(), Complex(0.0));
  const long kx = std::min(g.x_half(), static_cast<long>(std::ceil(eps / g.x_step())));
  const long ky = std::min(g.y_half(), static_cast<long>(std::ceil(eps / g.y_step())));
  const long kt = std::min(g.t_half(), static_cast<long>(std::ceil(eps / g.t_step())));
  double mass = 0.0;
  std::size_t support = 0;
  for (long it = -kt; it <= kt; ++it)
    for (long iy = -ky; iy <= ky; ++iy)
      for (long ix = -kx; ix <= kx; ++ix) {
        const HPoint p = g.lattice_point(ix, iy, it);
        const double val = tri(p.x) * tri(p.y) * tri(p.t);
        if (val <= 0.0) continue;
        const std::size_t i = g.haar_index(ix, iy, it);
        v[i] = val;
        mass += g.haar_weight(i) * val;
        ++support;
      }
  if (support == 0 || !(mass > 0.0)) {
    throw DomainError("approx_identity: ε = " + std::to_string(eps) +
                      " is below the Haar lattice resolution; refine the grid");
  }
  for (auto& z : v) z /= mass;
  return GroupFunction<HeisenbergGroup>(g, std::move(v));
}

}  // namespace groupft
