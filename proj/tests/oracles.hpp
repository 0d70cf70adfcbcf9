#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the library's transform, pushforward or inversion code.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "groupft/finite_group.hpp"
#include "groupft/heisenberg.hpp"

namespace oracle {

using groupft::CMatrix;
using groupft::Complex;

inline CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  CMatrix c = CMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

/// One-sided Jacobi SVD from Eigen, a different algorithm from the library's.
inline std::vector<double> singular_values(const CMatrix& a) {
  Eigen::JacobiSVD<CMatrix> svd(a);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

inline double op_norm(const CMatrix& a) { return singular_values(a).front(); }

inline Complex root_of_unity(long k, long n) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

/// ℤ_n transform by direct character sums: f̂(k) = Σ_m f(m) e^{2πikm/n}.
inline std::vector<Complex> cyclic_transform(const std::vector<Complex>& f) {
  const long n = static_cast<long>(f.size());
  std::vector<Complex> out(f.size());
  for (long k = 0; k < n; ++k)
    for (long m = 0; m < n; ++m) out[k] += f[m] * root_of_unity(k * m, n);
  return out;
}

/// Σ_q f(q) g(q⁻¹p) straight from the Cayley table.
inline std::vector<Complex> convolve(const groupft::FiniteGroup& g, const std::vector<Complex>& f,
                                     const std::vector<Complex>& h) {
  std::vector<Complex> out(g.order());
  for (std::size_t p = 0; p < g.order(); ++p)
    for (std::size_t q = 0; q < g.order(); ++q) out[p] += f[q] * h[g.multiply(g.inverse(q), p)];
  return out;
}

/// h(p) = Σ_{a,b} w_a w_b [b⁻¹a = p]: the difference-map double loop.
inline std::vector<double> autocorrelation(const groupft::FiniteGroup& g, const std::vector<std::size_t>& atoms,
                                           const std::vector<double>& weights) {
  std::vector<double> h(g.order(), 0.0);
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      h[g.multiply(g.inverse(atoms[j]), atoms[i])] += weights[i] * weights[j];
    }
  return h;
}

/// π_λ(p) written out entrywise for a lattice y = s·Δξ:
/// [π(p)]_{a,b} = e^{iλ(t − xy/2)} e^{iλxξ_a} [a − b ≡ s mod N].
inline CMatrix schrodinger_lattice(double lambda, std::size_t n, double half_width, const groupft::HPoint& p) {
  const double dxi = 2.0 * half_width / static_cast<double>(n);
  const long s = std::lround(p.y / dxi);
  const long nn = static_cast<long>(n);
  CMatrix m = CMatrix::Zero(nn, nn);
  for (long a = 0; a < nn; ++a) {
    const double xi = -half_width + static_cast<double>(a) * dxi;
    const long b = ((a - s) % nn + nn) % nn;
    m(a, b) = std::polar(1.0, lambda * (p.t - 0.5 * p.x * p.y) + lambda * p.x * xi);
  }
  return m;
}

}  // namespace oracle
