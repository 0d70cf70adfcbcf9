#pragma once

// Discretized backend for the Heisenberg group H¹ = ℝ² × ℝ.
//
// Group law (polarized): (x,y,t)(x',y',t') = (x+x', y+y', t+t' + (xy' − x'y)/2).
// Schrödinger representation on functions of ξ:
//   π_λ(x,y,t)φ(ξ) = e^{iλ(t − xy/2)} e^{iλxξ} φ(ξ − y),
// realised on N uniform samples of [−L, L) with a band-limited circular
// shift, so every π_λ(p) is exactly unitary. The law above is the one that
// makes this formula a homomorphism.
//
// Haar measure is sampled on a lattice with spacings (h_x, Δξ, h_t), where
// Δξ = 2L/N is the carrier spacing: y-steps on the lattice are then exact
// permutations of the carrier, which keeps the discrete transform an
// isometry up to quadrature and truncation error.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "groupft/group.hpp"
#include "groupft/linalg.hpp"
#include "groupft/quadrature.hpp"
#include "groupft/report.hpp"

namespace groupft {

struct HPoint {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;

  auto operator<=>(const HPoint&) const = default;
};

HPoint hgroup_multiply(const HPoint& p, const HPoint& q);
HPoint hgroup_inverse(const HPoint& p);

class SchrodingerRep {
 public:
  SchrodingerRep(double lambda, std::size_t grid_size, double half_width);

  double lambda() const { return lambda_; }
  std::size_t size() const { return n_; }
  double half_width() const { return half_width_; }
  double spacing() const { return 2.0 * half_width_ / static_cast<double>(n_); }
  double carrier_point(std::size_t a) const { return -half_width_ + static_cast<double>(a) * spacing(); }

  /// c with T_y[a, b] = c[(a − b) mod N]. Lattice shifts (y a multiple of
  /// the spacing) give an exact unit vector.
  CVector shift_kernel(double y) const;

  CMatrix evaluate(const HPoint& p) const;
  /// π_λ(p)·v without forming the matrix.
  CVector apply(const HPoint& p, const CVector& v) const;

 private:
  void check_point(const HPoint& p) const;

  double lambda_;
  std::size_t n_;
  double half_width_;
};

CMatrix rep_evaluate(const SchrodingerRep& rep, const HPoint& p);

struct HeisenbergConfig {
  std::size_t grid_n = 256;
  double half_width = 10.0;
  double lambda_min = 0.05;
  double lambda_max = 6.0;
  std::size_t lambda_nodes = 200;
  QuadratureRule rule = QuadratureRule::GaussLegendre;
  // Haar lattice. The y spacing is the carrier spacing 2L/N.
  double x_step = 0.05;
  double t_step = 0.125;
  double x_extent = 5.0;
  double y_extent = 2.0;
  double t_extent = 2.0;
  double snap_tolerance = 1e-9;

  json to_json() const;
  static HeisenbergConfig from_json(const json& doc);
};

struct LatticeIndex {
  long ix = 0;
  long iy = 0;
  long it = 0;
};

class HeisenbergGroup {
 public:
  using Element = HPoint;

  explicit HeisenbergGroup(HeisenbergConfig config = {});
  /// Same Haar lattice with an explicitly given sampled dual.
  HeisenbergGroup(HeisenbergConfig config, LambdaGrid dual);

  const HeisenbergConfig& config() const { return config_; }
  const LambdaGrid& dual() const { return dual_; }
  const SchrodingerRep& rep(std::size_t k) const { return reps_[k]; }

  Element identity() const { return {}; }
  Element multiply(const Element& p, const Element& q) const { return hgroup_multiply(p, q); }
  Element inverse(const Element& p) const { return hgroup_inverse(p); }
  /// Snaps x and y onto the lattice when within the snap tolerance.
  Element canonical(const Element& p) const;

  // Haar lattice, x fastest, then y, then t.
  double x_step() const { return config_.x_step; }
  double y_step() const { return 2.0 * config_.half_width / static_cast<double>(config_.grid_n); }
  double t_step() const { return config_.t_step; }
  long x_half() const { return x_half_; }
  long y_half() const { return y_half_; }
  long t_half() const { return t_half_; }
  std::size_t nx() const { return static_cast<std::size_t>(2 * x_half_ + 1); }
  std::size_t ny() const { return static_cast<std::size_t>(2 * y_half_ + 1); }
  std::size_t nt() const { return static_cast<std::size_t>(2 * t_half_ + 1); }
  HPoint lattice_point(long ix, long iy, long it) const;
  std::size_t haar_index(long ix, long iy, long it) const;
  LatticeIndex haar_coords(std::size_t i) const;
  bool on_lattice(long ix, long iy, long it) const;

  std::size_t haar_size() const { return nx() * ny() * nt(); }
  Element haar_point(std::size_t i) const;
  double haar_weight(std::size_t) const { return x_step() * y_step() * t_step(); }

  std::size_t dual_size() const { return reps_.size(); }
  std::size_t irrep_dim(std::size_t) const { return config_.grid_n; }
  double plancherel_weight(std::size_t k) const { return dual_.nodes[k].plancherel_weight(); }
  std::string irrep_label(std::size_t k) const;
  CMatrix evaluate(std::size_t k, const Element& p) const { return reps_[k].evaluate(p); }

  /// Σ w·π_λ(p) for every λ. Atom x and y must lie on the lattice (within the
  /// snap tolerance); t is arbitrary. Cost per λ is one (rows × cols × N)
  /// matrix product where rows/cols count the distinct y/x lattice values.
  std::vector<CMatrix> integrate(std::span<const WeightedPoint<Element>> atoms) const;

  /// tr(m·π_λ(p)*) for any p with |y| < 2L.
  Complex pair(std::size_t k, const CMatrix& m, const Element& p) const;

  /// Σ_k weight_k·tr(F_k·π_k(p)*) at every Haar lattice point, batched.
  std::vector<Complex> invert_on_haar(const OperatorField& field) const;

  /// Rows of m whose carrier point satisfies |ξ| ≤ L/2. Circular wrap-around
  /// only perturbs rows near ±L, so interior rows carry the exact algebra.
  CMatrix interior_rows(const CMatrix& m) const;

  json describe() const;

 private:
  HeisenbergConfig config_;
  LambdaGrid dual_;
  std::vector<SchrodingerRep> reps_;
  long x_half_ = 0, y_half_ = 0, t_half_ = 0;
};

struct HeisenbergValidationOptions {
  double tol = 1e-10;
  double homomorphism_tol = 1e-6;  // on centered Gaussian vectors
  std::size_t sampled_lambdas = 3;
};

VerificationReport validate_group(const HeisenbergGroup& g, const HeisenbergValidationOptions& opts = {});

/// Unit-norm sampled Gaussian e^{−|λ|(ξ−c)²/2} on the carrier of rep.
CVector gaussian_vector(const SchrodingerRep& rep, double center = 0.0, double width_scale = 1.0);

}  // namespace groupft
