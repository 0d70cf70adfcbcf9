#pragma once

// Group Fourier transform of functions and measures, Plancherel functionals,
// trace inversion and approximate identities.
//
//   f̂(χ) = Σᵢ wᵢ f(pᵢ) χ(pᵢ)          (Haar-weighted sum)
//   μ̂(χ) = Σ_atoms weight · χ(p)
//   f(p)  = Σ_χ ρ(χ) tr(f̂(χ) χ(p)*)

#include <cmath>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "groupft/errors.hpp"
#include "groupft/finite_group.hpp"
#include "groupft/group.hpp"
#include "groupft/heisenberg.hpp"
#include "groupft/linalg.hpp"

namespace groupft {

template <GroupBackend G>
class GroupFunction {
 public:
  GroupFunction(const G& group, std::vector<Complex> values) : group_(&group), values_(std::move(values)) {
    if (values_.size() != group.haar_size()) {
      throw DimensionError("function has " + std::to_string(values_.size()) + " values, backend has " +
                           std::to_string(group.haar_size()) + " Haar points");
    }
    for (const auto& v : values_) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("function value is not finite");
    }
  }

  static GroupFunction zero(const G& group) {
    return GroupFunction(group, std::vector<Complex>(group.haar_size(), Complex(0.0)));
  }

  const G& group() const { return *group_; }
  std::span<const Complex> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Complex& operator[](std::size_t i) const { return values_[i]; }

  /// ∫|f|^p dp as a Haar-weighted sum, then the 1/p power.
  double lp_norm(double p) const {
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      s += group_->haar_weight(i) * std::pow(std::abs(values_[i]), p);
    }
    return std::pow(s, 1.0 / p);
  }
  double l1_norm() const { return lp_norm(1.0); }
  double l2_norm() const { return lp_norm(2.0); }

 private:
  const G* group_;
  std::vector<Complex> values_;
};

template <GroupBackend G>
struct MeasureAtom {
  typename G::Element element;
  double weight = 0.0;
};

/// Finitely many nonnegative weighted atoms: a compactly supported Radon
/// measure at desk scale.
template <GroupBackend G>
class DiscreteMeasure {
 public:
  DiscreteMeasure(const G& group, std::vector<MeasureAtom<G>> atoms) : group_(&group), atoms_(std::move(atoms)) {
    for (const auto& a : atoms_) {
      if (!(a.weight >= 0.0) || !std::isfinite(a.weight)) {
        throw DomainError("measure weights must be finite and nonnegative");
      }
    }
  }

  /// The measure g·dp: one atom per Haar point with weight wᵢ·g(pᵢ).
  static DiscreteMeasure from_density(const GroupFunction<G>& density) {
    std::vector<MeasureAtom<G>> atoms;
    const G& g = density.group();
    for (std::size_t i = 0; i < density.size(); ++i) {
      const Complex v = density[i];
      if (v.imag() != 0.0 || v.real() < 0.0) throw DomainError("density must be real and nonnegative");
      if (v.real() > 0.0) atoms.push_back({g.haar_point(i), g.haar_weight(i) * v.real()});
    }
    return DiscreteMeasure(g, std::move(atoms));
  }

  const G& group() const { return *group_; }
  const std::vector<MeasureAtom<G>>& atoms() const { return atoms_; }

  double total_mass() const {
    double s = 0.0;
    for (const auto& a : atoms_) s += a.weight;
    return s;
  }

 private:
  const G* group_;
  std::vector<MeasureAtom<G>> atoms_;
};

namespace detail {

template <GroupBackend G>
OperatorField make_field(const G& g, std::vector<CMatrix> matrices) {
  OperatorField field;
  field.entries.reserve(matrices.size());
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    field.entries.push_back({k, g.plancherel_weight(k), std::move(matrices[k])});
  }
  return field;
}

template <GroupBackend G>
void require_same(const G& a, const G& b) {
  if (&a != &b) throw BackendMismatch("operands live on different group backends");
}

}  // namespace detail

template <GroupBackend G>
OperatorField fourier_function(const GroupFunction<G>& f) {
  const G& g = f.group();
  std::vector<WeightedPoint<typename G::Element>> atoms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != 0.0) atoms.push_back({g.haar_point(i), g.haar_weight(i) * f[i]});
  }
  return detail::make_field(g, g.integrate(atoms));
}

template <GroupBackend G>
OperatorField fourier_measure(const DiscreteMeasure<G>& m) {
  const G& g = m.group();
  std::vector<WeightedPoint<typename G::Element>> atoms;
  atoms.reserve(m.atoms().size());
  for (const auto& a : m.atoms()) atoms.push_back({a.element, Complex(a.weight)});
  return detail::make_field(g, g.integrate(atoms));
}

/// Σ ρ(χ)·‖F(χ)‖²_{S₂}
double plancherel_norm_sq(const OperatorField& field);
/// Σ ρ(χ)·‖F(χ)‖_{S₁}
double trace_class_norm(const OperatorField& field);
/// (Σ ρ(χ)·‖F(χ)‖^q_{S_q})^{1/q}; q = ∞ gives max_χ ‖F(χ)‖_op.
double field_lq_norm(const OperatorField& field, double q);

/// χ ↦ F(χ)*·F(χ)
OperatorField gram_field(const OperatorField& field);

/// Σ ρ(χ)·tr(F(χ)·χ(p)*). Works for any field on the backend's dual, not
/// only for transforms.
template <GroupBackend G>
Complex invert(const G& g, const OperatorField& field, const typename G::Element& p) {
  Complex s = 0.0;
  for (const auto& e : field.entries) {
    if (e.irrep >= g.dual_size()) throw DimensionError("invert: field entry outside the backend's dual");
    s += e.weight * g.pair(e.irrep, e.matrix, p);
  }
  return s;
}

/// Inversion at every Haar point, batched where the backend supports it.
template <GroupBackend G>
GroupFunction<G> invert_on_haar(const G& g, const OperatorField& field) {
  if constexpr (requires { g.invert_on_haar(field); }) {
    return GroupFunction<G>(g, g.invert_on_haar(field));
  } else {
    std::vector<Complex> values(g.haar_size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = invert(g, field, g.haar_point(i));
    return GroupFunction<G>(g, std::move(values));
  }
}

// Finite-group convolution ----------------------------------------------------

/// (f*g)(p) = Σ_q f(q)·g(q⁻¹p), so that (f*g)^ = f̂·ĝ for f̂ = Σ f(p)χ(p).
GroupFunction<FiniteGroup> convolve(const GroupFunction<FiniteGroup>& f, const GroupFunction<FiniteGroup>& g);

/// max_χ ‖(f*g)^(χ) − f̂(χ)ĝ(χ)‖_op
double convolution_theorem_defect(const GroupFunction<FiniteGroup>& f, const GroupFunction<FiniteGroup>& g);

// Approximate identities ------------------------------------------------------

/// Finite groups: δ_e for every ε.
GroupFunction<FiniteGroup> approx_identity(const FiniteGroup& g, double eps);

/// Heisenberg: product of triangular bumps supported on [−ε, ε]³, sampled on
/// the Haar lattice and normalised so the sampled ∫|ψ_ε| is 1. Throws when no
/// lattice point other than the support boundary lies inside the support.
GroupFunction<HeisenbergGroup> approx_identity(const HeisenbergGroup& g, double eps);

}  // namespace groupft
