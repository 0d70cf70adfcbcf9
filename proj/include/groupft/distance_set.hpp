#pragma once

// Difference sets of measures.
//
// μ_D = D♯(μ×μ) is the image of μ×μ under D(p, q) = q⁻¹p. Its transform
// factorizes as μ̂_D = μ̂*μ̂, so ∫‖μ̂_D‖_{S₁}dρ = ∫‖μ̂‖²_{S₂}dρ is finite and the
// trace-inversion formula gives μ_D a continuous density h. h(e) = Σ w² > 0,
// so h stays positive on a neighbourhood of e inside D(spt μ).

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "groupft/finite_group.hpp"
#include "groupft/heisenberg.hpp"
#include "groupft/report.hpp"
#include "groupft/transform.hpp"

namespace groupft {

template <GroupBackend G>
DiscreteMeasure<G> difference_pushforward(const DiscreteMeasure<G>& m) {
  const G& g = m.group();
  const auto& atoms = m.atoms();
  std::vector<MeasureAtom<G>> out;
  out.reserve(atoms.size() * atoms.size());
  for (const auto& q : atoms) {
    const auto qinv = g.inverse(q.element);
    for (const auto& p : atoms) out.push_back({g.canonical(g.multiply(qinv, p.element)), p.weight * q.weight});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.element < b.element; });
  std::vector<MeasureAtom<G>> merged;
  for (const auto& a : out) {
    if (!merged.empty() && merged.back().element == a.element) {
      merged.back().weight += a.weight;
    } else {
      merged.push_back(a);
    }
  }
  return DiscreteMeasure<G>(g, std::move(merged));
}

/// Norm used for the factorization defect: the operator norm on finite
/// groups; on the Heisenberg carrier the operator norm of the interior rows.
inline double factorization_norm(const FiniteGroup&, const CMatrix& e) { return operator_norm(e); }
inline double factorization_norm(const HeisenbergGroup& g, const CMatrix& e) {
  return operator_norm(g.interior_rows(e));
}

/// max_χ ‖μ̂_D(χ) − μ̂(χ)*μ̂(χ)‖ for precomputed fields.
template <GroupBackend G>
double factorization_defect(const G& g, const OperatorField& mu_hat, const OperatorField& mud_hat) {
  double worst = 0.0;
  for (std::size_t k = 0; k < mu_hat.entries.size(); ++k) {
    const CMatrix& a = mu_hat.entries[k].matrix;
    worst = std::max(worst, factorization_norm(g, mud_hat.entries[k].matrix - a.adjoint() * a));
  }
  return worst;
}

template <GroupBackend G>
double factorization_defect(const DiscreteMeasure<G>& m) {
  return factorization_defect(m.group(), fourier_measure(m), fourier_measure(difference_pushforward(m)));
}

/// ∫‖μ̂_D(χ)‖_{S₁} dρ(χ)
template <GroupBackend G>
double s1_budget(const DiscreteMeasure<G>& m) {
  return trace_class_norm(fourier_measure(difference_pushforward(m)));
}

struct DifferenceOptions {
  /// Allowed |Im h| relative to the S₁ budget (the bound on |h|).
  double imag_tolerance = 1e-9;
  /// Heisenberg witness threshold θ = ratio·h(e).
  double threshold_ratio = 1e-6;
  /// Finite witness threshold (absolute).
  double finite_threshold = 1e-9;
};

/// h(p) = Σ ρ(χ)·tr(μ̂_D(χ)χ(p)*), real part after the residue check.
template <GroupBackend G>
double density_from_field(const G& g, const OperatorField& mud_hat, const typename G::Element& p,
                          double imag_limit) {
  const Complex h = invert(g, mud_hat, p);
  if (std::abs(h.imag()) > imag_limit) {
    throw DomainError("difference density has imaginary residue " + std::to_string(std::abs(h.imag())) +
                      " above " + std::to_string(imag_limit) + ": backend is inconsistent");
  }
  return h.real();
}

template <GroupBackend G>
double difference_density(const DiscreteMeasure<G>& m, const typename G::Element& p,
                          const DifferenceOptions& opts = {}) {
  const auto mud_hat = fourier_measure(difference_pushforward(m));
  const double scale = std::max(1.0, trace_class_norm(mud_hat));
  return density_from_field(m.group(), mud_hat, p, opts.imag_tolerance * scale);
}

template <GroupBackend G>
struct PositivityWitness {
  typename G::Element point{};
  double density = 0.0;
  double threshold = 0.0;
  /// Haar-point indices of the positive neighbourhood around point.
  std::vector<std::size_t> neighborhood;
};

template <GroupBackend G>
struct DifferenceReport {
  double mu_mass = 0.0;
  double muD_mass = 0.0;
  double factorization_defect = 0.0;
  double s1_budget = 0.0;
  double plancherel_sq = 0.0;  // ∫‖μ̂‖²_{S₂}dρ
  double max_imag_residue = 0.0;
  double min_density = 0.0;
  double density_at_identity = 0.0;
  std::size_t muD_atoms = 0;
  /// h at every Haar point of the backend, in canonical order.
  std::vector<double> density;
  std::optional<PositivityWitness<G>> witness;
};

/// Finite: the witness is e and its neighbourhood every element with h above
/// the finite threshold (the support of μ_D). Heisenberg: the lattice cluster
/// connected to e on which h > θ.
std::optional<PositivityWitness<FiniteGroup>> positivity_witness(const FiniteGroup& g, const std::vector<double>& h,
                                                                 const DifferenceOptions& opts = {});
std::optional<PositivityWitness<HeisenbergGroup>> positivity_witness(const HeisenbergGroup& g,
                                                                     const std::vector<double>& h,
                                                                     const DifferenceOptions& opts = {});

/// Runs the whole pipeline once: transforms, pushforward, factorization,
/// S₁ budget, density on the Haar points and positivity witness.
template <GroupBackend G>
DifferenceReport<G> analyze_difference_set(const DiscreteMeasure<G>& m, const DifferenceOptions& opts = {}) {
  if (!(m.total_mass() > 0.0)) throw DomainError("difference set analysis needs a measure of positive mass");
  const G& g = m.group();
  DifferenceReport<G> r;
  const auto mud = difference_pushforward(m);
  const auto mu_hat = fourier_measure(m);
  const auto mud_hat = fourier_measure(mud);
  r.mu_mass = m.total_mass();
  r.muD_mass = mud.total_mass();
  r.muD_atoms = mud.atoms().size();
  r.factorization_defect = factorization_defect(g, mu_hat, mud_hat);
  r.s1_budget = trace_class_norm(mud_hat);
  r.plancherel_sq = plancherel_norm_sq(mu_hat);

  const auto h = invert_on_haar(g, mud_hat);
  r.density.resize(h.size());
  r.min_density = kInf;
  for (std::size_t i = 0; i < h.size(); ++i) {
    r.density[i] = h[i].real();
    r.max_imag_residue = std::max(r.max_imag_residue, std::abs(h[i].imag()));
    r.min_density = std::min(r.min_density, r.density[i]);
  }
  const double limit = opts.imag_tolerance * std::max(1.0, r.s1_budget);
  if (r.max_imag_residue > limit) {
    throw DomainError("difference density has imaginary residue " + std::to_string(r.max_imag_residue) +
                      " above " + std::to_string(limit) + ": backend is inconsistent");
  }
  r.density_at_identity = density_from_field(g, mud_hat, g.identity(), limit);
  r.witness = positivity_witness(g, r.density, opts);
  return r;
}

/// Indicator of a set of element indices (counting Haar measure). Rejects
/// empty sets, repeated and out-of-range elements.
DiscreteMeasure<FiniteGroup> indicator_measure(const FiniteGroup& g, const std::vector<std::size_t>& set);
/// Haar-weighted indicator of the lattice points inside the closed box
/// [lo, hi]. Rejects inverted boxes and boxes with no lattice point.
DiscreteMeasure<HeisenbergGroup> box_measure(const HeisenbergGroup& g, const HPoint& lo, const HPoint& hi);

json element_to_json(const FiniteGroup& g, std::size_t p);
json element_to_json(const HeisenbergGroup& g, const HPoint& p);

template <GroupBackend G>
json to_json(const G& g, const DifferenceReport<G>& r) {
  json out{{"version", kReportVersion},
           {"backend", g.describe()},
           {"mu_mass", r.mu_mass},
           {"muD_mass", r.muD_mass},
           {"muD_atoms", r.muD_atoms},
           {"factorization_defect", r.factorization_defect},
           {"s1_budget", r.s1_budget},
           {"plancherel_norm_sq", r.plancherel_sq},
           {"max_imag_residue", r.max_imag_residue},
           {"min_density", r.min_density},
           {"density_at_identity", r.density_at_identity}};
  if (r.witness) {
    json hood = json::array();
    for (std::size_t i : r.witness->neighborhood) hood.push_back(element_to_json(g, g.haar_point(i)));
    out["positivity_witness"] = json{{"point", element_to_json(g, r.witness->point)},
                                     {"density", r.witness->density},
                                     {"threshold", r.witness->threshold},
                                     {"neighborhood_size", r.witness->neighborhood.size()},
                                     {"neighborhood", std::move(hood)}};
  } else {
    out["positivity_witness"] = nullptr;
  }
  return out;
}

/// CSV of (element, h) at every Haar point; header row first.
std::string density_csv(const FiniteGroup& g, const std::vector<double>& h);
std::string density_csv(const HeisenbergGroup& g, const std::vector<double>& h);

}  // namespace groupft
