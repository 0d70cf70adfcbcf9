#pragma once

// Named, reportable certifications of the transform identities, the two
// operator lemmas, density recovery and the difference-set pipeline.
//
// Composite checks (several sub-metrics with their own tolerances) report
// metric = max(sub_metric / sub_tolerance) against tolerance 1; the raw
// sub-metrics are kept in the context.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "groupft/distance_set.hpp"
#include "groupft/finite_group.hpp"
#include "groupft/heisenberg.hpp"
#include "groupft/random.hpp"
#include "groupft/report.hpp"
#include "groupft/transform.hpp"

namespace groupft {

struct Tolerances {
  double exact = 1e-10;            // finite identities, inversion, recovery
  double transform = 1e-10;        // Plancherel / inversion / recovery on this backend
  double opnorm = 1e-10;           // ‖f̂(χ)‖_op ≤ ‖f‖₁ slack
  double identity_final = 1e-10;   // approximate identity, final defect
  double factorization = 1e-10;    // ‖μ̂_D − μ̂*μ̂‖
  double s1_budget = 1e-10;        // relative, S₁ budget vs Plancherel norm
  double mass = 1e-10;             // relative, μ_D(G) vs μ(G)²
  double hausdorff_young = 1e-9;
  double dominating = 1e-9;
  double density = 1e-9;           // oracle agreement, symmetry, nonnegativity
  json to_json() const;
  /// Every field set to tol.
  static Tolerances uniform(double tol);
};

Tolerances default_tolerances(const FiniteGroup& g);
Tolerances default_tolerances(const HeisenbergGroup& g);

struct GaussianWidths {
  double x = 2.0;
  double y = 0.5;
  double t = 0.45;
};

/// exp(−x²/2σx² − y²/2σy² − t²/2σt²) on the Haar lattice.
GroupFunction<HeisenbergGroup> gaussian_bump(const HeisenbergGroup& g, const GaussianWidths& w = {});

/// Random complex values, real and imaginary parts uniform on [−1, 1).
GroupFunction<FiniteGroup> random_function(const FiniteGroup& g, Rng& rng);
/// Random nonnegative values uniform on [0, 1).
GroupFunction<FiniteGroup> random_density(const FiniteGroup& g, Rng& rng);

// Transform identities ------------------------------------------------------

/// max over trials of |Σρ‖f̂‖²_{S₂} − ‖f‖²| / ‖f‖² for random f.
CheckResult check_plancherel(const FiniteGroup& g, std::size_t trials, std::uint64_t seed, double tol);
/// Same defect for a given f (the Gaussian bump by default in suites).
CheckResult check_plancherel(const HeisenbergGroup& g, const GroupFunction<HeisenbergGroup>& f, double tol);
/// max over trials and p of |invert(f̂, p) − f(p)|.
CheckResult check_inversion(const FiniteGroup& g, std::size_t trials, std::uint64_t seed, double tol);
/// max |invert(f̂, p) − f(p)| / max|f| over interior lattice points.
CheckResult check_inversion(const HeisenbergGroup& g, const GroupFunction<HeisenbergGroup>& f, double tol);
/// max over trial pairs of ‖(f*g)^(χ) − f̂(χ)ĝ(χ)‖_op.
CheckResult check_convolution(const FiniteGroup& g, std::size_t trials, std::uint64_t seed, double tol);
/// max over p, trials of ‖f̂‖_{L^{p*}(S_{p*})} − ‖f‖_{L^p}.
CheckResult check_hausdorff_young(const FiniteGroup& g, const std::vector<double>& p_list, std::size_t trials,
                                  std::uint64_t seed, double tol);

// Lemmas ----------------------------------------------------------------------

/// max over trials and χ of ‖f̂(χ)‖_op − ‖f‖₁.
CheckResult check_lemma_opnorm(const FiniteGroup& g, std::size_t trials, std::uint64_t seed, double tol);
/// Random f supported on the lattice box |x|, |y|, |t| ≤ 1/2.
CheckResult check_lemma_opnorm(const HeisenbergGroup& g, std::size_t trials, std::uint64_t seed, double tol);

/// ψ̂_ε → I along a strictly decreasing ε sequence (at least 3 terms).
/// Finite groups: operator-norm defect over every irrep.
CheckResult check_lemma_identity(const FiniteGroup& g, const std::vector<double>& eps, double tol);
/// Heisenberg: max over the given dual items and sampled Gaussian vectors φ
/// of ‖(ψ̂_ε(λ) − I)φ‖. Passes when each defect is at most 1.1× the previous
/// one and the last is ≤ tol. Operator-norm defects go to the context.
CheckResult check_lemma_identity(const HeisenbergGroup& g, const std::vector<double>& eps,
                                 const std::vector<std::size_t>& irreps, double tol);

// Density recovery ----------------------------------------------------------

/// μ = density·dp, recovered f = invert(μ̂) on the Haar points, metric
/// ‖f − density‖₂ / ‖density‖₂.
template <GroupBackend G>
CheckResult check_theorem3_part1(const GroupFunction<G>& density, double tol) {
  const G& g = density.group();
  const auto mu = DiscreteMeasure<G>::from_density(density);
  const auto f = invert_on_haar(g, fourier_measure(mu));
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    num += g.haar_weight(i) * std::norm(f[i] - density[i]);
    den += g.haar_weight(i) * std::norm(density[i]);
  }
  if (!(den > 0.0)) throw DomainError("density recovery needs a nonzero density");
  return make_check("theorem3_density_recovery", std::sqrt(num / den), tol,
                    json{{"atoms", mu.atoms().size()}, {"mass", mu.total_mass()}});
}

/// Continuous density h = Σρ tr(μ̂ χ*) of a measure. Sub-metrics:
/// agreement with a known density (when given), the dominating bound
/// |tr(ψ̂_ε μ̂ χ(p)*)| ≤ ‖ψ_ε‖₁‖μ̂(χ)‖_{S₁} on sampled (ε, χ, p), and on the
/// Heisenberg group the continuity ratios of nested increments.
CheckResult check_theorem3_part2(const FiniteGroup& g, const DiscreteMeasure<FiniteGroup>& m,
                                 const std::optional<GroupFunction<FiniteGroup>>& known, const Tolerances& tol);
CheckResult check_theorem3_part2(const HeisenbergGroup& g, const DiscreteMeasure<HeisenbergGroup>& m,
                                 const Tolerances& tol);

// Difference sets ------------------------------------------------------------

/// Full pipeline on one measure. Sub-metrics: mass identity, factorization
/// defect, S₁ budget vs Plancherel norm, and on finite groups agreement of h
/// with the pair count, symmetry h(p) = h(p⁻¹) and nonnegativity. A missing
/// positivity witness makes the metric infinite.
CheckResult check_theorem4(const FiniteGroup& g, const DiscreteMeasure<FiniteGroup>& m, const Tolerances& tol);
CheckResult check_theorem4(const HeisenbergGroup& g, const DiscreteMeasure<HeisenbergGroup>& m,
                           const Tolerances& tol);

/// The same sub-metrics for an already computed report.
CheckResult assess_difference_report(const FiniteGroup& g, const DiscreteMeasure<FiniteGroup>& m,
                                    const DifferenceReport<FiniteGroup>& r, const Tolerances& tol);
CheckResult assess_difference_report(const HeisenbergGroup& g, const DiscreteMeasure<HeisenbergGroup>& m,
                                    const DifferenceReport<HeisenbergGroup>& r, const Tolerances& tol);

/// Every nonempty A with |A| ≤ 6 when |G| ≤ 6, otherwise `random_sets`
/// seeded random sets of size 1..6. One aggregated check.
CheckResult check_theorem4_sets(const FiniteGroup& g, std::size_t random_sets, std::uint64_t seed,
                                const Tolerances& tol);

// Suites ----------------------------------------------------------------------

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t heisenberg_trials = 3;
  std::optional<double> tol;  // replaces every backend default when set
  std::vector<double> eps = {1.0, 0.5, 0.25, 0.125};
  std::vector<double> identity_lambdas = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
  std::vector<double> hausdorff_young_p = {1.0, 4.0 / 3.0, 2.0};
  /// Difference sets on a finite group; empty selects the enumeration above.
  std::vector<std::vector<std::size_t>> sets;
  HPoint box_lo{0.0, 0.0, 0.0};
  HPoint box_hi{1.0, 1.0, 1.0};
  GaussianWidths bump{};
  json to_json() const;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// validate, plancherel, inversion, convolution, hausdorff-young,
/// lemma-opnorm, lemma-identity, theorem3, theorem4 or all. Convolution and
/// Hausdorff–Young are finite-only; `all` skips them on the Heisenberg group.
VerificationReport run_suite(const FiniteGroup& g, std::string_view suite, const SuiteOptions& opts = {});
VerificationReport run_suite(const HeisenbergGroup& g, std::string_view suite, const SuiteOptions& opts = {});

}  // namespace groupft
