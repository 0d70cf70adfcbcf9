#include "groupft/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace groupft {

namespace {

// metric = max(sub / tolerance); raw values go into the context.
class Composite {
 public:
  void add(const std::string& name, double value, double tol) {
    subs_[name] = json{{"metric", value}, {"tolerance", tol}};
    const double r = value / tol;
    if (std::isnan(r) || r > worst_) worst_ = r;
  }
  double metric() const { return worst_; }
  const json& subs() const { return subs_; }

 private:
  json subs_ = json::object();
  double worst_ = 0.0;
};

// Largest d[i+1] / (1.1·d[i]); 0/0 counts as 0.
double monotone_ratio(const std::vector<double>& d) {
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i + 1] == 0.0) continue;
    worst = std::max(worst, d[i] == 0.0 ? kInf : d[i + 1] / (1.1 * d[i]));
  }
  return worst;
}

void require_eps_sequence(const std::vector<double>& eps) {
  if (eps.size() < 3) throw DomainError("the ε sequence needs at least 3 terms");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0)) throw DomainError("ε values must be positive");
    if (i > 0 && !(eps[i] < eps[i - 1])) throw DomainError("the ε sequence must be strictly decreasing");
  }
}

double sq_norm(const GroupFunction<FiniteGroup>& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f.group().haar_weight(i) * std::norm(f[i]);
  return s;
}

template <GroupBackend G>
double l2_sq(const GroupFunction<G>& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f.group().haar_weight(i) * std::norm(f[i]);
  return s;
}

double identity_defect(const OperatorField& field) {
  double worst = 0.0;
  for (const auto& e : field.entries) {
    worst = std::max(worst, operator_norm(e.matrix - identity_matrix(e.matrix.rows())));
  }
  return worst;
}

json eps_json(const std::vector<double>& eps) { return json(eps); }

CheckResult failed_check(const std::string& name, const std::string& why, json context) {
  context["error"] = why;
  return make_check(name, kInf, 1.0, std::move(context));
}

// |tr(ψ̂_ε μ̂ χ(p)*)| − ‖ψ_ε‖₁‖μ̂(χ)‖_{S₁}, maximised over the samples.
template <GroupBackend G>
double dominating_excess(const G& g, const OperatorField& mu_hat, const std::vector<double>& eps,
                         const std::vector<std::size_t>& irreps, const std::vector<typename G::Element>& points) {
  double worst = -kInf;
  for (double e : eps) {
    const auto psi = approx_identity(g, e);
    const auto psi_hat = fourier_function(psi);
    const double l1 = psi.l1_norm();
    for (std::size_t k : irreps) {
      const CMatrix& a = mu_hat.entries[k].matrix;
      const double bound = l1 * schatten_norm(a, 1.0);
      const CMatrix prod = psi_hat.entries[k].matrix * a;
      for (const auto& p : points) worst = std::max(worst, std::abs(g.pair(k, prod, p)) - bound);
    }
  }
  return worst;
}

}  // namespace

// Tolerances ------------------------------------------------------------------

json Tolerances::to_json() const {
  return json{{"exact", exact},
              {"transform", transform},
              {"opnorm", opnorm},
              {"identity_final", identity_final},
              {"factorization", factorization},
              {"s1_budget", s1_budget},
              {"mass", mass},
              {"hausdorff_young", hausdorff_young},
              {"dominating", dominating},
              {"density", density}};
}

Tolerances Tolerances::uniform(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerances must be positive");
  return Tolerances{tol, tol, tol, tol, tol, tol, tol, tol, tol, tol};
}

Tolerances default_tolerances(const FiniteGroup&) { return Tolerances{}; }

Tolerances default_tolerances(const HeisenbergGroup&) {
  Tolerances t;
  t.transform = 0.05;
  t.opnorm = 1e-8;
  t.identity_final = 0.1;
  t.factorization = 1e-8;
  t.s1_budget = 0.02;
  return t;
}

// Inputs ------------------------------------------------------------------------

GroupFunction<HeisenbergGroup> gaussian_bump(const HeisenbergGroup& g, const GaussianWidths& w) {
  if (!(w.x > 0.0 && w.y > 0.0 && w.t > 0.0)) throw DomainError("Gaussian widths must be positive");
  std::vector<Complex> v(g.haar_size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const HPoint p = g.haar_point(i);
    v[i] = std::exp(-0.5 * (p.x * p.x / (w.x * w.x) + p.y * p.y / (w.y * w.y) + p.t * p.t / (w.t * w.t)));
  }
  return GroupFunction<HeisenbergGroup>(g, std::move(v));
}

GroupFunction<FiniteGroup> random_function(const FiniteGroup& g, Rng& rng) {
  std::vector<Complex> v(g.order());
  for (auto& z : v) z = rng.complex_uniform();
  return GroupFunction<FiniteGroup>(g, std::move(v));
}

GroupFunction<FiniteGroup> random_density(const FiniteGroup& g, Rng& rng) {
  std::vector<Complex> v(g.order());
  for (auto& z : v) z = rng.uniform();
  return GroupFunction<FiniteGroup>(g, std::move(v));
}

// Transform identities ----------------------------------------------------------

CheckResult check_plancherel(const FiniteGroup& g, std::size_t trials, std::uint64_t seed, double tol) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t n = 0; n < trials; ++n) {
    const auto f = random_function(g, rng);
    const double lhs = sq_norm(f);
    worst = std::max(worst, std::abs(plancherel_norm_sq(fourier_function(f)) - lhs) / lhs);
  }
  return make_check("plancherel_defect", worst, tol, json{{"trials", trials}, {"seed", seed}});
}

CheckResult check_plancherel(const HeisenbergGroup&, const GroupFunction<HeisenbergGroup>& f, double tol) {
  const double lhs = l2_sq(f);
  const double rhs = plancherel_norm_sq(fourier_function(f));
  return make_check("plancherel_defect", std::abs(rhs - lhs) / lhs, tol,
                    json{{"l2_norm_sq", lhs}, {"plancherel_norm_sq", rhs}});
}

CheckResult check_inversion(const FiniteGroup& g, std::size_t trials, std::uint64_t seed, double tol) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t n = 0; n < trials; ++n) {
    const auto f = random_function(g, rng);
    const auto back = invert_on_haar(g, fourier_function(f));
    for (std::size_t p = 0; p < f.size(); ++p) worst = std::max(worst, std::abs(back[p] - f[p]));
  }
  return make_check("inversion_defect", worst, tol,
                    json{{"trials", trials}, {"seed", seed}, {"normalization", "absolute"}});
}

CheckResult check_inversion(const HeisenbergGroup& g, const GroupFunction<HeisenbergGroup>& f, double tol) {
  const auto back = invert_on_haar(g, fourier_function(f));
  const auto& c = g.config();
  double sup = 0.0, worst = 0.0;
  std::size_t interior = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    sup = std::max(sup, std::abs(f[i]));
    const HPoint p = g.haar_point(i);
    if (std::abs(p.x) > 0.5 * c.x_extent || std::abs(p.y) > 0.5 * c.y_extent || std::abs(p.t) > 0.5 * c.t_extent)
      continue;
    ++interior;
    worst = std::max(worst, std::abs(back[i] - f[i]));
  }
  if (!(sup > 0.0)) throw DomainError("inversion check needs a nonzero function");
  return make_check("inversion_defect", worst / sup, tol,
                    json{{"normalization", "relative to max |f|"}, {"interior_points", interior}});
}

CheckResult check_convolution(const FiniteGroup& g, std::size_t trials, std::uint64_t seed, double tol) {
  Rng rng(seed);
  double worst = 0.0;
  for (std::size_t n = 0; n < trials; ++n) {
    const auto a = random_function(g, rng);
    const auto b = random_function(g, rng);
    worst = std::max(worst, convolution_theorem_defect(a, b));
  }
  return make_check("convolution_defect", worst, tol, json{{"trials", trials}, {"seed", seed}});
}

CheckResult check_hausdorff_young(const FiniteGroup& g, const std::vector<double>& p_list, std::size_t trials,
                                  std::uint64_t seed, double tol) {
  for (double p : p_list) {
    if (!(p >= 1.0 && p <= 2.0)) throw DomainError("Hausdorff-Young exponents must lie in [1, 2]");
  }
  Rng rng(seed);
  double worst = -kInf;
  json per_p = json::object();
  for (double p : p_list) {
    const double q = p == 1.0 ? kInf : p / (p - 1.0);
    double excess = -kInf;
    for (std::size_t n = 0; n < trials; ++n) {
      const auto f = random_function(g, rng);
      excess = std::max(excess, field_lq_norm(fourier_function(f), q) - f.lp_norm(p));
    }
    per_p[std::to_string(p)] = excess;
    worst = std::max(worst, excess);
  }
  return make_check("hausdorff_young_excess", worst, tol,
                    json{{"trials", trials}, {"seed", seed}, {"p", p_list}, {"excess_by_p", per_p}});
}

// Lemmas --------------------------------------------------------------------------

CheckResult check_lemma_opnorm(const FiniteGroup& g, std::size_t trials, std::uint64_t seed, double tol) {
  if (trials == 0) throw DomainError("lemma_opnorm needs at least one trial");
  Rng rng(seed);
  double worst = -kInf;
  for (std::size_t n = 0; n < trials; ++n) {
    const auto f = random_function(g, rng);
    const double l1 = f.l1_norm();
    for (const auto& e : fourier_function(f).entries) worst = std::max(worst, operator_norm(e.matrix) - l1);
  }
  return make_check("lemma_opnorm_excess", worst, tol, json{{"trials", trials}, {"seed", seed}});
}

CheckResult check_lemma_opnorm(const HeisenbergGroup& g, std::size_t trials, std::uint64_t seed, double tol) {
  if (trials == 0) throw DomainError("lemma_opnorm needs at least one trial");
  Rng rng(seed);
  const long kx = std::min(g.x_half(), std::lround(0.5 / g.x_step()));
  const long ky = std::min(g.y_half(), std::lround(0.5 / g.y_step()));
  const long kt = std::min(g.t_half(), std::lround(0.5 / g.t_step()));
  double worst = -kInf;
  for (std::size_t n = 0; n < trials; ++n) {
    std::vector<Complex> v(g.haar_size(), Complex(0.0));
    for (long it = -kt; it <= kt; ++it)
      for (long iy = -ky; iy <= ky; ++iy)
        for (long ix = -kx; ix <= kx; ++ix) v[g.haar_index(ix, iy, it)] = rng.complex_uniform();
    const GroupFunction<HeisenbergGroup> f(g, std::move(v));
    const double l1 = f.l1_norm();
    for (const auto& e : fourier_function(f).entries) worst = std::max(worst, operator_norm(e.matrix) - l1);
  }
  return make_check("lemma_opnorm_excess", worst, tol,
                    json{{"trials", trials}, {"seed", seed}, {"support", "lattice box |x|,|y|,|t| <= 1/2"}});
}

CheckResult check_lemma_identity(const FiniteGroup& g, const std::vector<double>& eps, double tol) {
  require_eps_sequence(eps);
  std::vector<double> defects;
  for (double e : eps) defects.push_back(identity_defect(fourier_function(approx_identity(g, e))));
  Composite c;
  c.add("final_defect", defects.back(), tol);
  c.add("monotonicity", monotone_ratio(defects), 1.0);
  return make_check("lemma_identity_defect", c.metric(), 1.0,
                    json{{"eps", eps_json(eps)}, {"operator_defects", defects}, {"subchecks", c.subs()}});
}

CheckResult check_lemma_identity(const HeisenbergGroup& g, const std::vector<double>& eps,
                                 const std::vector<std::size_t>& irreps, double tol) {
  require_eps_sequence(eps);
  if (irreps.empty()) throw DomainError("lemma_identity needs at least one dual item");
  json lambdas = json::array();
  for (std::size_t k : irreps) {
    if (k >= g.dual_size()) throw DimensionError("lemma_identity: dual item outside the backend's dual");
    lambdas.push_back(g.rep(k).lambda());
  }
  std::vector<double> strong, op;
  for (double e : eps) {
    const auto psi_hat = fourier_function(approx_identity(g, e));
    double s = 0.0, o = 0.0;
    for (std::size_t k : irreps) {
      const CMatrix d = psi_hat.entries[k].matrix - identity_matrix(static_cast<Eigen::Index>(g.irrep_dim(k)));
      for (double center : {0.0, 1.0}) s = std::max(s, (d * gaussian_vector(g.rep(k), center)).norm());
      o = std::max(o, operator_norm(d));
    }
    strong.push_back(s);
    op.push_back(o);
  }
  Composite c;
  c.add("final_strong_defect", strong.back(), tol);
  c.add("monotonicity", monotone_ratio(strong), 1.0);
  return make_check("lemma_identity_defect", c.metric(), 1.0,
                    json{{"eps", eps_json(eps)},
                         {"lambdas", lambdas},
                         {"vectors", "gaussians centered at 0 and 1"},
                         {"strong_defects", strong},
                         {"operator_defects", op},
                         {"subchecks", c.subs()}});
}

// Density recovery ------------------------------------------------------------------

CheckResult check_theorem3_part2(const FiniteGroup& g, const DiscreteMeasure<FiniteGroup>& m,
                                 const std::optional<GroupFunction<FiniteGroup>>& known, const Tolerances& tol) {
  const auto mu_hat = fourier_measure(m);
  const auto h = invert_on_haar(g, mu_hat);
  Composite c;
  double imag = 0.0;
  for (std::size_t p = 0; p < h.size(); ++p) imag = std::max(imag, std::abs(h[p].imag()));
  c.add("imaginary_residue", imag, tol.density);
  if (known) {
    double worst = 0.0;
    for (std::size_t p = 0; p < h.size(); ++p) worst = std::max(worst, std::abs(h[p] - (*known)[p]));
    c.add("known_density", worst, tol.exact);
  }
  std::vector<std::size_t> irreps(g.dual_size());
  for (std::size_t k = 0; k < irreps.size(); ++k) irreps[k] = k;
  std::vector<std::size_t> points;
  const std::size_t stride = std::max<std::size_t>(1, g.order() / 64);
  for (std::size_t p = 0; p < g.order(); p += stride) points.push_back(p);
  const std::vector<double> eps{1.0, 0.5, 0.25};
  c.add("dominating_bound", std::max(0.0, dominating_excess(g, mu_hat, eps, irreps, points)), tol.dominating);
  return make_check("theorem3_continuous_density", c.metric(), 1.0,
                    json{{"atoms", m.atoms().size()}, {"sampled_points", points.size()}, {"subchecks", c.subs()}});
}

CheckResult check_theorem3_part2(const HeisenbergGroup& g, const DiscreteMeasure<HeisenbergGroup>& m,
                                 const Tolerances& tol) {
  const auto mu_hat = fourier_measure(m);
  Composite c;

  std::vector<std::size_t> irreps;
  const std::size_t d = g.dual_size();
  const std::size_t want = std::min<std::size_t>(8, d);
  for (std::size_t i = 0; i < want; ++i) irreps.push_back(want == 1 ? 0 : i * (d - 1) / (want - 1));
  const std::vector<HPoint> points{{0.0, 0.0, 0.0}, {0.5, 0.5, 0.5}, {0.3, -0.2, 0.1}, {1.05, 0.37, -0.4}};
  const std::vector<double> eps{1.0, 0.5, 0.25};
  c.add("dominating_bound", std::max(0.0, dominating_excess(g, mu_hat, eps, irreps, points)), tol.dominating);

  // Nested increments |h(p₀ + δu) − h(p₀)| for δ = δ₀, δ₀/2, δ₀/4.
  const std::vector<HPoint> bases{{0.0, 0.0, 0.0}, {0.5, 0.5, 0.5}};
  const double r3 = 1.0 / std::sqrt(3.0);
  const std::vector<HPoint> dirs{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}, {r3, r3, r3}};
  const std::vector<double> deltas{0.2, 0.1, 0.05};
  std::vector<double> increments(deltas.size(), 0.0);
  double imag = 0.0;
  json base_values = json::array();
  for (const auto& b : bases) {
    const Complex hb = invert(g, mu_hat, b);
    imag = std::max(imag, std::abs(hb.imag()));
    base_values.push_back(hb.real());
    for (std::size_t j = 0; j < deltas.size(); ++j)
      for (const auto& u : dirs) {
        const HPoint p{b.x + deltas[j] * u.x, b.y + deltas[j] * u.y, b.t + deltas[j] * u.t};
        const Complex hp = invert(g, mu_hat, p);
        imag = std::max(imag, std::abs(hp.imag()));
        increments[j] = std::max(increments[j], std::abs(hp.real() - hb.real()));
      }
  }
  std::vector<double> ratios;
  for (std::size_t j = 0; j + 1 < increments.size(); ++j) {
    ratios.push_back(increments[j] > 0.0 ? increments[j + 1] / increments[j] : (increments[j + 1] > 0.0 ? kInf : 0.0));
  }
  c.add("continuity_ratio", *std::max_element(ratios.begin(), ratios.end()), 1.0);
  return make_check("theorem3_continuous_density", c.metric(), 1.0,
                    json{{"atoms", m.atoms().size()},
                         {"base_values", base_values},
                         {"deltas", deltas},
                         {"increments", increments},
                         {"ratios", ratios},
                         {"max_imaginary_part", imag},
                         {"subchecks", c.subs()}});
}

// Difference sets ---------------------------------------------------------------------

namespace {

template <GroupBackend G>
void add_pipeline_subs(Composite& c, const DifferenceReport<G>& r, const Tolerances& tol) {
  c.add("mass_identity", std::abs(r.muD_mass - r.mu_mass * r.mu_mass) / (r.mu_mass * r.mu_mass), tol.mass);
  c.add("factorization_defect", r.factorization_defect, tol.factorization);
  c.add("s1_budget", std::abs(r.s1_budget - r.plancherel_sq) / r.plancherel_sq, tol.s1_budget);
}

template <GroupBackend G>
json pipeline_context(const G& g, const DifferenceReport<G>& r) {
  json ctx{{"mu_mass", r.mu_mass},
           {"muD_mass", r.muD_mass},
           {"muD_atoms", r.muD_atoms},
           {"s1_budget", r.s1_budget},
           {"plancherel_norm_sq", r.plancherel_sq},
           {"density_at_identity", r.density_at_identity},
           {"min_density", r.min_density}};
  if (r.witness) {
    ctx["witness"] = json{{"point", element_to_json(g, r.witness->point)},
                          {"density", r.witness->density},
                          {"threshold", r.witness->threshold},
                          {"neighborhood_size", r.witness->neighborhood.size()}};
  } else {
    ctx["witness"] = nullptr;
  }
  return ctx;
}

}  // namespace

CheckResult assess_difference_report(const FiniteGroup& g, const DiscreteMeasure<FiniteGroup>& m,
                                    const DifferenceReport<FiniteGroup>& r, const Tolerances& tol) {
  Composite c;
  add_pipeline_subs(c, r, tol);
  std::vector<double> counted(g.order(), 0.0);
  const auto mud = difference_pushforward(m);
  for (const auto& a : mud.atoms()) counted[a.element] += a.weight;
  double oracle = 0.0, symmetry = 0.0;
  for (std::size_t p = 0; p < g.order(); ++p) {
    oracle = std::max(oracle, std::abs(r.density[p] - counted[p]));
    symmetry = std::max(symmetry, std::abs(r.density[p] - r.density[g.inverse(p)]));
  }
  c.add("pair_count_agreement", oracle, tol.density);
  c.add("symmetry", symmetry, tol.density);
  c.add("negativity", std::max(0.0, -r.min_density), tol.density);
  json ctx = pipeline_context(g, r);
  json set = json::array();
  for (const auto& a : m.atoms()) set.push_back(a.element);
  ctx["set"] = set;
  ctx["subchecks"] = c.subs();
  if (r.witness) {
    json hood = json::array();
    for (std::size_t p : r.witness->neighborhood) hood.push_back(p);
    ctx["witness"]["neighborhood"] = hood;
  }
  return make_check("theorem4_difference_set", r.witness ? c.metric() : kInf, 1.0, std::move(ctx));
}

CheckResult assess_difference_report(const HeisenbergGroup& g, const DiscreteMeasure<HeisenbergGroup>& m,
                                    const DifferenceReport<HeisenbergGroup>& r, const Tolerances& tol) {
  Composite c;
  add_pipeline_subs(c, r, tol);
  json ctx = pipeline_context(g, r);
  ctx["atoms"] = m.atoms().size();
  ctx["subchecks"] = c.subs();
  return make_check("theorem4_difference_set", r.witness ? c.metric() : kInf, 1.0, std::move(ctx));
}

CheckResult check_theorem4(const FiniteGroup& g, const DiscreteMeasure<FiniteGroup>& m, const Tolerances& tol) {
  try {
    return assess_difference_report(g, m, analyze_difference_set(m), tol);
  } catch (const DomainError& e) {
    json set = json::array();
    for (const auto& a : m.atoms()) set.push_back(a.element);
    return failed_check("theorem4_difference_set", e.what(), json{{"set", set}});
  }
}

CheckResult check_theorem4(const HeisenbergGroup& g, const DiscreteMeasure<HeisenbergGroup>& m,
                           const Tolerances& tol) {
  try {
    return assess_difference_report(g, m, analyze_difference_set(m), tol);
  } catch (const DomainError& e) {
    return failed_check("theorem4_difference_set", e.what(), json{{"atoms", m.atoms().size()}});
  }
}

CheckResult check_theorem4_sets(const FiniteGroup& g, std::size_t random_sets, std::uint64_t seed,
                                const Tolerances& tol) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> sets;
  std::string mode;
  if (n <= 6) {
    mode = "exhaustive";
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t p = 0; p < n; ++p)
        if (mask & (std::size_t{1} << p)) s.push_back(p);
      sets.push_back(std::move(s));
    }
  } else {
    mode = "random";
    Rng rng(seed);
    for (std::size_t i = 0; i < random_sets; ++i) {
      const std::size_t size = 1 + rng.index(std::min<std::size_t>(6, n));
      std::vector<std::size_t> all(n);
      for (std::size_t p = 0; p < n; ++p) all[p] = p;
      for (std::size_t j = 0; j < size; ++j) std::swap(all[j], all[j + rng.index(n - j)]);
      all.resize(size);
      std::sort(all.begin(), all.end());
      sets.push_back(std::move(all));
    }
  }
  double worst = -kInf;
  json worst_ctx;
  std::size_t witnesses = 0;
  for (const auto& s : sets) {
    const auto r = check_theorem4(g, indicator_measure(g, s), tol);
    if (!r.context["witness"].is_null()) ++witnesses;
    if (std::isnan(r.metric) || r.metric > worst || worst_ctx.is_null()) {
      worst = r.metric;
      worst_ctx = r.context;
    }
    if (std::isnan(worst)) break;
  }
  return make_check("theorem4_difference_sets", worst, 1.0,
                    json{{"mode", mode},
                         {"sets", sets.size()},
                         {"seed", seed},
                         {"witnesses_found", witnesses},
                         {"worst", worst_ctx}});
}

// Suites ------------------------------------------------------------------------

json SuiteOptions::to_json() const {
  json sets_json = json::array();
  for (const auto& s : sets) sets_json.push_back(s);
  return json{{"seed", seed},
              {"trials", trials},
              {"heisenberg_trials", heisenberg_trials},
              {"tol", tol ? json(*tol) : json(nullptr)},
              {"eps", eps},
              {"identity_lambdas", identity_lambdas},
              {"hausdorff_young_p", hausdorff_young_p},
              {"sets", sets_json},
              {"box_lo", json::array({box_lo.x, box_lo.y, box_lo.t})},
              {"box_hi", json::array({box_hi.x, box_hi.y, box_hi.t})},
              {"gaussian_bump", json{{"x", bump.x}, {"y", bump.y}, {"t", bump.t}}}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"validate",     "plancherel",     "inversion",
                                              "convolution",  "hausdorff-young", "lemma-opnorm",
                                              "lemma-identity", "theorem3",     "theorem4",
                                              "all"};
  return names;
}

namespace {

void require_suite(std::string_view suite) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw DomainError("unknown suite '" + std::string(suite) + "'");
  }
}

template <GroupBackend G>
VerificationReport empty_report(const G& g, std::string_view suite, const SuiteOptions& opts, const Tolerances& tol) {
  VerificationReport r;
  r.suite = std::string(suite);
  r.backend = g.describe();
  r.config = opts.to_json();
  r.config["tolerances"] = tol.to_json();
  return r;
}

}  // namespace

VerificationReport run_suite(const FiniteGroup& g, std::string_view suite, const SuiteOptions& opts) {
  require_suite(suite);
  const Tolerances tol = opts.tol ? Tolerances::uniform(*opts.tol) : default_tolerances(g);
  VerificationReport report = empty_report(g, suite, opts, tol);
  const bool all = suite == "all";
  auto want = [&](std::string_view s) { return all || suite == s; };

  if (want("validate")) {
    FiniteValidationOptions v;
    v.tol = tol.exact;
    v.seed = opts.seed;
    report.append(validate_group(g, v));
  }
  if (want("plancherel")) report.checks.push_back(check_plancherel(g, opts.trials, opts.seed, tol.exact));
  if (want("inversion")) report.checks.push_back(check_inversion(g, opts.trials, opts.seed, tol.exact));
  if (want("convolution")) report.checks.push_back(check_convolution(g, opts.trials, opts.seed, tol.exact));
  if (want("hausdorff-young")) {
    report.checks.push_back(
        check_hausdorff_young(g, opts.hausdorff_young_p, opts.trials, opts.seed, tol.hausdorff_young));
  }
  if (want("lemma-opnorm")) report.checks.push_back(check_lemma_opnorm(g, opts.trials, opts.seed, tol.opnorm));
  if (want("lemma-identity")) report.checks.push_back(check_lemma_identity(g, opts.eps, tol.identity_final));
  if (want("theorem3")) {
    Rng rng(opts.seed);
    const auto density = random_density(g, rng);
    auto part1 = check_theorem3_part1(density, tol.exact);
    part1.context["seed"] = opts.seed;
    report.checks.push_back(std::move(part1));
    report.checks.push_back(
        check_theorem3_part2(g, DiscreteMeasure<FiniteGroup>::from_density(density), density, tol));
  }
  if (want("theorem4")) {
    if (opts.sets.empty()) {
      report.checks.push_back(check_theorem4_sets(g, 100, opts.seed, tol));
    } else {
      for (const auto& s : opts.sets) report.checks.push_back(check_theorem4(g, indicator_measure(g, s), tol));
    }
  }
  return report;
}

VerificationReport run_suite(const HeisenbergGroup& g, std::string_view suite, const SuiteOptions& opts) {
  require_suite(suite);
  if (suite == "convolution" || suite == "hausdorff-young") {
    throw DomainError("suite '" + std::string(suite) + "' needs a finite backend");
  }
  const Tolerances tol = opts.tol ? Tolerances::uniform(*opts.tol) : default_tolerances(g);
  VerificationReport report = empty_report(g, suite, opts, tol);
  const bool all = suite == "all";
  auto want = [&](std::string_view s) { return all || suite == s; };
  const json bump_ctx{{"function", "gaussian bump"}, {"widths", {opts.bump.x, opts.bump.y, opts.bump.t}}};

  if (want("validate")) {
    HeisenbergValidationOptions v;
    if (opts.tol) v.tol = v.homomorphism_tol = *opts.tol;
    report.append(validate_group(g, v));
  }
  if (want("plancherel")) {
    auto c = check_plancherel(g, gaussian_bump(g, opts.bump), tol.transform);
    c.context.update(bump_ctx);
    report.checks.push_back(std::move(c));
  }
  if (want("inversion")) {
    auto c = check_inversion(g, gaussian_bump(g, opts.bump), tol.transform);
    c.context.update(bump_ctx);
    report.checks.push_back(std::move(c));
  }
  if (want("lemma-opnorm")) {
    report.checks.push_back(check_lemma_opnorm(g, opts.heisenberg_trials, opts.seed, tol.opnorm));
  }
  if (want("lemma-identity")) {
    const HeisenbergGroup probe(g.config(), explicit_lambda_grid(opts.identity_lambdas));
    std::vector<std::size_t> irreps(probe.dual_size());
    for (std::size_t k = 0; k < irreps.size(); ++k) irreps[k] = k;
    report.checks.push_back(check_lemma_identity(probe, opts.eps, irreps, tol.identity_final));
  }
  if (want("theorem3")) {
    auto c = check_theorem3_part1(gaussian_bump(g, opts.bump), tol.transform);
    c.context.update(bump_ctx);
    report.checks.push_back(std::move(c));
    report.checks.push_back(check_theorem3_part2(g, box_measure(g, opts.box_lo, opts.box_hi), tol));
  }
  if (want("theorem4")) report.checks.push_back(check_theorem4(g, box_measure(g, opts.box_lo, opts.box_hi), tol));
  return report;
}

}  // namespace groupft
