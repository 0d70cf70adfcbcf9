// Acceptance run: one PASS/FAIL line per criterion. Finite-group quantities
// are recomputed here from the irrep tables with plain loops and compared to
// the library; the Heisenberg criteria use the library checks directly.

#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "groupft/distance_set.hpp"
#include "groupft/errors.hpp"
#include "groupft/quadrature.hpp"
#include "groupft/random.hpp"
#include "groupft/theorems.hpp"
#include "oracles.hpp"

using namespace groupft;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::vector<std::string> backend_names() {
  std::vector<std::string> out;
  for (int n = 1; n <= 64; ++n) out.push_back("z" + std::to_string(n));
  for (int n = 3; n <= 8; ++n) out.push_back("d" + std::to_string(n));
  for (const char* s : {"h3", "h5", "z2xs3"}) out.emplace_back(s);
  return out;
}

const std::vector<FiniteGroup>& backends() {
  static const std::vector<FiniteGroup> groups = [] {
    std::vector<FiniteGroup> g;
    for (const auto& n : backend_names()) g.push_back(builtin_group(n));
    return g;
  }();
  return groups;
}

const HeisenbergGroup& heisenberg() {
  static const HeisenbergGroup g;
  return g;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// f̂(k) = Σ_p f(p) ρ_k(p) by explicit summation.
std::vector<CMatrix> naive_fourier(const FiniteGroup& g, const std::vector<Complex>& f) {
  std::vector<CMatrix> out;
  for (std::size_t k = 0; k < g.dual_size(); ++k) {
    const auto d = static_cast<Eigen::Index>(g.irrep_dim(k));
    CMatrix m = CMatrix::Zero(d, d);
    for (std::size_t p = 0; p < g.order(); ++p)
      for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) m(i, j) += f[p] * g.evaluate(k, p)(i, j);
    out.push_back(std::move(m));
  }
  return out;
}

// Σ_k (d_k/|G|) Σ_ij F_k(i,j) conj(ρ_k(p)(i,j))
Complex naive_invert(const FiniteGroup& g, const std::vector<CMatrix>& field, std::size_t p) {
  Complex s = 0.0;
  for (std::size_t k = 0; k < g.dual_size(); ++k) {
    const double w = static_cast<double>(g.irrep_dim(k)) / static_cast<double>(g.order());
    const auto& r = g.evaluate(k, p);
    for (Eigen::Index i = 0; i < r.rows(); ++i)
      for (Eigen::Index j = 0; j < r.cols(); ++j) s += w * field[k](i, j) * std::conj(r(i, j));
  }
  return s;
}

double naive_plancherel(const FiniteGroup& g, const std::vector<CMatrix>& field) {
  double s = 0.0;
  for (std::size_t k = 0; k < g.dual_size(); ++k) {
    double hs = 0.0;
    for (Eigen::Index i = 0; i < field[k].rows(); ++i)
      for (Eigen::Index j = 0; j < field[k].cols(); ++j) hs += std::norm(field[k](i, j));
    s += static_cast<double>(g.irrep_dim(k)) / static_cast<double>(g.order()) * hs;
  }
  return s;
}

std::vector<Complex> random_values(const FiniteGroup& g, Rng& rng) {
  std::vector<Complex> v(g.order());
  for (auto& z : v) z = rng.complex_uniform();
  return v;
}

Outcome criterion_validation() {
  double worst_library = 0.0, worst_oracle = 0.0;
  bool complete = true, all_passed = true;
  for (const auto& g : backends()) {
    const auto r = validate_group(g);
    all_passed = all_passed && r.overall();
    for (const auto& c : r.checks) worst_library = std::max(worst_library, c.metric);
    std::size_t sum = 0;
    for (std::size_t k = 0; k < g.dual_size(); ++k) sum += g.irrep_dim(k) * g.irrep_dim(k);
    complete = complete && sum == g.order();
    for (std::size_t k = 0; k < g.dual_size(); ++k) {
      const auto d = g.irrep_dim(k);
      for (std::size_t p = 0; p < g.order(); ++p) {
        const CMatrix& a = g.evaluate(k, p);
        worst_oracle = std::max(worst_oracle, (oracle::matmul(a, a.adjoint()) - CMatrix::Identity(d, d)).norm());
        for (std::size_t q = 0; q < g.order(); ++q) {
          const CMatrix prod = oracle::matmul(a, g.evaluate(k, q));
          worst_oracle = std::max(worst_oracle, (prod - g.evaluate(k, g.multiply(p, q))).norm());
        }
      }
    }
    // character orthogonality Σ_p χ_a(p) conj(χ_b(p)) = |G| δ_ab
    for (std::size_t a = 0; a < g.dual_size(); ++a)
      for (std::size_t b = 0; b < g.dual_size(); ++b) {
        Complex s = 0.0;
        for (std::size_t p = 0; p < g.order(); ++p)
          s += g.evaluate(a, p).trace() * std::conj(g.evaluate(b, p).trace());
        const double want = a == b ? static_cast<double>(g.order()) : 0.0;
        worst_oracle = std::max(worst_oracle, std::abs(s - want) / static_cast<double>(g.order()));
      }
  }
  return {all_passed && complete && worst_library <= 1e-10 && worst_oracle <= 1e-10,
          std::to_string(backends().size()) + " backends, library defect " + fmt(worst_library) +
              ", loop-oracle defect " + fmt(worst_oracle) + (complete ? ", completeness exact" : ", completeness FAILED")};
}

Outcome criterion_plancherel_inversion() {
  Rng rng(2024);
  double plancherel = 0.0, inversion = 0.0, oracle_planch = 0.0, oracle_inv = 0.0;
  bool lib = true;
  for (const auto& g : backends()) {
    const auto cp = check_plancherel(g, 100, 7, 1e-10);
    const auto ci = check_inversion(g, 100, 7, 1e-10);
    lib = lib && cp.passed && ci.passed;
    plancherel = std::max(plancherel, cp.metric);
    inversion = std::max(inversion, ci.metric);
    for (int t = 0; t < 100; ++t) {
      const auto v = random_values(g, rng);
      const GroupFunction<FiniteGroup> f(g, v);
      const auto fh = fourier_function(f);
      const auto naive = naive_fourier(g, v);
      double norm_sq = 0.0;
      for (const auto& z : v) norm_sq += std::norm(z);
      oracle_planch = std::max(oracle_planch, std::abs(naive_plancherel(g, naive) - norm_sq) / norm_sq);
      oracle_planch = std::max(oracle_planch, std::abs(plancherel_norm_sq(fh) - norm_sq) / norm_sq);
      const auto back = invert_on_haar(g, fh);
      for (std::size_t p = 0; p < g.order(); ++p) {
        oracle_inv = std::max(oracle_inv, std::abs(back[p] - v[p]));
        oracle_inv = std::max(oracle_inv, std::abs(naive_invert(g, naive, p) - v[p]));
      }
    }
  }
  const bool ok = lib && oracle_planch <= 1e-10 && oracle_inv <= 1e-10;
  return {ok, "Plancherel rel " + fmt(std::max(plancherel, oracle_planch)) + ", inversion max " +
                  fmt(std::max(inversion, oracle_inv)) + " over 100 functions per backend"};
}

Outcome criterion_convolution() {
  Rng rng(99);
  double lib = 0.0, naive = 0.0;
  bool passed = true;
  for (const auto& g : backends()) {
    const auto c = check_convolution(g, 100, 11, 1e-10);
    passed = passed && c.passed;
    lib = std::max(lib, c.metric);
    for (int t = 0; t < 100; ++t) {
      const auto a = random_values(g, rng), b = random_values(g, rng);
      const auto ab = naive_fourier(g, oracle::convolve(g, a, b));
      const auto ah = naive_fourier(g, a), bh = naive_fourier(g, b);
      for (std::size_t k = 0; k < g.dual_size(); ++k)
        naive = std::max(naive, oracle::op_norm(ab[k] - oracle::matmul(ah[k], bh[k])));
    }
  }
  return {passed && naive <= 1e-10, "library defect " + fmt(lib) + ", oracle defect " + fmt(naive)};
}

Outcome criterion_lemma_opnorm() {
  Rng rng(5);
  std::size_t functions = 0;
  double worst = -kInf;
  bool passed = true;
  const std::size_t per = 14;
  for (const auto& g : backends()) {
    const auto c = check_lemma_opnorm(g, per, 13, 1e-10);
    passed = passed && c.passed;
    worst = std::max(worst, c.metric);
    for (std::size_t t = 0; t < per; ++t) {
      const auto v = random_values(g, rng);
      double l1 = 0.0;
      for (const auto& z : v) l1 += std::abs(z);
      for (const auto& m : naive_fourier(g, v)) worst = std::max(worst, oracle::op_norm(m) - l1);
    }
    functions += 2 * per;
  }
  const auto hc = check_lemma_opnorm(heisenberg(), 3, 17, 1e-8);
  functions += 3;
  const bool ok = passed && worst <= 1e-10 && hc.passed;
  return {ok, std::to_string(functions) + " functions, finite max excess " + fmt(worst) + ", Heisenberg excess " +
                  fmt(hc.metric)};
}

Outcome criterion_lemma_identity() {
  const std::vector<double> eps{1.0, 0.5, 0.25, 0.125};
  const HeisenbergGroup probe(heisenberg().config(), explicit_lambda_grid({-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}));
  std::vector<std::size_t> irreps(probe.dual_size());
  for (std::size_t k = 0; k < irreps.size(); ++k) irreps[k] = k;
  const auto c = check_lemma_identity(probe, eps, irreps, 0.1);
  double finite = 0.0;
  for (const auto& g : backends()) {
    finite = std::max(finite, check_lemma_identity(g, eps, 1e-10).metric);
    for (double e : eps) {
      const auto psi = approx_identity(g, e);
      const auto naive = naive_fourier(g, {psi.values().begin(), psi.values().end()});
      for (std::size_t k = 0; k < g.dual_size(); ++k) {
        const auto d = static_cast<Eigen::Index>(g.irrep_dim(k));
        finite = std::max(finite, (naive[k] - CMatrix::Identity(d, d)).norm());
      }
    }
  }
  std::string defects;
  if (c.context.contains("strong_defects")) defects = c.context["strong_defects"].dump(-1, ' ', false, json::error_handler_t::replace);
  return {c.passed && finite == 0.0,
          "Heisenberg strong defects " + defects + " (metric " + fmt(c.metric) + "), finite defect " + fmt(finite)};
}

Outcome criterion_recovery() {
  Rng rng(8);
  double finite = 0.0;
  for (const auto& g : backends()) finite = std::max(finite, check_theorem3_part1(random_density(g, rng), 1e-10).metric);
  const auto hc = check_theorem3_part1(gaussian_bump(heisenberg()), 0.05);
  return {finite <= 1e-10 && hc.passed,
          "finite L2-relative " + fmt(finite) + ", Heisenberg Gaussian bump " + fmt(hc.metric)};
}

Outcome criterion_continuous_density() {
  Rng rng(12);
  double finite = 0.0, naive = 0.0;
  bool passed = true;
  for (const auto& g : backends()) {
    const auto d = random_density(g, rng);
    const auto m = DiscreteMeasure<FiniteGroup>::from_density(d);
    const auto c = check_theorem3_part2(g, m, d, default_tolerances(g));
    passed = passed && c.passed;
    finite = std::max(finite, c.metric);
    const auto mh = naive_fourier(g, {d.values().begin(), d.values().end()});
    for (std::size_t p = 0; p < g.order(); ++p) naive = std::max(naive, std::abs(naive_invert(g, mh, p) - d[p]));
  }
  const auto& h = heisenberg();
  const auto hc = check_theorem3_part2(h, box_measure(h, {0, 0, 0}, {1, 1, 1}), default_tolerances(h));
  return {passed && naive <= 1e-10 && hc.passed,
          "finite normalized metric " + fmt(finite) + ", oracle density error " + fmt(naive) +
              ", Heisenberg normalized metric " + fmt(hc.metric)};
}

void subsets(std::size_t n, std::size_t max_size, std::vector<std::vector<std::size_t>>& out) {
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(i);
    if (s.size() <= max_size) out.push_back(std::move(s));
  }
}

Outcome criterion_difference_sets() {
  std::size_t sets = 0;
  double worst_h = 0.0, worst_mass = 0.0, worst_fact = 0.0, worst_s1 = 0.0;
  bool witnesses = true, library = true;
  Rng rng(77);
  for (const char* name : {"z4", "z6", "s3", "d4", "h3"}) {
    const auto g = builtin_group(name);
    const auto tol = default_tolerances(g);
    const auto c = check_theorem4_sets(g, 100, 3, tol);
    library = library && c.passed;
    std::vector<std::vector<std::size_t>> family;
    if (g.order() <= 6) {
      subsets(g.order(), 6, family);
    } else {
      for (int i = 0; i < 100; ++i) {
        const std::size_t size = 1 + rng.index(6);
        std::vector<std::size_t> s;
        while (s.size() < size) {
          const std::size_t p = rng.index(g.order());
          if (std::find(s.begin(), s.end(), p) == s.end()) s.push_back(p);
        }
        family.push_back(std::move(s));
      }
    }
    for (const auto& s : family) {
      const auto m = indicator_measure(g, s);
      const auto r = analyze_difference_set(m);
      const auto want = oracle::autocorrelation(g, s, std::vector<double>(s.size(), 1.0));
      for (std::size_t p = 0; p < g.order(); ++p) worst_h = std::max(worst_h, std::abs(r.density[p] - want[p]));
      const double a = static_cast<double>(s.size());
      worst_mass = std::max(worst_mass, std::abs(r.muD_mass - a * a) / (a * a));
      worst_fact = std::max(worst_fact, r.factorization_defect);
      std::vector<Complex> ind(g.order(), 0.0);
      for (auto p : s) ind[p] = 1.0;
      const double planch = naive_plancherel(g, naive_fourier(g, ind));
      worst_s1 = std::max(worst_s1, std::abs(r.s1_budget - planch) / planch);
      witnesses = witnesses && r.witness.has_value();
      ++sets;
    }
  }
  const bool ok = library && witnesses && worst_h <= 1e-9 && worst_mass <= 1e-10 && worst_fact <= 1e-10 &&
                  worst_s1 <= 1e-10;
  return {ok, std::to_string(sets) + " sets: h vs pair count " + fmt(worst_h) + ", mass " + fmt(worst_mass) +
                  ", factorization " + fmt(worst_fact) + ", S1 vs Plancherel " + fmt(worst_s1) +
                  (witnesses ? ", every witness found" : ", witness MISSING")};
}

Outcome criterion_heisenberg_box() {
  const auto& g = heisenberg();
  const auto m = box_measure(g, {0, 0, 0}, {1, 1, 1});
  const auto r = analyze_difference_set(m);
  const auto c = assess_difference_report(g, m, r, default_tolerances(g));
  bool has_e = false;
  if (r.witness) {
    const std::size_t e = g.haar_index(0, 0, 0);
    has_e = std::find(r.witness->neighborhood.begin(), r.witness->neighborhood.end(), e) !=
            r.witness->neighborhood.end();
  }
  const bool ok = c.passed && r.factorization_defect <= 1e-8 && has_e && r.density_at_identity > 0.0;
  return {ok, std::to_string(m.atoms().size()) + " atoms, factorization " + fmt(r.factorization_defect) +
                  ", h(e) " + fmt(r.density_at_identity) + ", cluster " +
                  std::to_string(r.witness ? r.witness->neighborhood.size() : 0) + " points" +
                  (has_e ? " containing e" : " WITHOUT e")};
}

std::string metrics(const VerificationReport& r) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& c : r.checks) os << c.name << '=' << c.metric << ';';
  return os.str();
}

Outcome criterion_determinism() {
  SuiteOptions opts;
  opts.trials = 25;
  bool same = true;
  std::size_t checks = 0;
  for (const char* name : {"s3", "h3", "z12"}) {
    const auto g = builtin_group(name);
    const auto a = run_suite(g, "all", opts), b = run_suite(g, "all", opts);
    same = same && metrics(a) == metrics(b);
    checks += a.checks.size();
  }
  const auto& h = heisenberg();
  const auto ha = run_suite(h, "plancherel", opts), hb = run_suite(h, "plancherel", opts);
  same = same && metrics(ha) == metrics(hb);
  checks += ha.checks.size();
  const auto la = check_lemma_opnorm(h, 1, 4, 1e-8), lb = check_lemma_opnorm(h, 1, 4, 1e-8);
  same = same && la.metric == lb.metric;
  return {same, std::to_string(checks + 1) + " metrics compared across two runs"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0 = no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "backend validation", 5.0, criterion_validation},
      {2, "Plancherel and inversion", 10.0, criterion_plancherel_inversion},
      {3, "convolution theorem", 0.0, criterion_convolution},
      {4, "operator norm bounded by L1 norm", 0.0, criterion_lemma_opnorm},
      {5, "approximate identity", 60.0, criterion_lemma_identity},
      {6, "density recovery", 0.0, criterion_recovery},
      {7, "continuous density", 0.0, criterion_continuous_density},
      {8, "finite difference sets", 60.0, criterion_difference_sets},
      {9, "Heisenberg difference set", 120.0, criterion_heisenberg_box},
      {10, "determinism", 0.0, criterion_determinism},
  };
  // Build shared backends outside the timed sections.
  backends();
  heisenberg();
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.passed;
    std::string timing = fmt(secs) + " s";
    if (c.budget_s > 0.0) {
      timing += " of " + fmt(c.budget_s) + " s";
      if (secs > c.budget_s) ok = false;
    }
    if (!ok) ++failures;
    std::printf("%s [%d] %s: %s (%s)\n", ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
