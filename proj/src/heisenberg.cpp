#include "groupft/heisenberg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "groupft/errors.hpp"

namespace groupft {

namespace {

long wrap(long a, long n) {
  const long r = a % n;
  return r < 0 ? r + n : r;
}

// Nearest lattice integer if v is within tol of it.
bool snap(double v, double step, double tol, long& out) {
  const double r = std::round(v / step);
  if (std::abs(v - r * step) > tol) return false;
  out = static_cast<long>(r);
  return true;
}

}  // namespace

HPoint hgroup_multiply(const HPoint& p, const HPoint& q) {
  return {p.x + q.x, p.y + q.y, p.t + q.t + 0.5 * (p.x * q.y - q.x * p.y)};
}

HPoint hgroup_inverse(const HPoint& p) { return {-p.x, -p.y, -p.t}; }

// SchrodingerRep ------------------------------------------------------------

SchrodingerRep::SchrodingerRep(double lambda, std::size_t grid_size, double half_width)
    : lambda_(lambda), n_(grid_size), half_width_(half_width) {
  if (lambda == 0.0 || !std::isfinite(lambda)) {
    throw DomainError("Schrödinger representation needs λ ≠ 0");
  }
  if (grid_size < 2) throw DomainError("carrier grid needs at least 2 points");
  if (!(half_width > 0.0) || !std::isfinite(half_width)) throw DomainError("carrier half width must be positive");
}

void SchrodingerRep::check_point(const HPoint& p) const {
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.t)) {
    throw DomainError("Heisenberg point has non-finite coordinates");
  }
  if (std::abs(p.y) >= 2.0 * half_width_) {
    throw DomainError("translation |y| = " + std::to_string(std::abs(p.y)) +
                      " leaves the carrier (need |y| < 2L)");
  }
}

CVector SchrodingerRep::shift_kernel(double y) const {
  const auto n = static_cast<long>(n_);
  CVector c = CVector::Zero(n);
  long m = 0;
  if (snap(y, spacing(), 1e-12 * spacing(), m)) {
    c(wrap(m, n)) = 1.0;
    return c;
  }
  // c[m] = (1/N) Σ_j exp(2πi j'm/N) exp(−i k_j y), k_j = π j'/L
  std::vector<Complex> spectrum(n_);
  for (long j = 0; j < n; ++j) {
    const long jp = j < (n + 1) / 2 ? j : j - n;
    const double k = std::numbers::pi * static_cast<double>(jp) / half_width_;
    spectrum[static_cast<std::size_t>(j)] = std::polar(1.0 / static_cast<double>(n), -k * y);
  }
  std::vector<Complex> roots(n_);
  for (long r = 0; r < n; ++r) {
    roots[static_cast<std::size_t>(r)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
  }
  for (long mm = 0; mm < n; ++mm) {
    Complex s = 0.0;
    for (long j = 0; j < n; ++j) {
      const long jp = j < (n + 1) / 2 ? j : j - n;
      s += roots[static_cast<std::size_t>(wrap(jp * mm, n))] * spectrum[static_cast<std::size_t>(j)];
    }
    c(mm) = s;
  }
  return c;
}

CMatrix SchrodingerRep::evaluate(const HPoint& p) const {
  check_point(p);
  const auto n = static_cast<long>(n_);
  const CVector c = shift_kernel(p.y);
  const Complex phase = std::polar(1.0, lambda_ * (p.t - 0.5 * p.x * p.y));
  CMatrix m(n, n);
  for (long a = 0; a < n; ++a) {
    const Complex row = phase * std::polar(1.0, lambda_ * p.x * carrier_point(static_cast<std::size_t>(a)));
    for (long b = 0; b < n; ++b) m(a, b) = row * c(wrap(a - b, n));
  }
  return m;
}

CVector SchrodingerRep::apply(const HPoint& p, const CVector& v) const {
  check_point(p);
  const auto n = static_cast<long>(n_);
  if (v.size() != n) throw DimensionError("apply: vector length does not match the carrier");
  const CVector c = shift_kernel(p.y);
  const Complex phase = std::polar(1.0, lambda_ * (p.t - 0.5 * p.x * p.y));
  CVector out(n);
  for (long a = 0; a < n; ++a) {
    Complex s = 0.0;
    for (long b = 0; b < n; ++b) {
      const Complex cb = c(wrap(a - b, n));
      if (cb != 0.0) s += cb * v(b);
    }
    out(a) = phase * std::polar(1.0, lambda_ * p.x * carrier_point(static_cast<std::size_t>(a))) * s;
  }
  return out;
}

CMatrix rep_evaluate(const SchrodingerRep& rep, const HPoint& p) { return rep.evaluate(p); }

CVector gaussian_vector(const SchrodingerRep& rep, double center, double width_scale) {
  const auto n = static_cast<Eigen::Index>(rep.size());
  CVector v(n);
  const double a = std::abs(rep.lambda()) / (width_scale * width_scale);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double xi = rep.carrier_point(static_cast<std::size_t>(i)) - center;
    v(i) = std::exp(-0.5 * a * xi * xi);
  }
  return v / v.norm();
}

// Config ---------------------------------------------------------------------

json HeisenbergConfig::to_json() const {
  return json{{"grid_n", grid_n},         {"half_width", half_width},
              {"lambda_min", lambda_min}, {"lambda_max", lambda_max},
              {"lambda_nodes", lambda_nodes}, {"rule", rule_name(rule)},
              {"x_step", x_step},         {"t_step", t_step},
              {"x_extent", x_extent},     {"y_extent", y_extent},
              {"t_extent", t_extent},     {"snap_tolerance", snap_tolerance}};
}

HeisenbergConfig HeisenbergConfig::from_json(const json& doc) {
  HeisenbergConfig c;
  try {
    c.grid_n = doc.value("grid_n", c.grid_n);
    c.half_width = doc.value("half_width", c.half_width);
    c.lambda_min = doc.value("lambda_min", c.lambda_min);
    c.lambda_max = doc.value("lambda_max", c.lambda_max);
    c.lambda_nodes = doc.value("lambda_nodes", c.lambda_nodes);
    if (doc.contains("rule")) c.rule = parse_rule(doc.at("rule").get<std::string>());
    c.x_step = doc.value("x_step", c.x_step);
    c.t_step = doc.value("t_step", c.t_step);
    c.x_extent = doc.value("x_extent", c.x_extent);
    c.y_extent = doc.value("y_extent", c.y_extent);
    c.t_extent = doc.value("t_extent", c.t_extent);
    c.snap_tolerance = doc.value("snap_tolerance", c.snap_tolerance);
  } catch (const json::exception& e) {
    throw FormatError(std::string("heisenberg config: ") + e.what());
  }
  return c;
}

// HeisenbergGroup -------------------------------------------------------------

HeisenbergGroup::HeisenbergGroup(HeisenbergConfig config)
    : HeisenbergGroup(config, make_lambda_grid(config.lambda_min, config.lambda_max,
                                               config.lambda_nodes, config.rule)) {}

HeisenbergGroup::HeisenbergGroup(HeisenbergConfig config, LambdaGrid dual)
    : config_(config), dual_(std::move(dual)) {
  if (!(config_.x_step > 0.0) || !(config_.t_step > 0.0)) throw DomainError("lattice steps must be positive");
  if (config_.x_extent < 0.0 || config_.y_extent < 0.0 || config_.t_extent < 0.0) {
    throw DomainError("lattice extents must be nonnegative");
  }
  if (!(config_.snap_tolerance >= 0.0)) throw DomainError("snap tolerance must be nonnegative");
  for (const auto& node : dual_.nodes) {
    if (!(node.quad_weight > 0.0)) throw DomainError("λ quadrature weights must be positive");
    reps_.emplace_back(node.lambda, config_.grid_n, config_.half_width);
  }
  x_half_ = static_cast<long>(std::floor(config_.x_extent / config_.x_step + 1e-9));
  y_half_ = static_cast<long>(std::floor(config_.y_extent / y_step() + 1e-9));
  t_half_ = static_cast<long>(std::floor(config_.t_extent / config_.t_step + 1e-9));
  if (2.0 * static_cast<double>(y_half_) * y_step() >= 2.0 * config_.half_width) {
    throw DomainError("y extent must stay inside the carrier");
  }
}

HPoint HeisenbergGroup::canonical(const HPoint& p) const {
  HPoint out = p;
  long i = 0;
  if (snap(p.x, x_step(), config_.snap_tolerance, i)) out.x = static_cast<double>(i) * x_step();
  if (snap(p.y, y_step(), config_.snap_tolerance, i)) out.y = static_cast<double>(i) * y_step();
  return out;
}

HPoint HeisenbergGroup::lattice_point(long ix, long iy, long it) const {
  return {static_cast<double>(ix) * x_step(), static_cast<double>(iy) * y_step(),
          static_cast<double>(it) * t_step()};
}

bool HeisenbergGroup::on_lattice(long ix, long iy, long it) const {
  return std::abs(ix) <= x_half_ && std::abs(iy) <= y_half_ && std::abs(it) <= t_half_;
}

std::size_t HeisenbergGroup::haar_index(long ix, long iy, long it) const {
  if (!on_lattice(ix, iy, it)) throw DomainError("lattice index outside the Haar box");
  return static_cast<std::size_t>((ix + x_half_) +
                                  static_cast<long>(nx()) * ((iy + y_half_) + static_cast<long>(ny()) * (it + t_half_)));
}

LatticeIndex HeisenbergGroup::haar_coords(std::size_t i) const {
  const auto sx = nx(), sy = ny();
  LatticeIndex c;
  c.ix = static_cast<long>(i % sx) - x_half_;
  c.iy = static_cast<long>((i / sx) % sy) - y_half_;
  c.it = static_cast<long>(i / (sx * sy)) - t_half_;
  return c;
}

HPoint HeisenbergGroup::haar_point(std::size_t i) const {
  const auto c = haar_coords(i);
  return lattice_point(c.ix, c.iy, c.it);
}

std::string HeisenbergGroup::irrep_label(std::size_t k) const {
  std::ostringstream os;
  os.precision(17);
  os << "lambda=" << dual_.nodes[k].lambda;
  return os.str();
}

std::vector<CMatrix> HeisenbergGroup::integrate(std::span<const WeightedPoint<HPoint>> atoms) const {
  const auto n = static_cast<long>(config_.grid_n);
  const double tol = config_.snap_tolerance;

  // Lattice coordinates of every atom, with dense row/column ids for the
  // distinct y and x values present.
  struct Entry {
    std::size_t row, col;
    double t;
    Complex w;
  };
  std::map<long, std::size_t> rows, cols;
  std::vector<long> row_iy, col_ix;
  std::vector<Entry> entries;
  entries.reserve(atoms.size());
  for (const auto& a : atoms) {
    long ix = 0, iy = 0;
    if (!snap(a.element.x, x_step(), tol, ix) || !snap(a.element.y, y_step(), tol, iy)) {
      throw DomainError("integrate: atom (" + std::to_string(a.element.x) + ", " +
                        std::to_string(a.element.y) + ") is off the Haar lattice");
    }
    if (std::abs(iy) >= n) throw DomainError("integrate: atom translation leaves the carrier");
    if (!std::isfinite(a.element.t)) throw DomainError("integrate: non-finite t");
    if (a.weight == 0.0) continue;
    auto [ri, new_row] = rows.try_emplace(iy, rows.size());
    if (new_row) row_iy.push_back(iy);
    auto [ci, new_col] = cols.try_emplace(ix, cols.size());
    if (new_col) col_ix.push_back(ix);
    entries.push_back({ri->second, ci->second, a.element.t, a.weight});
  }

  const auto nrows = static_cast<Eigen::Index>(row_iy.size());
  const auto ncols = static_cast<Eigen::Index>(col_ix.size());
  std::vector<CMatrix> out;
  out.reserve(reps_.size());
  for (const auto& rep : reps_) {
    const double lambda = rep.lambda();
    CMatrix result = CMatrix::Zero(n, n);
    if (entries.empty()) {
      out.push_back(std::move(result));
      continue;
    }
    // G(row, col) = Σ w·exp(iλ(t − xy/2))
    CMatrix weights = CMatrix::Zero(nrows, ncols);
    for (const auto& e : entries) {
      const double x = static_cast<double>(col_ix[e.col]) * x_step();
      const double y = static_cast<double>(row_iy[e.row]) * y_step();
      weights(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) +=
          e.w * std::polar(1.0, lambda * (e.t - 0.5 * x * y));
    }
    // E(col, a) = exp(iλ x ξ_a)
    CMatrix modulation(ncols, n);
    for (Eigen::Index c = 0; c < ncols; ++c) {
      const double x = static_cast<double>(col_ix[static_cast<std::size_t>(c)]) * x_step();
      for (long a = 0; a < n; ++a) {
        modulation(c, a) = std::polar(1.0, lambda * x * rep.carrier_point(static_cast<std::size_t>(a)));
      }
    }
    const CMatrix diagonals = weights * modulation;
    // Row r of `diagonals` multiplies the permutation T_{iy}: entry (a, a − iy).
    for (Eigen::Index r = 0; r < nrows; ++r) {
      const long iy = row_iy[static_cast<std::size_t>(r)];
      for (long a = 0; a < n; ++a) result(a, wrap(a - iy, n)) += diagonals(r, a);
    }
    out.push_back(std::move(result));
  }
  return out;
}

Complex HeisenbergGroup::pair(std::size_t k, const CMatrix& m, const HPoint& p) const {
  const auto& rep = reps_[k];
  const auto n = static_cast<long>(config_.grid_n);
  if (m.rows() != n || m.cols() != n) throw DimensionError("pair: matrix does not match the carrier size");
  if (std::abs(p.y) >= 2.0 * config_.half_width) throw DomainError("pair: |y| must be below 2L");
  const double lambda = rep.lambda();
  const Complex phase = std::polar(1.0, lambda * (p.t - 0.5 * p.x * p.y));
  long iy = 0;
  Complex sum = 0.0;
  if (snap(p.y, y_step(), 1e-12 * y_step(), iy)) {
    for (long a = 0; a < n; ++a) {
      sum += m(a, wrap(a - iy, n)) *
             std::polar(1.0, -lambda * p.x * rep.carrier_point(static_cast<std::size_t>(a)));
    }
  } else {
    const CVector c = rep.shift_kernel(p.y);
    for (long a = 0; a < n; ++a) {
      Complex row = 0.0;
      for (long b = 0; b < n; ++b) row += m(a, b) * std::conj(c(wrap(a - b, n)));
      sum += row * std::polar(1.0, -lambda * p.x * rep.carrier_point(static_cast<std::size_t>(a)));
    }
  }
  return std::conj(phase) * sum;
}

std::vector<Complex> HeisenbergGroup::invert_on_haar(const OperatorField& field) const {
  const auto n = static_cast<long>(config_.grid_n);
  const auto sx = static_cast<Eigen::Index>(nx());
  const auto sy = static_cast<Eigen::Index>(ny());
  const auto st = static_cast<long>(nt());
  std::vector<Complex> out(haar_size(), Complex(0.0));
  for (const auto& entry : field.entries) {
    if (entry.irrep >= reps_.size()) throw DimensionError("invert_on_haar: field entry outside the dual");
    const auto& m = entry.matrix;
    if (m.rows() != n || m.cols() != n) throw DimensionError("invert_on_haar: matrix size mismatch");
    const auto& rep = reps_[entry.irrep];
    const double lambda = rep.lambda();
    // diag(iy, a) = m(a, a − iy)
    CMatrix diag(sy, n);
    for (Eigen::Index r = 0; r < sy; ++r) {
      const long iy = static_cast<long>(r) - y_half_;
      for (long a = 0; a < n; ++a) diag(r, a) = m(a, wrap(a - iy, n));
    }
    CMatrix demod(n, sx);
    for (Eigen::Index c = 0; c < sx; ++c) {
      const double x = static_cast<double>(static_cast<long>(c) - x_half_) * x_step();
      for (long a = 0; a < n; ++a) {
        demod(a, c) = std::polar(1.0, -lambda * x * rep.carrier_point(static_cast<std::size_t>(a)));
      }
    }
    const CMatrix traces = diag * demod;  // (iy, ix)
    std::vector<Complex> t_phase(static_cast<std::size_t>(st));
    for (long it = 0; it < st; ++it) {
      t_phase[static_cast<std::size_t>(it)] =
          entry.weight * std::polar(1.0, -lambda * static_cast<double>(it - t_half_) * t_step());
    }
    for (Eigen::Index r = 0; r < sy; ++r) {
      const double y = static_cast<double>(static_cast<long>(r) - y_half_) * y_step();
      for (Eigen::Index c = 0; c < sx; ++c) {
        const double x = static_cast<double>(static_cast<long>(c) - x_half_) * x_step();
        const Complex base = traces(r, c) * std::polar(1.0, 0.5 * lambda * x * y);
        for (long it = 0; it < st; ++it) {
          out[static_cast<std::size_t>(c + sx * (r + sy * it))] += base * t_phase[static_cast<std::size_t>(it)];
        }
      }
    }
  }
  return out;
}

CMatrix HeisenbergGroup::interior_rows(const CMatrix& m) const {
  const auto& rep = reps_.front();
  std::vector<Eigen::Index> keep;
  for (std::size_t a = 0; a < rep.size(); ++a) {
    if (std::abs(rep.carrier_point(a)) <= 0.5 * config_.half_width) keep.push_back(static_cast<Eigen::Index>(a));
  }
  CMatrix out(static_cast<Eigen::Index>(keep.size()), m.cols());
  for (std::size_t i = 0; i < keep.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = m.row(keep[i]);
  return out;
}

json HeisenbergGroup::describe() const {
  return json{{"kind", "heisenberg"},
              {"config", config_.to_json()},
              {"dual_nodes", dual_.nodes.size()},
              {"lattice", {{"nx", nx()}, {"ny", ny()}, {"nt", nt()}, {"y_step", y_step()}}}};
}

// Validation ---------------------------------------------------------------

VerificationReport validate_group(const HeisenbergGroup& g, const HeisenbergValidationOptions& opts) {
  VerificationReport report;
  report.suite = "validate";
  report.backend = g.describe();
  report.config = json{{"tol", opts.tol}, {"homomorphism_tol", opts.homomorphism_tol},
                       {"sampled_lambdas", opts.sampled_lambdas}};

  std::vector<std::size_t> ks;
  const std::size_t d = g.dual_size();
  const std::size_t want = std::min(opts.sampled_lambdas, d);
  for (std::size_t i = 0; i < want; ++i) ks.push_back(want == 1 ? 0 : i * (d - 1) / (want - 1));

  const std::vector<HPoint> points = {{0.3, -0.7, 0.2}, {1.0, 0.45, -0.5}, {-0.8, 0.9, 1.3}, {0.5, 0.0, 0.0}};
  double unitarity = 0.0, identity_defect = 0.0, central = 0.0, homomorphism = 0.0, weights = 0.0;
  json lambdas = json::array();
  for (std::size_t k : ks) {
    const auto& rep = g.rep(k);
    lambdas.push_back(rep.lambda());
    identity_defect = std::max(identity_defect, operator_norm(rep.evaluate(g.identity()) -
                                                              identity_matrix(rep.size())));
    const CMatrix z = rep.evaluate({0.0, 0.0, 0.7});
    for (const auto& p : points) {
      const CMatrix u = rep.evaluate(p);
      unitarity = std::max(unitarity, unitarity_defect(u));
      central = std::max(central, operator_norm(z * u - u * z));
    }
    // Unit width at every λ so the vector stays clear of the carrier edges.
    const CVector v = gaussian_vector(rep, 0.0, std::sqrt(std::abs(rep.lambda())));
    for (const auto& p : points)
      for (const auto& q : points) {
        const CVector lhs = rep.apply(hgroup_multiply(p, q), v);
        const CVector rhs = rep.apply(p, rep.apply(q, v));
        homomorphism = std::max(homomorphism, (lhs - rhs).norm());
      }
  }
  for (std::size_t k = 0; k < d; ++k) {
    if (!(g.plancherel_weight(k) > 0.0)) weights += 1.0;
  }
  const json ctx{{"lambdas", lambdas}};
  report.checks.push_back(make_check("unitarity_defect", unitarity, opts.tol, ctx));
  report.checks.push_back(make_check("identity_defect", identity_defect, opts.tol, ctx));
  report.checks.push_back(make_check("central_commutator_defect", central, opts.tol, ctx));
  report.checks.push_back(make_check("homomorphism_defect", homomorphism, opts.homomorphism_tol,
                                     json{{"lambdas", lambdas}, {"vector", "unit-width centered gaussian"}}));
  report.checks.push_back(make_check("nonpositive_plancherel_weights", weights, 0.0));
  return report;
}

}  // namespace groupft
