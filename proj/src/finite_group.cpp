#include "groupft/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <set>

#include "groupft/errors.hpp"
#include "groupft/random.hpp"

namespace groupft {

namespace {

Complex root_of_unity(long long k, std::size_t n) {
  const auto m = static_cast<long long>(n);
  const long long r = ((k % m) + m) % m;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

CMatrix scalar(Complex z) {
  CMatrix m(1, 1);
  m(0, 0) = z;
  return m;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::size_t identity,
                         std::vector<std::vector<std::size_t>> mul,
                         std::vector<std::size_t> inverse, std::vector<FiniteIrrep> irreps)
    : name_(std::move(name)), order_(mul.size()), identity_(identity),
      inverse_(std::move(inverse)), irreps_(std::move(irreps)) {
  const std::size_t n = order_;
  if (n == 0) throw FormatError("group table: order must be positive");
  if (identity_ >= n) throw FormatError("group table: identity index out of range");
  if (inverse_.size() != n) throw FormatError("group table: inverse list has wrong length");

  mul_.resize(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    if (mul[p].size() != n) throw FormatError("group table: mul row " + std::to_string(p) + " has wrong length");
    for (std::size_t q = 0; q < n; ++q) {
      if (mul[p][q] >= n) throw FormatError("group table: mul entry out of range");
      mul_[p * n + q] = mul[p][q];
    }
  }
  // Latin square: every row and column is a permutation.
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t q = 0; q < n; ++q) {
      if (row[mul_[p * n + q]] || col[mul_[q * n + p]]) {
        throw FormatError("group table: multiplication is not a Latin square (index " +
                          std::to_string(p) + ")");
      }
      row[mul_[p * n + q]] = true;
      col[mul_[q * n + p]] = true;
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (multiply(identity_, p) != p || multiply(p, identity_) != p) {
      throw FormatError("group table: identity law fails at " + std::to_string(p));
    }
    if (inverse_[p] >= n || multiply(p, inverse_[p]) != identity_ ||
        multiply(inverse_[p], p) != identity_) {
      throw FormatError("group table: inverse law fails at " + std::to_string(p));
    }
  }

  if (irreps_.empty()) throw FormatError("group table: no irreps given");
  std::size_t dim_sq = 0;
  for (std::size_t k = 0; k < irreps_.size(); ++k) {
    auto& r = irreps_[k];
    if (r.label.empty()) r.label = "chi" + std::to_string(k);
    if (r.dim == 0) throw FormatError("irrep " + r.label + ": dimension must be positive");
    if (r.matrices.size() != n) {
      throw FormatError("irrep " + r.label + ": expected " + std::to_string(n) + " matrices, got " +
                        std::to_string(r.matrices.size()));
    }
    for (const auto& m : r.matrices) {
      if (m.rows() != static_cast<Eigen::Index>(r.dim) || m.cols() != static_cast<Eigen::Index>(r.dim)) {
        throw FormatError("irrep " + r.label + ": matrix dimension mismatch");
      }
      if (!all_finite(m)) throw FormatError("irrep " + r.label + ": non-finite matrix entry");
    }
    dim_sq += r.dim * r.dim;
  }
  if (dim_sq != n) {
    throw FormatError("group table: sum of squared irrep dimensions is " + std::to_string(dim_sq) +
                      ", order is " + std::to_string(n));
  }
}

void FiniteGroup::check_element(Element p) const {
  if (p >= order_) {
    throw DomainError("element " + std::to_string(p) + " out of range for " + name_ +
                      " of order " + std::to_string(order_));
  }
}

std::vector<CMatrix> FiniteGroup::integrate(std::span<const WeightedPoint<Element>> atoms) const {
  std::vector<CMatrix> out;
  out.reserve(irreps_.size());
  for (const auto& r : irreps_) {
    const auto d = static_cast<Eigen::Index>(r.dim);
    CMatrix acc = CMatrix::Zero(d, d);
    for (const auto& a : atoms) {
      check_element(a.element);
      acc += a.weight * r.matrices[a.element];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

Complex FiniteGroup::pair(std::size_t k, const CMatrix& m, Element p) const {
  check_element(p);
  const CMatrix& chi = irreps_[k].matrices[p];
  if (m.rows() != chi.rows() || m.cols() != chi.cols()) {
    throw DimensionError("pair: matrix shape does not match irrep " + irreps_[k].label);
  }
  // tr(m·chi*) = Σ_ab m_ab conj(chi_ab)
  return (m.array() * chi.conjugate().array()).sum();
}

json FiniteGroup::describe() const {
  json dims = json::array();
  for (const auto& r : irreps_) dims.push_back(r.dim);
  return json{{"kind", "finite"}, {"name", name_}, {"order", order_}, {"irrep_dims", dims}};
}

// Generators ---------------------------------------------------------------

FiniteGroup gen_cyclic(std::size_t n) {
  if (n == 0) throw DomainError("gen_cyclic: n must be at least 1");
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    inv[a] = (n - a) % n;
  }
  std::vector<FiniteIrrep> irreps;
  for (std::size_t k = 0; k < n; ++k) {
    FiniteIrrep r{"chi" + std::to_string(k), 1, {}};
    for (std::size_t m = 0; m < n; ++m) {
      r.matrices.push_back(scalar(root_of_unity(static_cast<long long>(k * m), n)));
    }
    irreps.push_back(std::move(r));
  }
  return FiniteGroup("Z" + std::to_string(n), 0, std::move(mul), std::move(inv), std::move(irreps));
}

FiniteGroup gen_dihedral(std::size_t n) {
  if (n < 3) throw DomainError("gen_dihedral: n must be at least 3, got " + std::to_string(n));
  const std::size_t order = 2 * n;
  auto index = [n](std::size_t k, std::size_t j) { return k + n * j; };
  std::vector<std::vector<std::size_t>> mul(order, std::vector<std::size_t>(order));
  std::vector<std::size_t> inv(order);
  for (std::size_t j1 = 0; j1 < 2; ++j1) {
    for (std::size_t k1 = 0; k1 < n; ++k1) {
      for (std::size_t j2 = 0; j2 < 2; ++j2) {
        for (std::size_t k2 = 0; k2 < n; ++k2) {
          // r^k1 s^j1 · r^k2 s^j2 = r^(k1 ± k2) s^(j1 + j2)
          const std::size_t k = j1 == 0 ? (k1 + k2) % n : (k1 + n - k2) % n;
          mul[index(k1, j1)][index(k2, j2)] = index(k, j1 ^ j2);
        }
      }
      inv[index(k1, j1)] = j1 == 0 ? index((n - k1) % n, 0) : index(k1, 1);
    }
  }

  std::vector<FiniteIrrep> irreps;
  auto one_dim = [&](std::string label, auto sign) {
    FiniteIrrep r{std::move(label), 1, std::vector<CMatrix>(order)};
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < n; ++k) r.matrices[index(k, j)] = scalar(sign(k, j));
    irreps.push_back(std::move(r));
  };
  one_dim("trivial", [](std::size_t, std::size_t) { return Complex(1.0); });
  one_dim("sign", [](std::size_t, std::size_t j) { return Complex(j ? -1.0 : 1.0); });
  if (n % 2 == 0) {
    one_dim("alt_r", [](std::size_t k, std::size_t) { return Complex(k % 2 ? -1.0 : 1.0); });
    one_dim("alt_rs", [](std::size_t k, std::size_t j) { return Complex((k + j) % 2 ? -1.0 : 1.0); });
  }
  CMatrix flip(2, 2);
  flip << 0.0, 1.0, 1.0, 0.0;
  for (std::size_t h = 1; 2 * h < n; ++h) {
    FiniteIrrep r{"rho" + std::to_string(h), 2, std::vector<CMatrix>(order)};
    for (std::size_t k = 0; k < n; ++k) {
      CMatrix rot = CMatrix::Zero(2, 2);
      rot(0, 0) = root_of_unity(static_cast<long long>(h * k), n);
      rot(1, 1) = root_of_unity(-static_cast<long long>(h * k), n);
      r.matrices[index(k, 0)] = rot;
      r.matrices[index(k, 1)] = rot * flip;
    }
    irreps.push_back(std::move(r));
  }
  return FiniteGroup("D" + std::to_string(n), 0, std::move(mul), std::move(inv), std::move(irreps));
}

FiniteGroup gen_finite_heisenberg(std::size_t p) {
  if (p % 2 == 0 || !is_prime(p)) {
    throw DomainError("gen_finite_heisenberg: p must be an odd prime, got " + std::to_string(p));
  }
  const std::size_t order = p * p * p;
  const std::size_t half = (p + 1) / 2;  // 2⁻¹ mod p
  auto index = [p](std::size_t a, std::size_t b, std::size_t c) { return a + p * (b + p * c); };

  std::vector<std::vector<std::size_t>> mul(order, std::vector<std::size_t>(order));
  std::vector<std::size_t> inv(order);
  for (std::size_t c1 = 0; c1 < p; ++c1)
    for (std::size_t b1 = 0; b1 < p; ++b1)
      for (std::size_t a1 = 0; a1 < p; ++a1) {
        for (std::size_t c2 = 0; c2 < p; ++c2)
          for (std::size_t b2 = 0; b2 < p; ++b2)
            for (std::size_t a2 = 0; a2 < p; ++a2) {
              const std::size_t form = (a1 * b2 + (p - a2 % p) * b1) % p;
              const std::size_t c = (c1 + c2 + half * form) % p;
              mul[index(a1, b1, c1)][index(a2, b2, c2)] = index((a1 + a2) % p, (b1 + b2) % p, c);
            }
        inv[index(a1, b1, c1)] = index((p - a1) % p, (p - b1) % p, (p - c1) % p);
      }

  std::vector<FiniteIrrep> irreps;
  for (std::size_t v = 0; v < p; ++v)
    for (std::size_t u = 0; u < p; ++u) {
      FiniteIrrep r{"chi(" + std::to_string(u) + "," + std::to_string(v) + ")", 1,
                    std::vector<CMatrix>(order)};
      for (std::size_t c = 0; c < p; ++c)
        for (std::size_t b = 0; b < p; ++b)
          for (std::size_t a = 0; a < p; ++a)
            r.matrices[index(a, b, c)] = scalar(root_of_unity(static_cast<long long>(u * a + v * b), p));
      irreps.push_back(std::move(r));
    }
  // π_λ(a,b,c)φ(ξ) = ω^{λ(c − ab/2)} ω^{λaξ} φ(ξ − b)
  for (std::size_t lambda = 1; lambda < p; ++lambda) {
    FiniteIrrep r{"pi" + std::to_string(lambda), p, std::vector<CMatrix>(order)};
    for (std::size_t c = 0; c < p; ++c)
      for (std::size_t b = 0; b < p; ++b)
        for (std::size_t a = 0; a < p; ++a) {
          const std::size_t central = (c + (p - (half * a % p) * b % p)) % p;
          CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
          for (std::size_t xi = 0; xi < p; ++xi) {
            const std::size_t col = (xi + p - b) % p;
            m(static_cast<Eigen::Index>(xi), static_cast<Eigen::Index>(col)) =
                root_of_unity(static_cast<long long>(lambda * ((central + a * xi) % p)), p);
          }
          r.matrices[index(a, b, c)] = std::move(m);
        }
    irreps.push_back(std::move(r));
  }
  return FiniteGroup("H" + std::to_string(p), 0, std::move(mul), std::move(inv), std::move(irreps));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  std::vector<std::size_t> inv(n);
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1) {
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2)
          mul[i1 * nb + j1][i2 * nb + j2] = a.multiply(i1, i2) * nb + b.multiply(j1, j2);
      inv[i1 * nb + j1] = a.inverse(i1) * nb + b.inverse(j1);
    }
  std::vector<FiniteIrrep> irreps;
  for (const auto& ra : a.irreps())
    for (const auto& rb : b.irreps()) {
      FiniteIrrep r{ra.label + "*" + rb.label, ra.dim * rb.dim, std::vector<CMatrix>(n)};
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) r.matrices[i * nb + j] = kron(ra.matrices[i], rb.matrices[j]);
      irreps.push_back(std::move(r));
    }
  return FiniteGroup(a.name() + "x" + b.name(), a.identity() * nb + b.identity(), std::move(mul),
                     std::move(inv), std::move(irreps));
}

namespace {

FiniteGroup builtin_factor(std::string_view name) {
  if (name.size() < 2) throw DomainError("unknown builtin group '" + std::string(name) + "'");
  const char family = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
  const std::string digits(name.substr(1));
  if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw DomainError("unknown builtin group '" + std::string(name) + "'");
  }
  const std::size_t param = std::stoul(digits);
  switch (family) {
    case 'z': return gen_cyclic(param);
    case 'd': return gen_dihedral(param);
    case 'h': return gen_finite_heisenberg(param);
    case 's':
      if (param == 3) {
        FiniteGroup g = gen_dihedral(3);
        g.rename("S3");
        return g;
      }
      break;
    default: break;
  }
  throw DomainError("unknown builtin group '" + std::string(name) + "'");
}

}  // namespace

FiniteGroup builtin_group(std::string_view name) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = name.find('x', start);
    parts.push_back(name.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  FiniteGroup g = builtin_factor(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) g = direct_product(g, builtin_factor(parts[i]));
  return g;
}

// Validation ----------------------------------------------------------------

VerificationReport validate_group(const FiniteGroup& g, const FiniteValidationOptions& opts) {
  VerificationReport report;
  report.suite = "validate";
  report.backend = g.describe();
  report.config = json{{"tol", opts.tol}, {"max_pairs", opts.max_pairs}, {"seed", opts.seed}};

  const std::size_t n = g.order();
  double unitarity = 0.0, identity_defect = 0.0, homomorphism = 0.0;
  for (const auto& r : g.irreps()) {
    for (std::size_t p = 0; p < n; ++p) unitarity = std::max(unitarity, unitarity_defect(r.matrices[p]));
    identity_defect = std::max(
        identity_defect, operator_norm(r.matrices[g.identity()] - identity_matrix(r.dim)));
  }

  const bool exhaustive = n * n <= opts.max_pairs;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (exhaustive) {
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) pairs.emplace_back(p, q);
  } else {
    Rng rng(opts.seed);
    for (std::size_t i = 0; i < opts.max_pairs; ++i) pairs.emplace_back(rng.index(n), rng.index(n));
  }
  for (const auto& r : g.irreps()) {
    for (auto [p, q] : pairs) {
      const CMatrix diff = r.matrices[g.multiply(p, q)] - r.matrices[p] * r.matrices[q];
      homomorphism = std::max(homomorphism, operator_norm(diff));
    }
  }

  // (1/|G|) Σ_p tr χ(p) · conj tr χ'(p) = δ
  std::vector<std::vector<Complex>> characters;
  for (const auto& r : g.irreps()) {
    std::vector<Complex> ch(n);
    for (std::size_t p = 0; p < n; ++p) ch[p] = r.matrices[p].trace();
    characters.push_back(std::move(ch));
  }
  double orthogonality = 0.0;
  for (std::size_t a = 0; a < characters.size(); ++a)
    for (std::size_t b = 0; b < characters.size(); ++b) {
      Complex s = 0.0;
      for (std::size_t p = 0; p < n; ++p) s += characters[a][p] * std::conj(characters[b][p]);
      s /= static_cast<double>(n);
      orthogonality = std::max(orthogonality, std::abs(s - Complex(a == b ? 1.0 : 0.0)));
    }

  std::size_t dim_sq = 0;
  for (const auto& r : g.irreps()) dim_sq += r.dim * r.dim;
  const double completeness = std::abs(static_cast<double>(dim_sq) - static_cast<double>(n));

  double weight_defect = 0.0, weight_sum = 0.0;
  for (std::size_t k = 0; k < g.dual_size(); ++k) {
    weight_sum += g.plancherel_weight(k) * static_cast<double>(g.irrep_dim(k));
  }
  weight_defect = std::abs(weight_sum - 1.0);

  report.checks.push_back(make_check("unitarity_defect", unitarity, opts.tol));
  report.checks.push_back(make_check("identity_defect", identity_defect, opts.tol));
  report.checks.push_back(make_check("homomorphism_defect", homomorphism, opts.tol,
                                     json{{"pairs", pairs.size()}, {"exhaustive", exhaustive}}));
  report.checks.push_back(make_check("orthogonality_defect", orthogonality, opts.tol));
  report.checks.push_back(make_check("completeness_defect", completeness, 0.0,
                                     json{{"sum_dim_sq", dim_sq}, {"order", n}}));
  report.checks.push_back(make_check("plancherel_weight_defect", weight_defect, opts.tol,
                                     json{{"sum_weight_dim", weight_sum}}));
  return report;
}

}  // namespace groupft
