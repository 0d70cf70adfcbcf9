#pragma once

// Exact finite-group backend.
//
// Haar measure is the counting measure (weight 1 per element), so the
// Plancherel weight of an irrep χ is dim χ / |G| and every identity of the
// transform holds to machine precision.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "groupft/group.hpp"
#include "groupft/linalg.hpp"
#include "groupft/report.hpp"

namespace groupft {

struct FiniteIrrep {
  std::string label;
  std::size_t dim = 0;
  std::vector<CMatrix> matrices;  // one dim×dim matrix per element
};

class FiniteGroup {
 public:
  using Element = std::size_t;

  /// Builds the table and enforces its structural invariants: Latin-square
  /// multiplication, identity and inverse laws, irrep matrix shapes and the
  /// completeness sum Σ dim² = order. Numerical properties (unitarity,
  /// homomorphism, orthogonality) are left to validate_group.
  FiniteGroup(std::string name, std::size_t identity, std::vector<std::vector<std::size_t>> mul,
              std::vector<std::size_t> inverse, std::vector<FiniteIrrep> irreps);

  const std::string& name() const { return name_; }
  void rename(std::string name) { name_ = std::move(name); }
  std::size_t order() const { return order_; }

  Element identity() const { return identity_; }
  Element multiply(Element p, Element q) const { return mul_[p * order_ + q]; }
  Element inverse(Element p) const { return inverse_[p]; }
  Element canonical(Element p) const { return p; }

  std::size_t haar_size() const { return order_; }
  Element haar_point(std::size_t i) const { return i; }
  double haar_weight(std::size_t) const { return 1.0; }

  std::size_t dual_size() const { return irreps_.size(); }
  std::size_t irrep_dim(std::size_t k) const { return irreps_[k].dim; }
  double plancherel_weight(std::size_t k) const {
    return static_cast<double>(irreps_[k].dim) / static_cast<double>(order_);
  }
  std::string irrep_label(std::size_t k) const { return irreps_[k].label; }
  const CMatrix& evaluate(std::size_t k, Element p) const { return irreps_[k].matrices[p]; }
  const std::vector<FiniteIrrep>& irreps() const { return irreps_; }

  std::vector<CMatrix> integrate(std::span<const WeightedPoint<Element>> atoms) const;
  Complex pair(std::size_t k, const CMatrix& m, Element p) const;

  json describe() const;

  /// Throws DomainError if p is not an element index.
  void check_element(Element p) const;

 private:
  std::string name_;
  std::size_t order_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inverse_;
  std::vector<FiniteIrrep> irreps_;
};

// Generators ---------------------------------------------------------------

/// ℤ_n with characters χ_k(m) = exp(2πi·km/n).
FiniteGroup gen_cyclic(std::size_t n);

/// D_n (order 2n) with its 1- and 2-dimensional irreps. Element r^k s^j has
/// index k + n·j.
FiniteGroup gen_dihedral(std::size_t n);

/// H(ℤ_p), p an odd prime, with the polarized law
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c' + (ab' − a'b)/2). Element (a,b,c)
/// has index a + p·b + p²·c. Irreps: p² characters followed by p−1
/// Schrödinger-type irreps of dimension p.
FiniteGroup gen_finite_heisenberg(std::size_t p);

/// a × b with Kronecker-product irreps. Element (i, j) has index i·|b| + j.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Builtin names: zN, dN, s3, hP (finite Heisenberg), and products joined by
/// 'x' such as z2xs3.
FiniteGroup builtin_group(std::string_view name);

// Group-spec documents ------------------------------------------------------

FiniteGroup load_group(std::string_view document);
FiniteGroup load_group_file(const std::string& path);
json group_to_json(const FiniteGroup& g);
std::string save_group(const FiniteGroup& g);

// Validation ----------------------------------------------------------------

struct FiniteValidationOptions {
  double tol = 1e-10;
  std::size_t max_pairs = 10000;
  std::uint64_t seed = 1;
};

/// Unitarity, homomorphism, identity evaluation, character orthogonality,
/// completeness and Plancherel-weight checks.
VerificationReport validate_group(const FiniteGroup& g, const FiniteValidationOptions& opts = {});

}  // namespace groupft
