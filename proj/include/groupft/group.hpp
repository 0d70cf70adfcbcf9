#pragma once

// The contract every group backend implements.
//
// A backend owns a weighted set of Haar sample points standing in for dp and a
// finite sampled dual: a list of irreducible representations, each with a
// Plancherel weight. Integrals over G become weighted sums over the Haar
// points; integrals over the dual become weighted sums over its items.

#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "groupft/linalg.hpp"
#include "groupft/report.hpp"

namespace groupft {

/// An element together with a complex weight; the input of Σ w·χ(p).
template <class E>
struct WeightedPoint {
  E element;
  Complex weight;
};

/// One dual item of an operator field: irrep index, its Plancherel weight and
/// the matrix attached to it.
struct FieldEntry {
  std::size_t irrep = 0;
  double weight = 0.0;
  CMatrix matrix;
};

/// A map χ ↦ matrix over a backend's sampled dual.
struct OperatorField {
  std::vector<FieldEntry> entries;

  std::size_t size() const { return entries.size(); }
};

template <class G>
concept GroupBackend = requires(const G& g, const typename G::Element& p, std::size_t k,
                                std::span<const WeightedPoint<typename G::Element>> atoms,
                                const CMatrix& m) {
  typename G::Element;
  { g.identity() } -> std::convertible_to<typename G::Element>;
  { g.multiply(p, p) } -> std::convertible_to<typename G::Element>;
  { g.inverse(p) } -> std::convertible_to<typename G::Element>;
  { g.canonical(p) } -> std::convertible_to<typename G::Element>;
  { g.haar_size() } -> std::convertible_to<std::size_t>;
  { g.haar_point(k) } -> std::convertible_to<typename G::Element>;
  { g.haar_weight(k) } -> std::convertible_to<double>;
  { g.dual_size() } -> std::convertible_to<std::size_t>;
  { g.irrep_dim(k) } -> std::convertible_to<std::size_t>;
  { g.plancherel_weight(k) } -> std::convertible_to<double>;
  { g.irrep_label(k) } -> std::convertible_to<std::string>;
  { g.evaluate(k, p) } -> std::convertible_to<CMatrix>;
  // Σ_atoms w·χ_k(p) for every dual item k.
  { g.integrate(atoms) } -> std::convertible_to<std::vector<CMatrix>>;
  // tr(m·χ_k(p)*).
  { g.pair(k, m, p) } -> std::convertible_to<Complex>;
  { g.describe() } -> std::convertible_to<json>;
};

}  // namespace groupft
