#include <doctest.h>

#include "groupft/errors.hpp"
#include "groupft/random.hpp"
#include "groupft/theorems.hpp"
#include "groupft/transform.hpp"
#include "oracles.hpp"

using namespace groupft;

namespace {

using FFun = GroupFunction<FiniteGroup>;

FFun delta(const FiniteGroup& g, std::size_t p) {
  std::vector<Complex> v(g.order(), 0.0);
  v[p] = 1.0;
  return FFun(g, std::move(v));
}

std::vector<Complex> to_vec(const FFun& f) { return {f.values().begin(), f.values().end()}; }

}  // namespace

TEST_CASE("delta at the identity transforms to the identity field") {
  for (const char* name : {"z5", "s3", "d4", "h3"}) {
    const auto g = builtin_group(name);
    const auto field = fourier_function(delta(g, g.identity()));
    for (const auto& e : field.entries) CHECK((e.matrix - identity_matrix(g.irrep_dim(e.irrep))).norm() == 0.0);
    CHECK(plancherel_norm_sq(field) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(trace_class_norm(field) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("two-point and four-point transforms") {
  const auto z2 = gen_cyclic(2);
  const FFun f(z2, {Complex(3.0, 1.0), Complex(-2.0, 0.5)});
  const auto fh = fourier_function(f);
  CHECK(std::abs(fh.entries[0].matrix(0, 0) - Complex(1.0, 1.5)) < 1e-15);
  CHECK(std::abs(fh.entries[1].matrix(0, 0) - Complex(5.0, 0.5)) < 1e-15);

  const auto z4 = gen_cyclic(4);
  const auto d1 = fourier_function(delta(z4, 1));
  const Complex want[] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(d1.entries[k].matrix(0, 0) - want[k]) < 1e-15);
}

TEST_CASE("cyclic transforms match direct character sums") {
  Rng rng(11);
  for (std::size_t n : {3u, 8u, 13u}) {
    const auto g = gen_cyclic(n);
    std::vector<Complex> v(n);
    for (auto& z : v) z = rng.complex_uniform();
    const auto fh = fourier_function(FFun(g, v));
    const auto want = oracle::cyclic_transform(v);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(fh.entries[k].matrix(0, 0) - want[k]) < 1e-12);
  }
}

TEST_CASE("measure transforms") {
  const auto s3 = builtin_group("s3");
  const DiscreteMeasure<FiniteGroup> point(s3, {{4, 2.5}});
  const auto ph = fourier_measure(point);
  for (const auto& e : ph.entries) {
    CHECK((e.matrix - 2.5 * s3.evaluate(e.irrep, 4)).norm() < 1e-15);
    CHECK(operator_norm(e.matrix) == doctest::Approx(2.5));
  }
  const auto z3 = gen_cyclic(3);
  const DiscreteMeasure<FiniteGroup> uniform(z3, {{0, 1.0}, {1, 1.0}, {2, 1.0}});
  const auto uh = fourier_measure(uniform);
  CHECK(std::abs(uh.entries[0].matrix(0, 0) - 3.0) < 1e-15);
  CHECK(std::abs(uh.entries[1].matrix(0, 0)) < 1e-15);
  CHECK(std::abs(uh.entries[2].matrix(0, 0)) < 1e-15);
  CHECK_THROWS_AS(DiscreteMeasure<FiniteGroup>(z3, {{0, -1.0}}), DomainError);
}

TEST_CASE("transform is linear") {
  const auto g = builtin_group("d4");
  Rng rng(3);
  const auto f = random_function(g, rng), h = random_function(g, rng);
  const Complex a(0.3, -1.1), b(2.0, 0.4);
  std::vector<Complex> mix(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) mix[i] = a * f[i] + b * h[i];
  const auto lhs = fourier_function(FFun(g, mix));
  const auto fh = fourier_function(f), hh = fourier_function(h);
  for (std::size_t k = 0; k < g.dual_size(); ++k) {
    CHECK((lhs.entries[k].matrix - (a * fh.entries[k].matrix + b * hh.entries[k].matrix)).norm() < 1e-12);
  }
}

TEST_CASE("inversion round trip and orthogonality") {
  const auto z2 = gen_cyclic(2);
  OperatorField field;
  field.entries.push_back({0, 0.5, CMatrix::Constant(1, 1, 3.0)});
  field.entries.push_back({1, 0.5, CMatrix::Constant(1, 1, -1.0)});
  CHECK(std::abs(invert(z2, field, 0) - 1.0) < 1e-15);
  CHECK(std::abs(invert(z2, field, 1) - 2.0) < 1e-15);

  Rng rng(21);
  for (const char* name : {"s3", "h3", "z2xs3", "d6"}) {
    const auto g = builtin_group(name);
    const auto f = random_function(g, rng);
    const auto back = invert_on_haar(g, fourier_function(f));
    for (std::size_t p = 0; p < g.order(); ++p) CHECK(std::abs(back[p] - f[p]) < 1e-10);
    const auto de = fourier_function(delta(g, g.identity()));
    for (std::size_t p = 0; p < g.order(); ++p) {
      CHECK(std::abs(invert(g, de, p) - (p == g.identity() ? 1.0 : 0.0)) < 1e-10);
    }
  }
}

TEST_CASE("convolution agrees with the Cayley-table oracle and the transform") {
  const auto z2 = gen_cyclic(2);
  const auto c = convolve(FFun(z2, {2.0, 3.0}), FFun(z2, {5.0, 7.0}));
  CHECK(std::abs(c[0] - 31.0) < 1e-15);
  CHECK(std::abs(c[1] - 29.0) < 1e-15);

  Rng rng(7);
  for (const char* name : {"z6", "s3", "h3", "d5"}) {
    const auto g = builtin_group(name);
    const auto f = random_function(g, rng), h = random_function(g, rng);
    const auto got = convolve(f, h);
    const auto want = oracle::convolve(g, to_vec(f), to_vec(h));
    for (std::size_t p = 0; p < g.order(); ++p) CHECK(std::abs(got[p] - want[p]) < 1e-12);
    CHECK(convolution_theorem_defect(f, h) < 1e-10);
    const auto e = convolve(delta(g, g.identity()), f);
    for (std::size_t p = 0; p < g.order(); ++p) CHECK(std::abs(e[p] - f[p]) < 1e-15);
  }
  const auto other = builtin_group("s3");
  const auto g = builtin_group("s3");
  CHECK_THROWS_AS(convolve(random_function(g, rng), random_function(other, rng)), BackendMismatch);
}

TEST_CASE("Plancherel functionals on Gram fields") {
  Rng rng(17);
  const auto g = builtin_group("h3");
  const auto f = random_function(g, rng);
  const auto fh = fourier_function(f);
  CHECK(plancherel_norm_sq(fh) == doctest::Approx(f.l2_norm() * f.l2_norm()).epsilon(1e-12));
  CHECK(trace_class_norm(gram_field(fh)) == doctest::Approx(plancherel_norm_sq(fh)).epsilon(1e-12));
  OperatorField zero;
  zero.entries.push_back({0, 1.0, CMatrix::Zero(2, 2)});
  CHECK(plancherel_norm_sq(zero) == 0.0);
  CHECK(trace_class_norm(zero) == 0.0);
  CHECK(field_lq_norm(fh, kInf) <= f.l1_norm() + 1e-12);
}

TEST_CASE("function values are validated") {
  const auto g = gen_cyclic(3);
  CHECK_THROWS_AS(FFun(g, {1.0, 2.0}), DimensionError);
  CHECK_THROWS_AS(FFun(g, {1.0, std::nan(""), 0.0}), DomainError);
}

TEST_CASE("approximate identities") {
  const auto g = builtin_group("d4");
  for (double eps : {1.0, 0.1}) {
    const auto psi = fourier_function(approx_identity(g, eps));
    for (const auto& e : psi.entries) CHECK((e.matrix - identity_matrix(g.irrep_dim(e.irrep))).norm() == 0.0);
  }
  const HeisenbergGroup h;
  const auto psi1 = approx_identity(h, 1.0);
  CHECK(psi1.l1_norm() == doctest::Approx(1.0).epsilon(1e-10));
  // nested supports
  const auto psi_half = approx_identity(h, 0.5);
  for (std::size_t i = 0; i < h.haar_size(); ++i) {
    if (psi_half[i] != 0.0) CHECK(psi1[i] != 0.0);
  }
  CHECK_THROWS_AS(approx_identity(h, 0.0), DomainError);
  CHECK(approx_identity(h, 0.01)[h.haar_index(0, 0, 0)].real() > 0.0);
}
