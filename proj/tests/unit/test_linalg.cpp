#include <doctest.h>

#include <algorithm>

#include "groupft/errors.hpp"
#include "groupft/linalg.hpp"
#include "groupft/random.hpp"
#include "oracles.hpp"

using namespace groupft;

TEST_CASE("matmul agrees with the triple loop") {
  Rng rng(7);
  const CMatrix a = rng.matrix(4, 6), b = rng.matrix(6, 3);
  CHECK((matmul(a, b) - oracle::matmul(a, b)).norm() < 1e-13);
  CHECK_THROWS_AS(matmul(a, a), DimensionError);
}

TEST_CASE("adjoint, trace, identity, kron") {
  Rng rng(3);
  const CMatrix a = rng.matrix(3, 3), b = rng.matrix(2, 2);
  CHECK((adjoint(adjoint(a)) - a).norm() == 0.0);
  CHECK(std::abs(trace(identity_matrix(5)) - Complex(5.0)) == 0.0);
  CHECK_THROWS_AS(trace(rng.matrix(2, 3)), DimensionError);
  const CMatrix k = kron(a, b);
  REQUIRE(k.rows() == 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) CHECK(std::abs(k(2 * i + r, 2 * j + s) - a(i, j) * b(r, s)) < 1e-15);
}

TEST_CASE("all_finite spots NaN and infinity") {
  CMatrix m = identity_matrix(2);
  CHECK(all_finite(m));
  m(1, 0) = Complex(std::nan(""), 0.0);
  CHECK_FALSE(all_finite(m));
  m(1, 0) = Complex(0.0, kInf);
  CHECK_FALSE(all_finite(m));
}

TEST_CASE("singular values match the Jacobi oracle") {
  Rng rng(11);
  for (auto [r, c] : {std::pair{5, 5}, {7, 4}, {3, 8}, {1, 1}}) {
    const CMatrix a = rng.matrix(r, c);
    const auto got = singular_values(a).values;
    const auto want = oracle::singular_values(a);
    REQUIRE(got.size() == want.size());
    CHECK(std::is_sorted(got.begin(), got.end(), std::greater<>()));
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
  }
}

TEST_CASE("rank-deficient input keeps tiny singular values tiny") {
  Rng rng(5);
  const CMatrix u = rng.matrix(16, 1), v = rng.matrix(16, 1);
  const CMatrix a = u * v.adjoint();
  const auto s = singular_values(a).values;
  CHECK(s[0] == doctest::Approx(u.norm() * v.norm()).epsilon(1e-13));
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] < 1e-14 * s[0]);
  // the trace norm of a rank-one matrix is its operator norm
  CHECK(schatten_norm(a, 1.0) == doctest::Approx(operator_norm(a)).epsilon(1e-13));
}

TEST_CASE("Schatten norms") {
  Rng rng(2);
  const CMatrix a = rng.matrix(6, 6);
  CHECK(schatten_norm(a, 2.0) == doctest::Approx(frobenius_norm(a)).epsilon(1e-13));
  CHECK(schatten_norm(a, kInf) == doctest::Approx(oracle::op_norm(a)).epsilon(1e-13));
  CHECK(operator_norm(a) == doctest::Approx(oracle::op_norm(a)).epsilon(1e-13));
  double prev = kInf;
  for (double p : {1.0, 1.5, 2.0, 4.0, 16.0}) {
    const double v = schatten_norm(a, p);
    CHECK(v <= prev * (1.0 + 1e-14));
    prev = v;
  }
  CMatrix d = CMatrix::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = Complex(0.0, -4.0);
  CHECK(schatten_norm(d, 1.0) == doctest::Approx(7.0));
  CHECK(schatten_norm(d, 2.0) == doctest::Approx(5.0));
  CHECK_THROWS_AS(schatten_norm(d, 0.5), DomainError);
  CHECK(schatten_norm(CMatrix::Zero(4, 4), 1.0) == 0.0);
  CHECK(schatten_norm(CMatrix::Zero(4, 4), 3.0) == 0.0);
}

TEST_CASE("unitarity defect") {
  Rng rng(9);
  const CMatrix q = Eigen::HouseholderQR<CMatrix>(rng.matrix(5, 5)).householderQ();
  CHECK(unitarity_defect(q) < 1e-14);
  CHECK(is_unitary(q, 1e-12));
  CHECK_FALSE(is_unitary(2.0 * q, 1e-12));
  CHECK(unitarity_defect(rng.matrix(2, 3)) == kInf);
}
