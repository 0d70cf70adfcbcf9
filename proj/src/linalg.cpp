#include "groupft/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "groupft/errors.hpp"

namespace groupft {

namespace {

std::string shape(const CMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + shape(a) + " times " + shape(b));
  }
  return a * b;
}

CMatrix adjoint(const CMatrix& a) { return a.adjoint(); }

Complex trace(const CMatrix& a) {
  if (a.rows() != a.cols()) {
    throw DimensionError("trace of non-square " + shape(a) + " matrix");
  }
  return a.trace();
}

CMatrix identity_matrix(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  return CMatrix::Identity(m, m);
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

bool all_finite(const CMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) return false;
    }
  }
  return true;
}

SingularSpectrum singular_values(const CMatrix& a) {
  SingularSpectrum out;
  if (a.size() == 0) return out;
  // Direct SVD rather than eigenvalues of a*a: small singular values of
  // rank-deficient inputs stay accurate, which S₁ norms depend on.
  Eigen::BDCSVD<CMatrix> svd(a);
  if (svd.info() != Eigen::Success) {
    throw ConvergenceError("singular_values: SVD did not converge on " + shape(a) + " input");
  }
  const auto& sv = svd.singularValues();
  out.values.assign(sv.data(), sv.data() + sv.size());
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

double schatten_norm(const SingularSpectrum& s, double p) {
  if (!(p >= 1.0)) {
    throw DomainError("schatten_norm: p must be >= 1, got " + std::to_string(p));
  }
  if (std::isinf(p)) return s.largest();
  if (p == 1.0) {
    double sum = 0.0;
    for (double v : s.values) sum += v;
    return sum;
  }
  // Scale by σ₁ so large p does not overflow.
  const double top = s.largest();
  if (top == 0.0) return 0.0;
  double sum = 0.0;
  for (double v : s.values) sum += std::pow(v / top, p);
  return top * std::pow(sum, 1.0 / p);
}

double schatten_norm(const CMatrix& a, double p) {
  if (!(p >= 1.0)) {
    throw DomainError("schatten_norm: p must be >= 1, got " + std::to_string(p));
  }
  return schatten_norm(singular_values(a), p);
}

double operator_norm(const CMatrix& a) {
  if (a.size() == 0) return 0.0;
  // σ₁² is the top eigenvalue of the smaller Gram matrix; it is computed to
  // relative machine precision, unlike the bottom of the spectrum.
  const CMatrix gram = a.rows() < a.cols() ? CMatrix(a * a.adjoint()) : CMatrix(a.adjoint() * a);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("operator_norm: Hermitian eigensolver did not converge on " + shape(a) + " input");
  }
  return std::sqrt(std::max(solver.eigenvalues().maxCoeff(), 0.0));
}

double frobenius_norm(const CMatrix& a) { return a.norm(); }

double unitarity_defect(const CMatrix& a) {
  if (a.rows() != a.cols()) return kInf;
  const CMatrix gram = a.adjoint() * a - CMatrix::Identity(a.rows(), a.cols());
  return operator_norm(gram);
}

bool is_unitary(const CMatrix& a, double tol) { return unitarity_defect(a) <= tol; }

}  // namespace groupft
