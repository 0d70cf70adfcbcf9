#pragma once

// Dense complex matrix kernels and Schatten-class functionals.
//
// All matrices are Eigen::MatrixXcd. The functions here add the shape checks
// and error reporting the rest of the library relies on.

#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace groupft {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Singular values, nonincreasing and nonnegative.
struct SingularSpectrum {
  std::vector<double> values;

  double largest() const { return values.empty() ? 0.0 : values.front(); }
};

CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
Complex trace(const CMatrix& a);
CMatrix identity_matrix(std::size_t n);

/// Kronecker product a ⊗ b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

bool all_finite(const CMatrix& a);

/// Singular values from the Hermitian eigenproblem of the smaller Gram
/// matrix (A*A or AA*). Values below roughly sqrt(eps)·σ₁ carry only
/// absolute accuracy eps·σ₁²/σ, which is harmless for the norms computed
/// here but means tiny singular values should not be trusted individually.
SingularSpectrum singular_values(const CMatrix& a);

/// (Σ σᵢᵖ)^{1/p}; p = kInf gives the operator norm. Throws DomainError for p < 1.
double schatten_norm(const SingularSpectrum& s, double p);
double schatten_norm(const CMatrix& a, double p);

double operator_norm(const CMatrix& a);
double frobenius_norm(const CMatrix& a);

/// ‖a*a − I‖_op, or +inf for non-square input.
double unitarity_defect(const CMatrix& a);
bool is_unitary(const CMatrix& a, double tol);

}  // namespace groupft
