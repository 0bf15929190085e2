#pragma once

#include <span>
#include <vector>

#include "hartogs/types.hpp"

// Dense linear algebra used on both sides of the closed-form checks:
// determinants, inverses, positive definiteness and small polynomial fits.
namespace hartogs::linalg {

/// Determinant by partial-pivot LU.
Complex lu_determinant(const HermitianMatrix& m);

/// Inverse by partial-pivot LU.
HermitianMatrix dense_inverse(const HermitianMatrix& m);

/// Cholesky factorization attempt. A pivot at or below
/// pivot_tol * max_i |m_ii| counts as failure.
bool is_positive_definite(const HermitianMatrix& m, double pivot_tol = 1e-12);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const HermitianMatrix& m);

/// ||a - b||_F / (1 + ||b||_F).
double relative_frobenius(const HermitianMatrix& a, const HermitianMatrix& b);

/// Largest |m_ab - conj(m_ba)|.
double hermitian_defect(const HermitianMatrix& m);

struct PolynomialFit {
  std::vector<double> coefficients;  // c_0 + c_1 t + ... c_{k-1} t^{k-1}
  double condition = 0.0;            // of the scaled Vandermonde matrix
};

/// Interpolates values at distinct nodes with a polynomial of degree
/// nodes.size() - 1. Nodes are rescaled to (0, 1] before solving. Throws
/// Error(Numeric) when the scaled system's condition number exceeds max_condition.
PolynomialFit vandermonde_fit(std::span<const double> nodes, std::span<const double> values,
                              double max_condition = 1e10);

}  // namespace hartogs::linalg
