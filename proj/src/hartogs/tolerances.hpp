#pragma once

#include <cstddef>

// Pass/fail thresholds shared by the verification suite, the CLI and the tests.
namespace hartogs::tolerance {

inline constexpr double kMetricVsFd = 1e-6;        // relative Frobenius
inline constexpr double kDeterminant = 1e-10;      // relative
inline constexpr double kInverse = 1e-10;          // ||h h_inv - I||_F
inline constexpr double kPrincipalMinor = 1e-10;   // relative
inline constexpr double kDerivativeFd = 1e-6;      // closed form vs FD of F, margin
inline constexpr double kRicciVsFd = 1e-5;         // relative Frobenius
inline constexpr double kRicciTail = 1e-9;         // entrywise, rows a >= 1
inline constexpr double kScalarForms = 1e-9;
inline constexpr double kRhoFit = 1e-8;
inline constexpr double kPseudoconvex = 1e-9;      // margin / eigenvalue floor
inline constexpr double kResidualZero = 1e-8;      // closed-form-dominated residuals
inline constexpr double kResidualZeroFd = 1e-5;    // doubly-FD residuals
inline constexpr double kResidualNonzero = 1e-3;
inline constexpr double kPullback = 1e-10;
inline constexpr double kNonzeroFraction = 0.9;
inline constexpr double kEligibleMargin = 0.05;     // for the nonzero classification
inline constexpr double kMinScanMargin = 0.01;      // stencils must stay inside D_F
inline constexpr std::size_t kPseudoconvexGrid = 1000;

}  // namespace hartogs::tolerance
