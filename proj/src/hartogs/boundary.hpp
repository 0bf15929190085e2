#pragma once

#include <cstdint>
#include <vector>

#include "hartogs/profile.hpp"
#include "hartogs/types.hpp"

namespace hartogs {

/// Point of the boundary piece |z_0|^2 < x0, sum_{a>=1} |z_a|^2 = F(|z_0|^2).
struct BoundaryPoint {
  CVector z;
  double x = 0.0;  // |z_0|^2

  Eigen::Index dim() const { return z.size(); }
};

/// rho(z) = |z_1|^2 + ... + |z_{n-1}|^2 - F(|z_0|^2).
double defining_function(const Profile& profile, const CVector& z);

/// Projects (z_0, direction) onto the boundary: z_a = sqrt(F(|z_0|^2)) d_a / |d|.
/// Throws Error(Domain) if |z_0|^2 >= x0 and Error(Usage) for a zero direction.
BoundaryPoint make_boundary_point(const Profile& profile, Complex z0, const CVector& direction);

/// Deterministic samples: |z_0|^2 uniform on [0, sampling_cap], uniform
/// phase, uniform direction on the unit sphere of C^{n-1}.
std::vector<BoundaryPoint> sample_boundary(const Profile& profile, std::size_t n,
                                           std::size_t count, std::uint64_t seed);

/// L(rho, z)(X) = |X_1|^2 + ... + |X_{n-1}|^2 - (F' + F'' |z_0|^2) |X_0|^2.
double levi_form(const Profile& profile, const BoundaryPoint& b, const CVector& X);

/// Matrix of the Levi form: diag(-(F' + F'' x), 1, ..., 1).
HermitianMatrix levi_matrix(const Profile& profile, const BoundaryPoint& b);

/// The (1,0) functional X -> -F' zbar_0 X_0 + sum_{a>=1} zbar_a X_a, as coefficients.
CVector tangent_functional(const Profile& profile, const BoundaryPoint& b);

/// Orthonormal basis (columns) of the kernel of tangent_functional, from a
/// Householder completion of its conjugate. Throws Error(Invariant) for a
/// zero gradient.
Eigen::MatrixXcd tangent_space_basis(const Profile& profile, const BoundaryPoint& b);

/// Restricted Levi form on the complex tangent space in the substituted
/// form; valid for z_0 != 0 and X in the tangent space. Singular as z_0 -> 0.
double levi_form_restricted(const Profile& profile, const BoundaryPoint& b, const CVector& X);

/// Minimum eigenvalue of the Levi matrix compressed onto the tangent space.
/// Positive certifies strong pseudoconvexity at b.
double restricted_levi_min_eigenvalue(const Profile& profile, const BoundaryPoint& b);

}  // namespace hartogs
