#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hartogs/profile.hpp"
#include "hartogs/types.hpp"

namespace hartogs {

/// Interior point of D_F with the quantities every closed form needs.
struct DomainPoint {
  CVector z;
  double x = 0.0;       // |z_0|^2
  double A = 0.0;       // F(|z_0|^2) - |z_1|^2 - ... - |z_{n-1}|^2
  double margin = 0.0;  // min(A, x0 - x)

  Eigen::Index dim() const { return z.size(); }
};

/// g_{a\bar b} = d^2(-log A)/dz_a dzbar_b with its determinant and inverse.
/// h_inv(b, a) holds g^{b\bar a}, so h_inv * h = I.
struct MetricData {
  HermitianMatrix h;
  double det = 0.0;
  HermitianMatrix h_inv;
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

/// A = F(|z_0|^2) - sum_{a>=1} |z_a|^2. NaN when |z_0|^2 >= x0.
double defining_a(const Profile& profile, const CVector& z);

/// Kahler potential -log A; NaN outside D_F so finite-difference stencils
/// that leave the domain are rejected.
double kahler_potential(const Profile& profile, const CVector& z);

/// Interior test. Returns nullopt on and outside the boundary.
std::optional<DomainPoint> contains(const Profile& profile, const CVector& z);

/// As contains(), but throws Error(Domain) for non-interior z.
DomainPoint make_point(const Profile& profile, const CVector& z);

/// Closed-form g_{a\bar b} only.
HermitianMatrix metric_matrix(const Profile& profile, const CVector& z);

/// Closed-form metric, determinant and inverse. Throws Error(Domain) for a
/// non-positive margin and Error(Singular) when |B| < 1e-14.
MetricData assemble_metric(const Profile& profile, const DomainPoint& p);

/// det h = -F^2 / A^{n+1} (x F'/F)' = F^2 m(x) / A^{n+1}.
double metric_determinant(const Profile& profile, const DomainPoint& p);

/// Same closed form evaluated at an arbitrary z (NaN outside D_F).
double metric_determinant_at(const Profile& profile, const CVector& z);

/// Deterministic interior samples with margin >= min_margin. |z_0|^2 is
/// drawn uniformly from the admissible range and (z_1, ..., z_{n-1})
/// uniformly from the ball still inside the margin; each candidate is then
/// accepted or rejected on the interior test. Throws Error(Sampling) after
/// 1e5 rejected candidates in a row.
std::vector<DomainPoint> sample_interior(const Profile& profile, std::size_t n,
                                         std::size_t count, std::uint64_t seed,
                                         double min_margin);

void check_dimension(std::size_t n);

}  // namespace hartogs
