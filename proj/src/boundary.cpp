#include "hartogs/boundary.hpp"

#include <cmath>
#include <numbers>

#include "hartogs/error.hpp"
#include "hartogs/linalg.hpp"
#include "hartogs/metric.hpp"
#include "hartogs/random.hpp"

namespace hartogs {

double defining_function(const Profile& profile, const CVector& z) {
  double s = 0.0;
  for (Eigen::Index a = 1; a < z.size(); ++a) s += std::norm(z[a]);
  return s - profile.eval(std::norm(z[0]));
}

BoundaryPoint make_boundary_point(const Profile& profile, Complex z0, const CVector& direction) {
  const double dn = direction.norm();
  if (!(dn > 0.0)) fail(ErrorKind::Usage, "boundary direction must be nonzero");
  BoundaryPoint b;
  b.x = std::norm(z0);
  const double radius = std::sqrt(profile.eval(b.x));
  b.z.resize(direction.size() + 1);
  b.z[0] = z0;
  b.z.tail(direction.size()) = (radius / dn) * direction;
  return b;
}

std::vector<BoundaryPoint> sample_boundary(const Profile& profile, std::size_t n,
                                           std::size_t count, std::uint64_t seed) {
  check_dimension(n);
  if (count == 0) fail(ErrorKind::Usage, "sample count must be positive");
  Rng rng(seed);
  const double cap = profile.sampling_cap();
  const auto tail = static_cast<Eigen::Index>(n - 1);
  std::vector<BoundaryPoint> out;
  out.reserve(count);
  while (out.size() < count) {
    const double x = rng.uniform(0.0, cap);
    const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    CVector d(tail);
    for (Eigen::Index a = 0; a < tail; ++a) {
      const double re = rng.normal();
      d[a] = Complex(re, rng.normal());
    }
    if (d.norm() == 0.0) continue;
    out.push_back(make_boundary_point(profile, std::polar(std::sqrt(x), phase), d));
  }
  return out;
}

double levi_form(const Profile& profile, const BoundaryPoint& b, const CVector& X) {
  const double s = profile.eval(b.x, 1) + profile.eval(b.x, 2) * b.x;
  double out = -s * std::norm(X[0]);
  for (Eigen::Index a = 1; a < X.size(); ++a) out += std::norm(X[a]);
  return out;
}

HermitianMatrix levi_matrix(const Profile& profile, const BoundaryPoint& b) {
  const Eigen::Index n = b.dim();
  HermitianMatrix m = HermitianMatrix::Identity(n, n);
  m(0, 0) = -(profile.eval(b.x, 1) + profile.eval(b.x, 2) * b.x);
  return m;
}

CVector tangent_functional(const Profile& profile, const BoundaryPoint& b) {
  CVector a = b.z.conjugate();
  a[0] *= -profile.eval(b.x, 1);
  return a;
}

Eigen::MatrixXcd tangent_space_basis(const Profile& profile, const BoundaryPoint& b) {
  const Eigen::Index n = b.dim();
  // Kernel of X -> sum a_k X_k is the orthogonal complement of conj(a).
  const CVector normal = tangent_functional(profile, b).conjugate();
  if (!(normal.norm() > 0.0))
    fail(ErrorKind::Invariant, "defining function has zero gradient");
  const Eigen::MatrixXcd column = normal;
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(column);
  const Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  return q.rightCols(n - 1);
}

double levi_form_restricted(const Profile& profile, const BoundaryPoint& b, const CVector& X) {
  const double f1 = profile.eval(b.x, 1);
  const double s = f1 + profile.eval(b.x, 2) * b.x;
  double sum = 0.0;
  Complex inner = 0.0;
  for (Eigen::Index a = 1; a < X.size(); ++a) {
    sum += std::norm(X[a]);
    inner += std::conj(b.z[a]) * X[a];
  }
  return sum - s / (f1 * f1 * b.x) * std::norm(inner);
}

double restricted_levi_min_eigenvalue(const Profile& profile, const BoundaryPoint& b) {
  const Eigen::MatrixXcd q = tangent_space_basis(profile, b);
  const HermitianMatrix compressed = q.adjoint() * levi_matrix(profile, b) * q;
  return linalg::min_eigenvalue(0.5 * (compressed + compressed.adjoint()));
}

}  // namespace hartogs
