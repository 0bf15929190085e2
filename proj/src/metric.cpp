#include "hartogs/metric.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hartogs/error.hpp"
#include "hartogs/random.hpp"

namespace hartogs {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSingularB = 1e-14;
constexpr int kMaxAttempts = 100000;

double tail_norm2(const CVector& z) {
  double s = 0.0;
  for (Eigen::Index a = 1; a < z.size(); ++a) s += std::norm(z[a]);
  return s;
}

}  // namespace

void check_dimension(std::size_t n) {
  if (n < kMinDimension || n > kMaxDimension) {
    std::ostringstream os;
    os << "dimension n = " << n << " outside [" << kMinDimension << ", " << kMaxDimension << "]";
    fail(ErrorKind::Usage, os.str());
  }
}

double defining_a(const Profile& profile, const CVector& z) {
  const double x = std::norm(z[0]);
  if (!(x < profile.x0())) return kNaN;
  return profile.eval(x) - tail_norm2(z);
}

double kahler_potential(const Profile& profile, const CVector& z) {
  const double a = defining_a(profile, z);
  return a > 0.0 ? -std::log(a) : kNaN;
}

std::optional<DomainPoint> contains(const Profile& profile, const CVector& z) {
  if (z.size() < 1) return std::nullopt;
  for (Eigen::Index a = 0; a < z.size(); ++a)
    if (!std::isfinite(z[a].real()) || !std::isfinite(z[a].imag())) return std::nullopt;
  const double x = std::norm(z[0]);
  if (!(x < profile.x0())) return std::nullopt;
  const double a = profile.eval(x) - tail_norm2(z);
  if (!(a > 0.0)) return std::nullopt;
  DomainPoint p;
  p.z = z;
  p.x = x;
  p.A = a;
  p.margin = std::min(a, profile.x0() - x);
  return p;
}

DomainPoint make_point(const Profile& profile, const CVector& z) {
  auto p = contains(profile, z);
  if (!p) fail(ErrorKind::Domain, "point is not in the interior of D_F for " + profile.id());
  return *p;
}

HermitianMatrix metric_matrix(const Profile& profile, const CVector& z) {
  const Eigen::Index n = z.size();
  const double x = std::norm(z[0]);
  const double f = profile.eval(x, 0);
  const double f1 = profile.eval(x, 1);
  const double f2 = profile.eval(x, 2);
  const double a = f - tail_norm2(z);
  const double c = f1 * f1 * x - (f2 * x + f1) * a;
  const double inv_a2 = 1.0 / (a * a);

  HermitianMatrix h(n, n);
  h(0, 0) = c * inv_a2;
  for (Eigen::Index b = 1; b < n; ++b) {
    h(0, b) = -f1 * std::conj(z[0]) * z[b] * inv_a2;
    h(b, 0) = std::conj(h(0, b));
  }
  for (Eigen::Index i = 1; i < n; ++i) {
    h(i, i) = (a + std::norm(z[i])) * inv_a2;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      h(i, j) = std::conj(z[i]) * z[j] * inv_a2;
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

MetricData assemble_metric(const Profile& profile, const DomainPoint& p) {
  if (!(p.margin > 0.0)) fail(ErrorKind::Domain, "metric requested at a non-interior point");
  const Eigen::Index n = p.dim();
  const double x = p.x;
  const double f = profile.eval(x, 0);
  const double f1 = profile.eval(x, 1);
  const double f2 = profile.eval(x, 2);
  const double a = p.A;
  const double s = f1 + f2 * x;
  const double b = f1 * f1 * x - f * s;
  if (std::abs(b) < kSingularB) fail(ErrorKind::Singular, "B(|z_0|^2) vanishes");

  MetricData m;
  m.A = a;
  m.B = b;
  m.C = f1 * f1 * x - s * a;
  m.h = metric_matrix(profile, p.z);
  m.det = metric_determinant(profile, p);

  const double ab = a / b;
  HermitianMatrix inv(n, n);
  inv(0, 0) = ab * f;
  for (Eigen::Index beta = 1; beta < n; ++beta) {
    inv(beta, 0) = ab * f1 * p.z[0] * std::conj(p.z[beta]);
    inv(0, beta) = std::conj(inv(beta, 0));
  }
  for (Eigen::Index beta = 1; beta < n; ++beta) {
    for (Eigen::Index alpha = 1; alpha < n; ++alpha) {
      if (alpha == beta)
        inv(beta, beta) = ab * (b + s * std::norm(p.z[beta]));
      else
        inv(beta, alpha) = ab * s * p.z[alpha] * std::conj(p.z[beta]);
    }
  }
  m.h_inv = std::move(inv);
  return m;
}

double metric_determinant(const Profile& profile, const DomainPoint& p) {
  const double f = profile.eval(p.x);
  return f * f * profile.pseudoconvexity_margin(p.x) /
         std::pow(p.A, static_cast<double>(p.dim() + 1));
}

double metric_determinant_at(const Profile& profile, const CVector& z) {
  const double a = defining_a(profile, z);
  if (!(a > 0.0)) return kNaN;
  const double x = std::norm(z[0]);
  const double f = profile.eval(x);
  return f * f * profile.pseudoconvexity_margin(x) / std::pow(a, static_cast<double>(z.size() + 1));
}

std::vector<DomainPoint> sample_interior(const Profile& profile, std::size_t n,
                                         std::size_t count, std::uint64_t seed,
                                         double min_margin) {
  check_dimension(n);
  if (count == 0) fail(ErrorKind::Usage, "sample count must be positive");
  if (!(min_margin >= 0.0)) fail(ErrorKind::Usage, "min_margin must be non-negative");

  // Admissible |z_0|^2 range: F(x) >= min_margin and x0 - x >= min_margin.
  double x_hi = profile.sampling_cap();
  if (profile.bounded()) x_hi = std::min(x_hi, profile.x0() - min_margin);
  if (x_hi > 0.0 && profile.eval(x_hi) < min_margin) {
    double lo = 0.0;
    double hi = x_hi;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      (profile.eval(mid) >= min_margin ? lo : hi) = mid;
    }
    x_hi = lo;
  }
  x_hi = std::max(x_hi, 0.0);

  Rng rng(seed);
  const auto dim = static_cast<Eigen::Index>(n);
  const int tail_real_dim = 2 * (static_cast<int>(n) - 1);
  std::vector<DomainPoint> out;
  out.reserve(count);
  int attempts = 0;
  while (out.size() < count) {
    if (++attempts > kMaxAttempts)
      fail(ErrorKind::Sampling, "no admissible interior point found in 1e5 attempts for " +
                                    profile.id());
    const double x = rng.uniform(0.0, x_hi);
    const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    CVector z(dim);
    z[0] = std::polar(std::sqrt(x), phase);

    const double room = profile.eval(x) - min_margin;
    Eigen::VectorXd g(tail_real_dim);
    for (int k = 0; k < tail_real_dim; ++k) g[k] = rng.normal();
    const double radius =
        room > 0.0 ? std::sqrt(room) * std::pow(rng.uniform(), 1.0 / tail_real_dim) : 0.0;
    const double gn = g.norm();
    for (Eigen::Index a = 1; a < dim; ++a) {
      const double scale = gn > 0.0 ? radius / gn : 0.0;
      z[a] = Complex(g[2 * (a - 1)] * scale, g[2 * (a - 1) + 1] * scale);
    }

    auto p = contains(profile, z);
    if (!p || p->margin < min_margin) continue;
    out.push_back(std::move(*p));
    attempts = 0;
  }
  return out;
}

}  // namespace hartogs
