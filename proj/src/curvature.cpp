#include "hartogs/curvature.hpp"

#include <cmath>

#include "hartogs/error.hpp"
#include "hartogs/linalg.hpp"

namespace hartogs {

namespace {

constexpr double kAgreement = 1e-9;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double v_function(const Profile& profile, double x) { return profile.b_function(x); }

double l_function(const Profile& profile, double x) {
  const double f = profile.eval(x, 0);
  const double f1 = profile.eval(x, 1);
  const double f2 = profile.eval(x, 2);
  const double f3 = profile.eval(x, 3);
  const double f4 = profile.eval(x, 4);
  const double v = x * f1 * f1 - f * (f1 + f2 * x);
  if (!(v > 0.0)) fail(ErrorKind::Singular, "V(x) = B(x) is not positive");
  const double v1 = x * f1 * f2 - 2.0 * f * f2 - x * f * f3;
  const double v2 = -f1 * f2 + x * f2 * f2 - 3.0 * f * f3 - x * f * f4;
  return v1 / v + x * (v2 * v - v1 * v1) / (v * v);
}

double g_function(const Profile& profile, double x) {
  return -l_function(profile, x) * profile.eval(x) / profile.b_function(x);
}

HermitianMatrix ricci_tensor(const Profile& profile, const DomainPoint& p, const MetricData& m) {
  const double n1 = static_cast<double>(p.dim() + 1);
  HermitianMatrix ric = -n1 * m.h;
  ric(0, 0) -= l_function(profile, p.x);
  return ric;
}

double scalar_curvature(const Profile& profile, const DomainPoint& p, const MetricData& m) {
  const double n = static_cast<double>(p.dim());
  const double f = profile.eval(p.x);
  const double l = l_function(profile, p.x);
  const double scal = -(m.A / m.B) * f * l - n * (n + 1.0);

  const HermitianMatrix ric = ricci_tensor(profile, p, m);
  const double trace = (m.h_inv * ric).trace().real();
  const double via_g = -n * (n + 1.0) + g_function(profile, p.x) * m.A;

  const double tol = kAgreement * (1.0 + std::abs(scal));
  if (std::abs(trace - scal) > tol || std::abs(via_g - scal) > tol)
    fail(ErrorKind::Invariant, "scalar curvature forms disagree");
  return scal;
}

std::vector<double> generalized_scalar_curvatures(const Profile& profile, const DomainPoint& p,
                                                  const MetricData& m) {
  const int n = static_cast<int>(p.dim());
  const double afl_b = m.A * profile.eval(p.x) * l_function(profile, p.x) / m.B;
  std::vector<double> rho(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    rho[static_cast<std::size_t>(k)] =
        std::pow(n + 1.0, k) * sign * binomial(n - 1, k) *
        (n * (n + 1.0) / (k + 1.0) + afl_b);
  }
  return rho;
}

std::vector<double> rho_fit_nodes(Eigen::Index n) {
  // Largest node n / (2 (n+1)^2) stays below 1 / (2 (n+1)).
  std::vector<double> nodes(static_cast<std::size_t>(n));
  const double tau = 1.0 / (2.0 * (n + 1.0) * (n + 1.0));
  for (Eigen::Index j = 0; j < n; ++j) nodes[static_cast<std::size_t>(j)] = (j + 1.0) * tau;
  return nodes;
}

std::vector<double> rho_oracle(const MetricData& m, const HermitianMatrix& ric) {
  const Eigen::Index n = m.h.rows();
  const double det_h = linalg::lu_determinant(m.h).real();
  if (!(std::abs(det_h) > 0.0)) fail(ErrorKind::Singular, "metric determinant vanishes");
  const std::vector<double> nodes = rho_fit_nodes(n);
  std::vector<double> values(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double t = nodes[j];
    const double ratio = linalg::lu_determinant(m.h + t * ric).real() / det_h;
    values[j] = (ratio - 1.0) / t;
  }
  return linalg::vandermonde_fit(nodes, values).coefficients;
}

CurvatureData compute_curvature(const Profile& profile, const DomainPoint& p, const MetricData& m) {
  CurvatureData c;
  c.ric = ricci_tensor(profile, p, m);
  c.L = l_function(profile, p.x);
  c.G = g_function(profile, p.x);
  c.scal = scalar_curvature(profile, p, m);
  c.rho = generalized_scalar_curvatures(profile, p, m);
  return c;
}

}  // namespace hartogs
