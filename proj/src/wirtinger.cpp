#include "hartogs/wirtinger.hpp"

#include <cmath>
#include <sstream>

#include "hartogs/error.hpp"

namespace hartogs::wirtinger {

namespace {

// Real coordinate r in 0..2n-1: even r is Re z_{r/2}, odd r is Im z_{r/2}.
CVector shifted(const CVector& p, Eigen::Index r, double t) {
  CVector q = p;
  const Eigen::Index a = r / 2;
  q[a] += (r % 2 == 0) ? Complex(t, 0.0) : Complex(0.0, t);
  return q;
}

template <typename T>
T checked(T value) {
  if (!std::isfinite(std::real(value)) || !std::isfinite(std::imag(value)))
    fail(ErrorKind::Numeric, "non-finite field value on finite-difference stencil");
  return value;
}

Complex partial_real(const ComplexField& f, const CVector& p, Eigen::Index r, double h) {
  return (checked(f(shifted(p, r, h))) - checked(f(shifted(p, r, -h)))) / (2.0 * h);
}

}  // namespace

Complex d_z(const ComplexField& f, const CVector& point, Eigen::Index a,
            const ComplexStencil& stencil) {
  const double h = stencil.step_at(point[a]);
  const Complex du = partial_real(f, point, 2 * a, h);
  const Complex dv = partial_real(f, point, 2 * a + 1, h);
  return 0.5 * (du - Complex(0.0, 1.0) * dv);
}

Complex d_zbar(const ComplexField& f, const CVector& point, Eigen::Index a,
               const ComplexStencil& stencil) {
  const double h = stencil.step_at(point[a]);
  const Complex du = partial_real(f, point, 2 * a, h);
  const Complex dv = partial_real(f, point, 2 * a + 1, h);
  return 0.5 * (du + Complex(0.0, 1.0) * dv);
}

HermitianMatrix hessian_z_zbar(const RealField& f, const CVector& point,
                               const ComplexStencil& stencil) {
  const Eigen::Index n = point.size();
  const Eigen::Index m = 2 * n;
  Eigen::VectorXd h(m);
  for (Eigen::Index r = 0; r < m; ++r) h[r] = stencil.step_at(point[r / 2]);

  auto eval = [&](const CVector& q) { return checked(f(q)); };
  const double f0 = eval(point);

  // Real Hessian over (u_0, v_0, u_1, v_1, ...).
  Eigen::MatrixXd hr(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    const CVector pp = shifted(point, r, h[r]);
    const CVector pm = shifted(point, r, -h[r]);
    hr(r, r) = (eval(pp) - 2.0 * f0 + eval(pm)) / (h[r] * h[r]);
    for (Eigen::Index s = r + 1; s < m; ++s) {
      const double fpp = eval(shifted(pp, s, h[s]));
      const double fpm = eval(shifted(pp, s, -h[s]));
      const double fmp = eval(shifted(pm, s, h[s]));
      const double fmm = eval(shifted(pm, s, -h[s]));
      hr(r, s) = hr(s, r) = (fpp - fpm - fmp + fmm) / (4.0 * h[r] * h[s]);
    }
  }

  // d^2/dz_a dzbar_b = 1/4 [(u_a u_b + v_a v_b) + i (u_a v_b - v_a u_b)]
  HermitianMatrix out(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const double re = hr(2 * a, 2 * b) + hr(2 * a + 1, 2 * b + 1);
      const double im = hr(2 * a, 2 * b + 1) - hr(2 * a + 1, 2 * b);
      out(a, b) = 0.25 * Complex(re, im);
    }
  }
  HermitianMatrix sym = 0.5 * (out + out.adjoint());
  for (Eigen::Index a = 0; a < n; ++a) {
    sym(a, a) = Complex(sym(a, a).real(), 0.0);
    for (Eigen::Index b = a + 1; b < n; ++b) sym(b, a) = std::conj(sym(a, b));
  }
  return sym;
}

}  // namespace hartogs::wirtinger
