#pragma once

#include <functional>

#include "hartogs/types.hpp"

// Finite-difference Wirtinger calculus on C^n, used as the independent
// oracle for every closed-form metric and curvature formula.
//
//   d/dz_a    = 1/2 (d/du_a - i d/dv_a)
//   d/dzbar_a = 1/2 (d/du_a + i d/dv_a),   z_a = u_a + i v_a
namespace hartogs::wirtinger {

using ComplexField = std::function<Complex(const CVector&)>;
using RealField = std::function<double(const CVector&)>;

struct ComplexStencil {
  /// Base step per real coordinate; the effective step is step * (1 + |z_a|).
  double step = 1e-4;

  double step_at(Complex coord) const { return step * (1.0 + std::abs(coord)); }

  /// Base step shrunk by min(1, margin) for fields singular at distance
  /// `margin` (e.g. -log A near the boundary of D_F).
  static ComplexStencil for_margin(double margin, double base = 1e-4) {
    return {base * (margin < 1.0 ? margin : 1.0)};
  }
};

/// Second-order central estimate of df/dz_a. Throws Error(Numeric) when the
/// stencil produces a non-finite value.
Complex d_z(const ComplexField& f, const CVector& point, Eigen::Index a,
            const ComplexStencil& stencil = {});

/// Second-order central estimate of df/dzbar_a.
Complex d_zbar(const ComplexField& f, const CVector& point, Eigen::Index a,
               const ComplexStencil& stencil = {});

/// Mixed Hessian (d^2 f / dz_a dzbar_b) of a real field, symmetrized to be
/// exactly Hermitian.
HermitianMatrix hessian_z_zbar(const RealField& f, const CVector& point,
                               const ComplexStencil& stencil = {});

/// Derivative of f along the real vector field
/// sum_k (v_k d/dz_k + conj(v_k) d/dzbar_k), i.e. d/dt f(point + t v) at
/// t = 0, by the fourth-order four-point central difference. The step is
/// chosen so that |t v| = step * (1 + |point|).
template <typename Value, typename Field>
Value directional(const Field& f, const CVector& point, const CVector& v, double step = 1e-4) {
  const double vnorm = v.norm();
  if (vnorm == 0.0) return Value(f(point)) * 0.0;
  const double t = step * (1.0 + point.norm()) / vnorm;
  const Value p1 = f(CVector(point + t * v));
  const Value m1 = f(CVector(point - t * v));
  const Value p2 = f(CVector(point + 2.0 * t * v));
  const Value m2 = f(CVector(point - 2.0 * t * v));
  return (8.0 * (p1 - m1) - (p2 - m2)) / (12.0 * t);
}

}  // namespace hartogs::wirtinger
