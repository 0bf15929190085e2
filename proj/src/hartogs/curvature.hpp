#pragma once

#include <vector>

#include "hartogs/metric.hpp"

namespace hartogs {

struct CurvatureData {
  HermitianMatrix ric;
  double scal = 0.0;
  double L = 0.0;
  double G = 0.0;
  std::vector<double> rho;  // rho_0 .. rho_{n-1}
};

/// V(x) = x F'^2 - F (F' + F'' x), the same function as B.
double v_function(const Profile& profile, double x);

/// L(x) = d/dx [x d/dx log V(x)] = V'/V + x (V'' V - V'^2) / V^2, with V'
/// and V'' in closed form from F^{(k)}, k <= 4. Throws Error(Singular) for V <= 0.
double l_function(const Profile& profile, double x);

/// G(x) = -L(x) F(x) / B(x).
double g_function(const Profile& profile, double x);

/// Ric = -(n+1) h, with the (0,0) entry further shifted by -L(|z_0|^2).
HermitianMatrix ricci_tensor(const Profile& profile, const DomainPoint& p, const MetricData& m);

/// scal = -(A/B) F L - n(n+1). The trace sum g^{b\bar a} Ric_{a\bar b} and
/// the form -n(n+1) + G A are evaluated alongside; disagreement beyond
/// 1e-9 (1 + |scal|) throws Error(Invariant).
double scalar_curvature(const Profile& profile, const DomainPoint& p, const MetricData& m);

/// rho_k = (n+1)^k (-1)^{k+1} C(n-1, k) [n(n+1)/(k+1) + A F L / B].
std::vector<double> generalized_scalar_curvatures(const Profile& profile, const DomainPoint& p,
                                                  const MetricData& m);

/// Fit of det(h + t Ric) / det(h) = 1 + sum_k rho_k t^{k+1} at n nodes in
/// (0, 1/(2(n+1))), using dense determinants only.
std::vector<double> rho_oracle(const MetricData& m, const HermitianMatrix& ric);

/// Nodes used by rho_oracle for dimension n.
std::vector<double> rho_fit_nodes(Eigen::Index n);

CurvatureData compute_curvature(const Profile& profile, const DomainPoint& p, const MetricData& m);

}  // namespace hartogs
