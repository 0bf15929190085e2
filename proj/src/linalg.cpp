#include "hartogs/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hartogs/error.hpp"

namespace hartogs::linalg {

Complex lu_determinant(const HermitianMatrix& m) { return m.partialPivLu().determinant(); }

HermitianMatrix dense_inverse(const HermitianMatrix& m) { return m.partialPivLu().inverse(); }

bool is_positive_definite(const HermitianMatrix& m, double pivot_tol) {
  const Eigen::Index n = m.rows();
  double scale = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, std::abs(m(i, i)));
  if (scale == 0.0) return false;

  HermitianMatrix l = HermitianMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double d = m(j, j).real();
    for (Eigen::Index k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > pivot_tol * scale)) return false;
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      Complex s = m(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return true;
}

double min_eigenvalue(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<HermitianMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double relative_frobenius(const HermitianMatrix& a, const HermitianMatrix& b) {
  return (a - b).norm() / (1.0 + b.norm());
}

double hermitian_defect(const HermitianMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

PolynomialFit vandermonde_fit(std::span<const double> nodes, std::span<const double> values,
                              double max_condition) {
  const auto k = static_cast<Eigen::Index>(nodes.size());
  if (k == 0 || nodes.size() != values.size())
    fail(ErrorKind::Usage, "vandermonde_fit needs matching, nonempty nodes and values");

  double tmax = 0.0;
  for (double t : nodes) tmax = std::max(tmax, std::abs(t));
  if (tmax == 0.0) fail(ErrorKind::Numeric, "vandermonde_fit nodes are all zero");

  Eigen::MatrixXd v(k, k);
  Eigen::VectorXd rhs(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const double s = nodes[i] / tmax;
    double p = 1.0;
    for (Eigen::Index j = 0; j < k; ++j) {
      v(i, j) = p;
      p *= s;
    }
    rhs[i] = values[i];
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(v);
  const auto& sv = svd.singularValues();
  const double cond = sv[k - 1] == 0.0 ? std::numeric_limits<double>::infinity() : sv[0] / sv[k - 1];
  if (!(cond <= max_condition))
    fail(ErrorKind::Numeric, "ill-conditioned Vandermonde system");

  const Eigen::VectorXd c = v.fullPivLu().solve(rhs);
  PolynomialFit fit;
  fit.condition = cond;
  fit.coefficients.resize(static_cast<std::size_t>(k));
  double scale = 1.0;
  for (Eigen::Index j = 0; j < k; ++j) {
    fit.coefficients[static_cast<std::size_t>(j)] = c[j] / scale;
    scale *= tmax;
  }
  return fit;
}

}  // namespace hartogs::linalg
