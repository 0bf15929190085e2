#include "hartogs/scans.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hartogs/boundary.hpp"
#include "hartogs/curvature.hpp"
#include "hartogs/error.hpp"
#include "hartogs/linalg.hpp"
#include "hartogs/tolerances.hpp"
#include "hartogs/wirtinger.hpp"

namespace hartogs {

namespace {

void check_options(const ScanOptions& opts, bool interior) {
  check_dimension(opts.n);
  if (opts.samples == 0) fail(ErrorKind::Usage, "--samples must be positive");
  if (interior && !(opts.min_margin >= tolerance::kMinScanMargin)) {
    std::ostringstream os;
    os << "--min-margin must be at least " << tolerance::kMinScanMargin;
    fail(ErrorKind::Usage, os.str());
  }
}

std::vector<std::string> point_columns(std::size_t n) {
  std::vector<std::string> cols;
  for (std::size_t a = 0; a < n; ++a) {
    cols.push_back("z" + std::to_string(a) + "_re");
    cols.push_back("z" + std::to_string(a) + "_im");
  }
  return cols;
}

std::vector<std::string> head_columns(std::size_t n) {
  std::vector<std::string> cols{"profile", "n"};
  auto pc = point_columns(n);
  cols.insert(cols.end(), pc.begin(), pc.end());
  return cols;
}

std::vector<Cell> head_cells(const Profile& profile, const CVector& z) {
  std::vector<Cell> row{profile.id(), static_cast<std::int64_t>(z.size())};
  for (Eigen::Index a = 0; a < z.size(); ++a) {
    row.emplace_back(z[a].real());
    row.emplace_back(z[a].imag());
  }
  return row;
}

bool eligible_for_nonzero(const DomainPoint& p) {
  if (p.margin < tolerance::kEligibleMargin) return false;
  for (Eigen::Index i = 1; i < p.dim(); ++i)
    if (std::abs(p.z[0] * p.z[i]) > 1e-12) return true;
  return false;
}

// Zero/nonzero classification of a residual family against the theorem's
// prediction for this profile.
Check classify(std::string name, const Profile& profile, const std::vector<DomainPoint>& pts,
               const std::vector<double>& residuals) {
  Check c;
  c.name = std::move(name);
  if (profile.is_affine()) {
    c.value = *std::max_element(residuals.begin(), residuals.end());
    c.threshold = tolerance::kResidualZero;
    c.status = c.value <= c.threshold ? "PASS-zero" : "FAIL";
    c.detail = "max residual (affine profile: expected zero)";
    return c;
  }
  std::size_t eligible = 0;
  std::size_t big = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!eligible_for_nonzero(pts[i])) continue;
    ++eligible;
    if (residuals[i] >= tolerance::kResidualNonzero) ++big;
  }
  c.value = eligible == 0 ? 0.0 : static_cast<double>(big) / static_cast<double>(eligible);
  c.threshold = tolerance::kNonzeroFraction;
  c.status = eligible > 0 && c.value >= c.threshold ? "PASS-nonzero" : "FAIL";
  std::ostringstream os;
  os << "fraction of " << eligible << " eligible samples with residual >= "
     << tolerance::kResidualNonzero << " (non-affine profile: expected nonzero)";
  c.detail = os.str();
  return c;
}

Check bound_check(std::string name, double value, double threshold, std::string detail) {
  Check c{std::move(name), value <= threshold ? "PASS" : "FAIL", value, threshold,
          std::move(detail)};
  return c;
}

}  // namespace

HermitianMatrix fd_metric(const Profile& profile, const DomainPoint& p) {
  return wirtinger::hessian_z_zbar([&](const CVector& q) { return kahler_potential(profile, q); },
                                   p.z, wirtinger::ComplexStencil::for_margin(p.margin));
}

HermitianMatrix fd_ricci(const Profile& profile, const DomainPoint& p) {
  return -wirtinger::hessian_z_zbar(
      [&](const CVector& q) { return std::log(metric_determinant_at(profile, q)); }, p.z,
      wirtinger::ComplexStencil::for_margin(p.margin));
}

Table curvature_scan(const Profile& profile, const ScanOptions& opts) {
  check_options(opts, true);
  const auto pts = sample_interior(profile, opts.n, opts.samples, opts.seed, opts.min_margin);
  Table t;
  t.columns = head_columns(opts.n);
  for (const char* c : {"A", "x", "det", "scal"}) t.columns.emplace_back(c);
  for (std::size_t k = 0; k < opts.n; ++k) t.columns.push_back("rho" + std::to_string(k));
  t.columns.emplace_back("einstein_res");
  t.columns.emplace_back("extremal_res");

  for (const auto& p : pts) {
    const MetricData m = assemble_metric(profile, p);
    const CurvatureData c = compute_curvature(profile, p, m);
    auto row = head_cells(profile, p.z);
    row.emplace_back(p.A);
    row.emplace_back(p.x);
    row.emplace_back(m.det);
    row.emplace_back(c.scal);
    for (double r : c.rho) row.emplace_back(r);
    row.emplace_back(einstein_residual(profile, p));
    row.emplace_back(extremal_residual(profile, p));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table levi_scan(const Profile& profile, const ScanOptions& opts) {
  check_options(opts, false);
  const auto pts = sample_boundary(profile, opts.n, opts.samples, opts.seed);
  Table t;
  t.columns = head_columns(opts.n);
  for (const char* c : {"x", "defining", "margin", "levi_min_eig", "certified"})
    t.columns.emplace_back(c);
  for (const auto& b : pts) {
    const double eig = restricted_levi_min_eigenvalue(profile, b);
    auto row = head_cells(profile, b.z);
    row.emplace_back(b.x);
    row.emplace_back(defining_function(profile, b.z));
    row.emplace_back(profile.pseudoconvexity_margin(b.x));
    row.emplace_back(eig);
    row.emplace_back(static_cast<std::int64_t>(eig > tolerance::kPseudoconvex ? 1 : 0));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table extremal_scan(const Profile& profile, const ScanOptions& opts) {
  check_options(opts, true);
  const auto pts = sample_interior(profile, opts.n, opts.samples, opts.seed, opts.min_margin);
  Table t;
  t.columns = head_columns(opts.n);
  for (const char* c : {"A", "x", "margin", "eligible", "extremal_res"}) t.columns.emplace_back(c);
  for (const auto& p : pts) {
    auto row = head_cells(profile, p.z);
    row.emplace_back(p.A);
    row.emplace_back(p.x);
    row.emplace_back(p.margin);
    row.emplace_back(static_cast<std::int64_t>(eligible_for_nonzero(p) ? 1 : 0));
    row.emplace_back(extremal_residual(profile, p));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table soliton_scan(const Profile& profile, const ScanOptions& opts, const SolitonParams& params) {
  check_options(opts, true);
  if (params.field.dim() != 0 && params.field.dim() != static_cast<Eigen::Index>(opts.n))
    fail(ErrorKind::Usage, "vector field dimension does not match --n");
  const auto pts = sample_interior(profile, opts.n, opts.samples, opts.seed, opts.min_margin);
  Table t;
  t.columns = head_columns(opts.n);
  for (const char* c : {"A", "x", "lambda", "soliton_res", "einstein_res"}) t.columns.emplace_back(c);
  for (const auto& p : pts) {
    auto row = head_cells(profile, p.z);
    row.emplace_back(p.A);
    row.emplace_back(p.x);
    row.emplace_back(params.lambda);
    row.emplace_back(soliton_residual(profile, p, params));
    row.emplace_back(einstein_residual(profile, p));
    t.rows.push_back(std::move(row));
  }
  return t;
}

SolitonSweepResult soliton_sweep_scan(const Profile& profile, const ScanOptions& opts,
                                      int max_degree) {
  check_options(opts, true);
  const auto pts = sample_interior(profile, opts.n, opts.samples, opts.seed, opts.min_margin);
  return soliton_sweep(profile, pts, max_degree);
}

bool Verification::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.failed(); });
}

Table Verification::table() const {
  Table t;
  t.columns = {"check", "status", "value", "threshold", "detail"};
  for (const auto& c : checks) t.rows.push_back({c.name, c.status, c.value, c.threshold, c.detail});
  return t;
}

Verification verify_theorems(const Profile& profile, const ScanOptions& opts) {
  check_options(opts, true);
  const auto n = static_cast<Eigen::Index>(opts.n);
  const double n1 = static_cast<double>(n + 1);
  Verification v;

  {
    const auto grid = margin_grid(profile, tolerance::kPseudoconvexGrid);
    const auto rep = is_strongly_pseudoconvex(profile, grid, tolerance::kPseudoconvex);
    std::ostringstream os;
    os << "min of -(xF'/F)' over " << grid.size() << " grid points, at x = " << rep.worst_x;
    v.checks.push_back({"pseudoconvex_margin", rep.strongly_pseudoconvex ? "PASS" : "FAIL",
                        rep.worst_margin, tolerance::kPseudoconvex, os.str()});
  }

  const auto pts = sample_interior(profile, opts.n, opts.samples, opts.seed, opts.min_margin);

  double metric_err = 0.0, det_err = 0.0, inv_err = 0.0, minor_err = 0.0;
  double ricci_err = 0.0, tail_err = 0.0, scal_err = 0.0, rho_err = 0.0;
  std::size_t pd_mismatch = 0;
  std::vector<double> extremal, einstein;
  double soliton_gap = 0.0, rotation_gap = 0.0;

  for (const auto& p : pts) {
    const MetricData m = assemble_metric(profile, p);
    const HermitianMatrix eye = HermitianMatrix::Identity(n, n);

    metric_err = std::max(metric_err, linalg::relative_frobenius(fd_metric(profile, p), m.h));
    const double dense_det = linalg::lu_determinant(m.h).real();
    det_err = std::max(det_err, std::abs(m.det - dense_det) / (1.0 + std::abs(dense_det)));
    inv_err = std::max(inv_err, (m.h * m.h_inv - eye).norm());

    const bool pd = linalg::is_positive_definite(m.h);
    if (pd != (profile.pseudoconvexity_margin(p.x) > 0.0)) ++pd_mismatch;

    const HermitianMatrix scaled = m.A * m.A * m.h;
    for (Eigen::Index a = 1; a < n; ++a) {
      double tail = 0.0;
      for (Eigen::Index k = a; k < n; ++k) tail += std::norm(p.z[k]);
      const double expected =
          std::pow(m.A, static_cast<double>(n - a)) + std::pow(m.A, static_cast<double>(n - a - 1)) * tail;
      const double got = linalg::lu_determinant(scaled.bottomRightCorner(n - a, n - a)).real();
      minor_err = std::max(minor_err, std::abs(got - expected) / (1.0 + std::abs(expected)));
    }

    const CurvatureData c = compute_curvature(profile, p, m);
    ricci_err = std::max(ricci_err, linalg::relative_frobenius(fd_ricci(profile, p), c.ric));
    for (Eigen::Index a = 1; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b)
        tail_err = std::max(tail_err, std::abs(c.ric(a, b) + n1 * m.h(a, b)));

    const double trace = (m.h_inv * c.ric).trace().real();
    const double via_g = -static_cast<double>(n) * n1 + c.G * m.A;
    scal_err = std::max({scal_err, std::abs(trace - c.scal), std::abs(via_g - c.scal),
                         std::abs(c.rho[0] - c.scal)});

    const auto fit = rho_oracle(m, c.ric);
    for (std::size_t k = 0; k < fit.size(); ++k)
      rho_err = std::max(rho_err, std::abs(fit[k] - c.rho[k]) / (1.0 + std::abs(c.rho[k])));

    extremal.push_back(extremal_residual(profile, p));
    const double ein = einstein_residual(profile, p);
    einstein.push_back(ein);
    const double sol = soliton_residual(profile, p, {-n1, HoloVectorField::zero(n)});
    soliton_gap = std::max(soliton_gap, std::abs(sol - ein));
    if (profile.is_affine()) {
      const double rot = soliton_residual(profile, p, {-n1, HoloVectorField::rotation(n, 0.7)});
      rotation_gap = std::max(rotation_gap, std::abs(rot - sol));
    }
  }

  v.checks.push_back(bound_check("metric_vs_fd", metric_err, tolerance::kMetricVsFd,
                                 "closed-form h vs FD Hessian of -log A, relative Frobenius"));
  v.checks.push_back(bound_check("determinant", det_err, tolerance::kDeterminant,
                                 "closed-form det vs dense LU, relative"));
  v.checks.push_back(bound_check("inverse", inv_err, tolerance::kInverse,
                                 "||h h_inv - I||_F with closed-form inverse"));
  v.checks.push_back(bound_check("principal_minors", minor_err, tolerance::kPrincipalMinor,
                                 "trailing minors of A^2 h vs A^{n-a} + A^{n-a-1} sum |z_k|^2"));
  v.checks.push_back(bound_check("positive_definite", static_cast<double>(pd_mismatch), 0.0,
                                 "samples where Cholesky success disagrees with margin > 0"));
  v.checks.push_back(bound_check("ricci_vs_fd", ricci_err, tolerance::kRicciVsFd,
                                 "closed-form Ric vs FD of -log det h, relative Frobenius"));
  v.checks.push_back(bound_check("ricci_tail", tail_err, tolerance::kRicciTail,
                                 "max |Ric_{a b} + (n+1) g_{a b}| over rows a >= 1"));
  v.checks.push_back(bound_check("scalar_forms", scal_err, tolerance::kScalarForms,
                                 "max disagreement of closed, trace, G and rho_0 forms"));
  v.checks.push_back(bound_check("rho_vs_fit", rho_err, tolerance::kRhoFit,
                                 "closed-form rho_k vs det-ratio polynomial fit, relative"));

  {
    const auto bpts = sample_boundary(profile, opts.n, opts.samples, opts.seed);
    double worst = Profile::kInfinity;
    std::size_t mismatch = 0;
    for (const auto& b : bpts) {
      const double eig = restricted_levi_min_eigenvalue(profile, b);
      worst = std::min(worst, eig);
      const bool levi_ok = eig > tolerance::kPseudoconvex;
      const bool margin_ok = profile.pseudoconvexity_margin(b.x) > tolerance::kPseudoconvex;
      if (levi_ok != margin_ok) ++mismatch;
    }
    std::ostringstream os;
    os << "min restricted Levi eigenvalue " << format_double(worst) << " over " << bpts.size()
       << " boundary samples; count of samples where Levi and margin tests disagree";
    Check c = bound_check("levi_equivalence", static_cast<double>(mismatch), 0.0, os.str());
    if (!c.failed() && !(worst > tolerance::kPseudoconvex)) c.status = "FAIL";
    v.checks.push_back(std::move(c));
  }

  v.checks.push_back(classify("extremal_residual", profile, pts, extremal));
  v.checks.push_back(classify("einstein_residual", profile, pts, einstein));
  v.checks.push_back(bound_check("soliton_matches_einstein", soliton_gap, tolerance::kResidualZero,
                                 "|soliton(lambda=-(n+1), X=0) - einstein| residual gap"));

  if (profile.is_affine()) {
    v.checks.push_back(bound_check("soliton_rotation_invariance", rotation_gap,
                                   tolerance::kResidualZero,
                                   "change of soliton residual under a rotation field"));
    const auto [c1, c2] = profile.affine_coefficients();
    double worst = 0.0;
    for (const auto& p : pts) worst = std::max(worst, pullback_check(c1, c2, p));
    v.checks.push_back(bound_check("hyperbolic_pullback", worst, tolerance::kPullback,
                                   "relative Frobenius distance of phi^* g_hyp to g_F"));
  } else {
    v.checks.push_back({"soliton_rotation_invariance", "SKIP", 0.0, tolerance::kResidualZero,
                        "profile is not affine"});
    v.checks.push_back({"hyperbolic_pullback", "SKIP", 0.0, tolerance::kPullback,
                        "profile is not affine"});
  }
  return v;
}

}  // namespace hartogs
