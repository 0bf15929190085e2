#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hartogs/canonical.hpp"
#include "hartogs/report.hpp"

namespace hartogs {

struct ScanOptions {
  std::size_t n = 2;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  double min_margin = 0.05;
};

/// FD Hessian of -log A at p (the metric oracle). The stencil step is
/// scaled by the point's margin.
HermitianMatrix fd_metric(const Profile& profile, const DomainPoint& p);

/// -d^2 log det h / dz dzbar by FD, with det h from the closed form.
HermitianMatrix fd_ricci(const Profile& profile, const DomainPoint& p);

/// Columns: profile, n, z0_re, z0_im, ..., A, x, det, scal, rho0..rho{n-1},
/// einstein_res, extremal_res. One row per interior sample, in sample order.
Table curvature_scan(const Profile& profile, const ScanOptions& opts);

/// Columns: profile, n, z.., x, defining, margin, levi_min_eig, certified.
Table levi_scan(const Profile& profile, const ScanOptions& opts);

/// Columns: profile, n, z.., A, x, margin, eligible, extremal_res.
/// eligible = 1 when z_0 z_i != 0 for some i and margin >= 0.05.
Table extremal_scan(const Profile& profile, const ScanOptions& opts);

/// Columns: profile, n, z.., A, x, lambda, soliton_res, einstein_res.
Table soliton_scan(const Profile& profile, const ScanOptions& opts, const SolitonParams& params);

SolitonSweepResult soliton_sweep_scan(const Profile& profile, const ScanOptions& opts,
                                      int max_degree);

struct Check {
  std::string name;
  std::string status;  // PASS, PASS-zero, PASS-nonzero, FAIL, SKIP
  double value = 0.0;
  double threshold = 0.0;
  std::string detail;

  bool failed() const { return status == "FAIL"; }
};

struct Verification {
  std::vector<Check> checks;

  bool all_passed() const;
  /// Columns: check, status, value, threshold, detail.
  Table table() const;
};

/// Full oracle and invariant suite on `samples` interior and boundary
/// points; see README for the list of checks.
Verification verify_theorems(const Profile& profile, const ScanOptions& opts);

}  // namespace hartogs
