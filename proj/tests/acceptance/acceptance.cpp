// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).
//
// usage: hartogs_acceptance <path-to-cli> <scratch-dir>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "../support.hpp"
#include "hartogs/boundary.hpp"
#include "hartogs/canonical.hpp"
#include "hartogs/curvature.hpp"
#include "hartogs/linalg.hpp"
#include "hartogs/metric.hpp"
#include "hartogs/scans.hpp"

using namespace hartogs;
using hartogs::testing::builtin_profiles;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
};

constexpr std::size_t kSamples = 50;
constexpr std::uint64_t kSeed = 1;
constexpr double kMinMargin = 0.05;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Runs fn over every (profile, n) of the shared grid.
void for_grid(const std::function<void(const Profile&, std::size_t, const std::vector<DomainPoint>&)>& fn) {
  for (const auto& profile : builtin_profiles())
    for (std::size_t n = 2; n <= 4; ++n) fn(profile, n, sample_interior(profile, n, kSamples, kSeed, kMinMargin));
}

Outcome metric_oracle() {
  double worst = 0.0;
  const auto t0 = std::chrono::steady_clock::now();
  for_grid([&](const Profile& profile, std::size_t, const std::vector<DomainPoint>& pts) {
    for (const auto& p : pts)
      worst = std::max(worst, linalg::relative_frobenius(fd_metric(profile, p), metric_matrix(profile, p.z)));
  });
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst <= 1e-6 && secs <= 10.0,
          "max rel. Frobenius " + sci(worst) + " (<= 1e-6), " + sci(secs) + " s (<= 10 s)"};
}

Outcome determinant_identity() {
  double worst = 0.0;
  for_grid([&](const Profile& profile, std::size_t, const std::vector<DomainPoint>& pts) {
    for (const auto& p : pts) {
      const auto m = assemble_metric(profile, p);
      const double dense = linalg::lu_determinant(m.h).real();
      worst = std::max(worst, std::abs(m.det - dense) / std::abs(dense));
    }
  });
  return {worst <= 1e-10, "max rel. error " + sci(worst) + " (<= 1e-10)"};
}

Outcome inverse_identity() {
  double worst = 0.0;
  for_grid([&](const Profile& profile, std::size_t n, const std::vector<DomainPoint>& pts) {
    const auto N = static_cast<Eigen::Index>(n);
    for (const auto& p : pts) {
      const auto m = assemble_metric(profile, p);
      worst = std::max(worst, (m.h * m.h_inv - HermitianMatrix::Identity(N, N)).norm());
    }
  });
  return {worst <= 1e-10, "max ||h h_inv - I||_F " + sci(worst) + " (<= 1e-10)"};
}

Outcome ricci_identity() {
  double worst = 0.0, tail = 0.0;
  for_grid([&](const Profile& profile, std::size_t n, const std::vector<DomainPoint>& pts) {
    const auto N = static_cast<Eigen::Index>(n);
    for (const auto& p : pts) {
      const auto m = assemble_metric(profile, p);
      const auto ric = ricci_tensor(profile, p, m);
      worst = std::max(worst, linalg::relative_frobenius(fd_ricci(profile, p), ric));
      for (Eigen::Index a = 1; a < N; ++a)
        for (Eigen::Index b = 0; b < N; ++b)
          tail = std::max(tail, std::abs(ric(a, b) + static_cast<double>(n + 1) * m.h(a, b)));
    }
  });
  return {worst <= 1e-5 && tail <= 1e-9,
          "FD rel. " + sci(worst) + " (<= 1e-5), alpha>=1 rows " + sci(tail) + " (<= 1e-9)"};
}

Outcome constant_curvature() {
  double scal_err = 0.0, rho_err = 0.0, rho2_err = 0.0;
  for (const auto& affine : {Profile::affine(1, 1), Profile::affine(2, 3)}) {
    for (std::size_t n = 2; n <= 4; ++n) {
      const double target = -static_cast<double>(n * (n + 1));
      for (const auto& p : sample_interior(affine, n, kSamples, kSeed, kMinMargin)) {
        const auto m = assemble_metric(affine, p);
        const auto c = compute_curvature(affine, p, m);
        scal_err = std::max(scal_err, std::abs(c.scal - target));
        const auto fit = rho_oracle(m, c.ric);
        // L = 0: rho_k = (n+1)^k (-1)^{k+1} C(n-1,k) n(n+1)/(k+1)
        double binom = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k > 0) binom = binom * static_cast<double>(n - k) / static_cast<double>(k);
          const double closed = std::pow(static_cast<double>(n + 1), static_cast<double>(k)) *
                                (k % 2 == 0 ? -1.0 : 1.0) * binom * static_cast<double>(n * (n + 1)) /
                                static_cast<double>(k + 1);
          const double scale = 1.0 + std::abs(closed);
          rho_err = std::max({rho_err, std::abs(fit[k] - closed) / scale, std::abs(c.rho[k] - closed) / scale});
        }
        if (n == 2)
          rho2_err = std::max({rho2_err, std::abs(fit[0] + 6.0), std::abs(fit[1] - 9.0)});
      }
    }
  }
  return {scal_err <= 1e-9 && rho_err <= 1e-8 && rho2_err <= 1e-8,
          "scal + n(n+1) " + sci(scal_err) + " (<= 1e-9), rho vs fit " + sci(rho_err) +
              ", n=2 (-6, 9) " + sci(rho2_err) + " (<= 1e-8)"};
}

Outcome pinned_powercap() {
  const auto pc = Profile::power_cap(2);
  const auto o = make_point(pc, CVector::Zero(2));
  const auto m = assemble_metric(pc, o);
  const auto c = compute_curvature(pc, o, m);
  const auto fit = rho_oracle(m, c.ric);
  const double fd_trace = (m.h_inv * fd_ricci(pc, o)).trace().real();
  const double err = std::max({std::abs(c.scal + 5.0), std::abs(c.rho[0] + 5.0), std::abs(c.rho[1] - 6.0),
                               std::abs(fit[0] + 5.0), std::abs(fit[1] - 6.0)});
  const double fd_err = std::abs(fd_trace + 5.0);
  std::ostringstream os;
  os << "scal " << format_double(c.scal) << ", rho (" << format_double(c.rho[0]) << ", "
     << format_double(c.rho[1]) << "), max dev " << sci(err) << " (<= 1e-6), FD trace dev " << sci(fd_err)
     << " (<= 1e-6)";
  return {err <= 1e-6 && fd_err <= 1e-6, os.str()};
}

bool eligible(const DomainPoint& p) {
  if (p.margin < 0.05) return false;
  for (Eigen::Index i = 1; i < p.dim(); ++i)
    if (std::abs(p.z[0] * p.z[i]) > 1e-12) return true;
  return false;
}

Outcome extremal_rigidity() {
  double affine_worst = 0.0;
  for (const auto& affine : {Profile::affine(1, 1), Profile::affine(2, 3)})
    for (std::size_t n = 2; n <= 4; ++n)
      for (const auto& p : sample_interior(affine, n, kSamples, kSeed, kMinMargin))
        affine_worst = std::max(affine_worst, extremal_residual(affine, p));
  double min_fraction = 1.0;
  for (const auto& profile : {Profile::power_cap(2), Profile::exp_decay(1)}) {
    for (std::size_t n = 2; n <= 4; ++n) {
      std::size_t total = 0, big = 0;
      for (const auto& p : sample_interior(profile, n, kSamples, kSeed, kMinMargin)) {
        if (!eligible(p)) continue;
        ++total;
        big += extremal_residual(profile, p) >= 1e-3;
      }
      min_fraction = std::min(min_fraction, total == 0 ? 0.0 : static_cast<double>(big) / static_cast<double>(total));
    }
  }
  return {affine_worst <= 1e-8 && min_fraction >= 0.9,
          "affine max " + sci(affine_worst) + " (<= 1e-8), non-affine min fraction >= 1e-3: " +
              sci(min_fraction) + " (>= 0.9)"};
}

Outcome soliton_rigidity() {
  double affine_worst = 0.0, rotation_change = 0.0;
  for (const auto& affine : {Profile::affine(1, 1), Profile::affine(2, 3)}) {
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto N = static_cast<Eigen::Index>(n);
      const double lambda = -static_cast<double>(n + 1);
      for (const auto& p : sample_interior(affine, n, kSamples, kSeed, kMinMargin)) {
        const double base = soliton_residual(affine, p, {lambda, HoloVectorField::zero(N)});
        affine_worst = std::max(affine_worst, base);
        for (double c : {0.5, 1.0, 2.5}) {
          const double rot = soliton_residual(affine, p, {lambda, HoloVectorField::rotation(N, c)});
          rotation_change = std::max(rotation_change, std::abs(rot - base));
        }
      }
    }
  }
  const auto pc = Profile::power_cap(2);
  const auto pts = sample_interior(pc, 2, kSamples, kSeed, kMinMargin);
  const auto nearest = *std::min_element(pts.begin(), pts.end(), [](const DomainPoint& a, const DomainPoint& b) {
    return a.z.norm() < b.z.norm();
  });
  const double ein = einstein_residual(pc, nearest);
  const auto o = make_point(pc, CVector::Zero(2));
  const auto m = assemble_metric(pc, o);
  const HermitianMatrix r = ricci_tensor(pc, o, m) + 3.0 * m.h;
  const double obstruction = r(0, 0).real();
  const bool ok = affine_worst <= 1e-8 && ein >= 1e-3 && std::abs(obstruction - 2.0) <= 1e-6 &&
                  rotation_change <= 1e-8;
  return {ok, "affine max " + sci(affine_worst) + " (<= 1e-8), powercap near-origin einstein " + sci(ein) +
                  " (>= 1e-3), (0,0) obstruction " + format_double(obstruction) + " (2 +- 1e-6), rotation change " +
                  sci(rotation_change) + " (<= 1e-8)"};
}

Outcome isometry() {
  double worst = 0.0;
  const std::pair<double, double> cases[] = {{1, 1}, {2, 3}, {0.5, 2}};
  for (const auto& [c1, c2] : cases)
    for (std::size_t n = 2; n <= 4; ++n)
      for (const auto& p : sample_interior(Profile::affine(c1, c2), n, kSamples, kSeed, kMinMargin))
        worst = std::max(worst, pullback_check(c1, c2, p));
  return {worst <= 1e-10, "max pullback distance " + sci(worst) + " (<= 1e-10)"};
}

Outcome levi_equivalence() {
  double worst_pc = Profile::kInfinity;
  for (const auto& profile : builtin_profiles())
    for (std::size_t n = 2; n <= 4; ++n)
      for (const auto& b : sample_boundary(profile, n, 200, kSeed))
        worst_pc = std::min(worst_pc, restricted_levi_min_eigenvalue(profile, b));
  double probe_min = Profile::kInfinity;
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& b : sample_boundary(Profile::constant_probe(), n, 200, kSeed))
      probe_min = std::min(probe_min, restricted_levi_min_eigenvalue(Profile::constant_probe(), b));
  return {worst_pc > 0.0 && probe_min <= 1e-9,
          "pseudoconvex min eigenvalue " + sci(worst_pc) + " (> 0), constant probe min " + sci(probe_min) +
              " (<= 1e-9)"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism(const std::string& cli, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto a = dir / "scan_a.csv";
  const auto b = dir / "scan_b.csv";
  const std::string args = " curvature-scan --profile powercap:2 --n 3 --samples 50 --seed 1 --out ";
  const int ra = std::system(("\"" + cli + "\"" + args + "\"" + a.string() + "\"").c_str());
  const int rb = std::system(("\"" + cli + "\"" + args + "\"" + b.string() + "\"").c_str());
  const std::string sa = slurp(a), sb = slurp(b);
  const bool ok = ra == 0 && rb == 0 && !sa.empty() && sa == sb;
  return {ok, "two curvature-scan runs: " + std::to_string(sa.size()) + " and " + std::to_string(sb.size()) +
                  " bytes, " + (sa == sb ? "identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::fprintf(stderr, "usage: %s <path-to-cli> <scratch-dir>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const std::filesystem::path scratch = argv[2];

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"metric oracle equivalence", metric_oracle},
      {"determinant identity", determinant_identity},
      {"inverse identity", inverse_identity},
      {"ricci identity", ricci_identity},
      {"constant curvature value", constant_curvature},
      {"powercap(2) pinned values at the origin", pinned_powercap},
      {"extremal rigidity", extremal_rigidity},
      {"soliton rigidity", soliton_rigidity},
      {"hyperbolic isometry", isometry},
      {"levi / pseudoconvexity equivalence", levi_equivalence},
      {"curvature-scan determinism", [&] { return determinism(cli, scratch); }},
  };

  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s  [%2zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.summary.c_str());
    std::fflush(stdout);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria failed, %.2f s\n", failed, criteria.size(), secs);
  return failed;
}
