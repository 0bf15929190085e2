// hartogs: command-line front end over the C library.
//
// Exit codes: 0 pass, 1 a check failed, 2 usage or parse error, 3 runtime
// failure (I/O, sampling, numerical breakdown).

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "hartogs/hartogs.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct ProfileDeleter {
  void operator()(hartogs_profile* p) const { hartogs_profile_destroy(p); }
};
struct FieldDeleter {
  void operator()(hartogs_field* f) const { hartogs_field_destroy(f); }
};
struct ReportDeleter {
  void operator()(hartogs_report* r) const { hartogs_report_destroy(r); }
};
using ProfilePtr = std::unique_ptr<hartogs_profile, ProfileDeleter>;
using FieldPtr = std::unique_ptr<hartogs_field, FieldDeleter>;
using ReportPtr = std::unique_ptr<hartogs_report, ReportDeleter>;

// Thrown to unwind with a specific exit code after the message was printed.
struct Exit {
  int code;
};

int exit_code_for(hartogs_status s) {
  switch (s) {
    case HARTOGS_OK: return kExitPass;
    case HARTOGS_E_USAGE:
    case HARTOGS_E_PARSE:
    case HARTOGS_E_NULL: return kExitUsage;
    default: return kExitRuntime;
  }
}

void check(hartogs_status s) {
  if (s == HARTOGS_OK) return;
  std::cerr << "hartogs: " << hartogs_status_name(s) << " error: " << hartogs_last_error() << '\n';
  throw Exit{exit_code_for(s)};
}

struct Args {
  std::string profile;
  std::string profile_positional;
  std::size_t n = 2;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  double tol = -1.0;  // negative: per-command default
  double min_margin = 0.05;
  std::string out = "-";
  std::size_t grid = 1000;
  double lambda = std::nan("");
  std::string field;
  bool sweep = false;
  int degree = 2;
};

ProfilePtr load_profile(const Args& a) {
  std::string text = !a.profile.empty() ? a.profile : a.profile_positional;
  if (text.empty()) {
    std::cerr << "hartogs: a profile is required (--profile or positional)\n";
    throw Exit{kExitUsage};
  }
  if (!a.profile.empty() && !a.profile_positional.empty() && a.profile != a.profile_positional) {
    std::cerr << "hartogs: conflicting profiles '" << a.profile << "' and '"
              << a.profile_positional << "'\n";
    throw Exit{kExitUsage};
  }
  hartogs_profile* raw = nullptr;
  check(hartogs_profile_parse(text.c_str(), &raw));
  return ProfilePtr(raw);
}

hartogs_scan_options scan_options(const Args& a) {
  hartogs_scan_options o = hartogs_default_scan_options();
  o.n = a.n;
  o.samples = a.samples;
  o.seed = a.seed;
  o.min_margin = a.min_margin;
  return o;
}

double column_max(const hartogs_report* r, const char* name, const char* filter = nullptr) {
  std::size_t col = 0;
  check(hartogs_report_find(r, name, &col));
  std::size_t fcol = 0;
  if (filter != nullptr) check(hartogs_report_find(r, filter, &fcol));
  double worst = 0.0;
  for (std::size_t i = 0; i < hartogs_report_rows(r); ++i) {
    double v = 0.0;
    if (filter != nullptr) {
      check(hartogs_report_number(r, i, fcol, &v));
      if (v == 0.0) continue;
    }
    check(hartogs_report_number(r, i, col, &v));
    worst = std::max(worst, v);
  }
  return worst;
}

int cmd_check_pseudoconvex(const Args& a) {
  auto profile = load_profile(a);
  const double tol = a.tol < 0 ? 1e-9 : a.tol;
  int passed = 0;
  double worst = 0.0, worst_x = 0.0;
  check(hartogs_check_pseudoconvex(profile.get(), a.grid, tol, &passed, &worst, &worst_x));
  std::printf("%s min_margin=%.17g at x=%.17g tol=%g %s\n", hartogs_profile_id(profile.get()),
              worst, worst_x, tol, passed ? "PASS" : "FAIL");
  return passed ? kExitPass : kExitFail;
}

int cmd_curvature_scan(const Args& a) {
  auto profile = load_profile(a);
  const auto opts = scan_options(a);
  hartogs_report* raw = nullptr;
  check(hartogs_curvature_scan(profile.get(), &opts, &raw));
  ReportPtr report(raw);
  check(hartogs_report_write_csv(report.get(), a.out.c_str()));
  return kExitPass;
}

int cmd_levi_scan(const Args& a) {
  auto profile = load_profile(a);
  const auto opts = scan_options(a);
  hartogs_report* raw = nullptr;
  check(hartogs_levi_scan(profile.get(), &opts, &raw));
  ReportPtr report(raw);
  check(hartogs_report_write_csv(report.get(), a.out.c_str()));
  std::size_t col = 0;
  check(hartogs_report_find(report.get(), "certified", &col));
  std::size_t certified = 0;
  for (std::size_t i = 0; i < hartogs_report_rows(report.get()); ++i) {
    double v = 0.0;
    check(hartogs_report_number(report.get(), i, col, &v));
    certified += v != 0.0;
  }
  std::cerr << "levi-scan: " << certified << '/' << hartogs_report_rows(report.get())
            << " boundary samples certified strongly pseudoconvex\n";
  return certified == hartogs_report_rows(report.get()) ? kExitPass : kExitFail;
}

int cmd_extremal_residual(const Args& a) {
  auto profile = load_profile(a);
  const auto opts = scan_options(a);
  hartogs_report* raw = nullptr;
  check(hartogs_extremal_scan(profile.get(), &opts, &raw));
  ReportPtr report(raw);
  check(hartogs_report_write_csv(report.get(), a.out.c_str()));
  std::cerr << "extremal-residual: max over eligible samples "
            << column_max(report.get(), "extremal_res", "eligible") << '\n';
  return kExitPass;
}

int cmd_soliton_check(const Args& a) {
  auto profile = load_profile(a);
  const auto opts = scan_options(a);
  if (a.sweep) {
    double lambda = 0.0, floor = 0.0;
    check(hartogs_soliton_sweep(profile.get(), &opts, a.degree, &lambda, &floor));
    std::printf("%s n=%zu degree=%d lambda=%.17g residual_floor=%.17g\n",
                hartogs_profile_id(profile.get()), a.n, a.degree, lambda, floor);
    return kExitPass;
  }
  const double lambda = std::isnan(a.lambda) ? -static_cast<double>(a.n + 1) : a.lambda;
  FieldPtr field;
  if (!a.field.empty()) {
    hartogs_field* raw = nullptr;
    check(hartogs_field_parse(a.field.c_str(), a.n, a.degree, &raw));
    field.reset(raw);
  }
  hartogs_report* raw = nullptr;
  check(hartogs_soliton_scan(profile.get(), &opts, lambda, field.get(), &raw));
  ReportPtr report(raw);
  check(hartogs_report_write_csv(report.get(), a.out.c_str()));
  const double tol = a.tol < 0 ? 1e-8 : a.tol;
  const double worst = column_max(report.get(), "soliton_res");
  const bool ok = worst <= tol;
  std::cerr << "soliton-check: lambda=" << lambda << " max soliton_res=" << worst
            << " tol=" << tol << (ok ? " PASS" : " FAIL") << '\n';
  return ok ? kExitPass : kExitFail;
}

int cmd_verify_theorems(const Args& a) {
  auto profile = load_profile(a);
  const auto opts = scan_options(a);
  hartogs_report* raw = nullptr;
  int all = 0;
  check(hartogs_verify_theorems(profile.get(), &opts, &raw, &all));
  ReportPtr report(raw);
  const hartogs_report* r = report.get();

  std::printf("verify-theorems %s n=%zu samples=%zu seed=%llu\n", hartogs_profile_id(profile.get()),
              a.n, a.samples, static_cast<unsigned long long>(a.seed));
  std::size_t width = 0;
  for (std::size_t i = 0; i < hartogs_report_rows(r); ++i)
    width = std::max(width, std::string(hartogs_report_text(r, i, 0)).size());
  std::vector<std::string> failed;
  for (std::size_t i = 0; i < hartogs_report_rows(r); ++i) {
    const std::string name = hartogs_report_text(r, i, 0);
    const std::string status = hartogs_report_text(r, i, 1);
    const std::string value = hartogs_report_text(r, i, 2);
    double threshold = 0.0;
    check(hartogs_report_number(r, i, 3, &threshold));
    const std::string detail = hartogs_report_text(r, i, 4);
    std::printf("  %-*s  %-12s value=%-24s threshold=%-8g %s\n", static_cast<int>(width),
                name.c_str(), status.c_str(), value.c_str(), threshold, detail.c_str());
    if (status == "FAIL") failed.push_back(name);
  }
  if (a.out != "-") check(hartogs_report_write_csv(r, a.out.c_str()));
  if (all) {
    std::printf("all checks passed\n");
    return kExitPass;
  }
  for (const auto& name : failed) std::fprintf(stderr, "FAILED: %s\n", name.c_str());
  return kExitFail;
}

void add_profile_opts(CLI::App* cmd, Args& a) {
  cmd->add_option("--profile", a.profile, "Profile, e.g. affine:1,1, powercap:2, expdecay:1, rational");
  cmd->add_option("PROFILE", a.profile_positional, "Profile (alternative to --profile)");
}

void add_scan_opts(CLI::App* cmd, Args& a) {
  add_profile_opts(cmd, a);
  cmd->add_option("--n", a.n, "Complex dimension (2..8)")->capture_default_str();
  cmd->add_option("--samples", a.samples, "Number of samples")->capture_default_str();
  cmd->add_option("--seed", a.seed, "RNG seed")->capture_default_str();
  cmd->add_option("--min-margin", a.min_margin, "Minimum interior margin min(A, x0 - x)")
      ->capture_default_str();
  cmd->add_option("--out", a.out, "CSV output path, - for stdout")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kahler geometry of Hartogs domains: scans and verification suites"};
  app.require_subcommand(1);
  Args a;

  auto* pc = app.add_subcommand("check-pseudoconvex", "Margin -(xF'/F)' > tol on a grid");
  add_profile_opts(pc, a);
  pc->add_option("--grid", a.grid, "Grid size on [0, x0)")->capture_default_str();
  pc->add_option("--tol", a.tol, "Margin threshold (default 1e-9)");

  auto* cs = app.add_subcommand("curvature-scan", "Seeded interior samples: det, scal, rho, residuals");
  add_scan_opts(cs, a);

  auto* ls = app.add_subcommand("levi-scan", "Restricted Levi form on boundary samples");
  add_scan_opts(ls, a);

  auto* er = app.add_subcommand("extremal-residual", "Extremal-metric residual on interior samples");
  add_scan_opts(er, a);

  auto* sc = app.add_subcommand("soliton-check", "Kahler-Ricci soliton residual");
  add_scan_opts(sc, a);
  sc->add_option("--lambda", a.lambda, "Soliton constant (default -(n+1))");
  sc->add_option("--field", a.field, "Holomorphic field, e.g. '0,1:1,0|0,1:0,1'");
  sc->add_option("--degree", a.degree, "Maximum polynomial degree of the field")
      ->capture_default_str();
  sc->add_flag("--sweep", a.sweep, "Least-squares fit of (lambda, X) instead of a fixed pair");
  sc->add_option("--tol", a.tol, "Pass threshold on the max residual (default 1e-8)");

  auto* vt = app.add_subcommand("verify-theorems", "Full oracle and invariant suite");
  add_scan_opts(vt, a);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (pc->parsed()) return cmd_check_pseudoconvex(a);
    if (cs->parsed()) return cmd_curvature_scan(a);
    if (ls->parsed()) return cmd_levi_scan(a);
    if (er->parsed()) return cmd_extremal_residual(a);
    if (sc->parsed()) return cmd_soliton_check(a);
    if (vt->parsed()) return cmd_verify_theorems(a);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
