#include "hartogs/hartogs.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>

#include "hartogs/boundary.hpp"
#include "hartogs/canonical.hpp"
#include "hartogs/curvature.hpp"
#include "hartogs/error.hpp"
#include "hartogs/metric.hpp"
#include "hartogs/profile.hpp"
#include "hartogs/report.hpp"
#include "hartogs/scans.hpp"

struct hartogs_profile {
  hartogs::Profile value;
  std::string id;
};

struct hartogs_field {
  hartogs::HoloVectorField value;
};

struct hartogs_report {
  hartogs::Table value;
  mutable std::string scratch;
};

namespace {

thread_local std::string g_last_error;

hartogs_status status_of(hartogs::ErrorKind kind) {
  using hartogs::ErrorKind;
  switch (kind) {
    case ErrorKind::Domain: return HARTOGS_E_DOMAIN;
    case ErrorKind::Singular: return HARTOGS_E_SINGULAR;
    case ErrorKind::Numeric: return HARTOGS_E_NUMERIC;
    case ErrorKind::Usage: return HARTOGS_E_USAGE;
    case ErrorKind::Parse: return HARTOGS_E_PARSE;
    case ErrorKind::Sampling: return HARTOGS_E_SAMPLING;
    case ErrorKind::Io: return HARTOGS_E_IO;
    case ErrorKind::Invariant: return HARTOGS_E_INVARIANT;
  }
  return HARTOGS_E_INTERNAL;
}

hartogs_status set_error(hartogs_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
hartogs_status guarded(Body&& body) {
  g_last_error.clear();
  try {
    body();
    return HARTOGS_OK;
  } catch (const hartogs::Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(HARTOGS_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(HARTOGS_E_INTERNAL, e.what());
  } catch (...) {
    return set_error(HARTOGS_E_INTERNAL, "unknown exception");
  }
}

void require(const void* ptr, const char* name) {
  if (ptr == nullptr) throw hartogs::Error(hartogs::ErrorKind::Usage, std::string(name) + " is null");
}

hartogs::CVector read_point(std::size_t n, const double* z) {
  hartogs::check_dimension(n);
  require(z, "z");
  hartogs::CVector out(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) out(static_cast<Eigen::Index>(k)) = {z[2 * k], z[2 * k + 1]};
  return out;
}

hartogs::ScanOptions read_options(const hartogs_scan_options* options) {
  hartogs::ScanOptions out;
  if (options != nullptr) {
    out.n = options->n;
    out.samples = options->samples;
    out.seed = options->seed;
    out.min_margin = options->min_margin;
  }
  return out;
}

hartogs_report* make_report(hartogs::Table table) {
  return new hartogs_report{std::move(table), {}};
}

}  // namespace

extern "C" {

const char* hartogs_version(void) { return "0.1.0"; }

const char* hartogs_status_name(hartogs_status status) {
  switch (status) {
    case HARTOGS_OK: return "ok";
    case HARTOGS_E_DOMAIN: return "domain";
    case HARTOGS_E_SINGULAR: return "singular";
    case HARTOGS_E_NUMERIC: return "numeric";
    case HARTOGS_E_USAGE: return "usage";
    case HARTOGS_E_PARSE: return "parse";
    case HARTOGS_E_SAMPLING: return "sampling";
    case HARTOGS_E_IO: return "io";
    case HARTOGS_E_INVARIANT: return "invariant";
    case HARTOGS_E_NULL: return "null";
    case HARTOGS_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* hartogs_last_error(void) { return g_last_error.c_str(); }

hartogs_scan_options hartogs_default_scan_options(void) {
  const hartogs::ScanOptions d;
  return {d.n, d.samples, d.seed, d.min_margin};
}

hartogs_status hartogs_profile_parse(const char* text, hartogs_profile** out) {
  if (text == nullptr || out == nullptr) return set_error(HARTOGS_E_NULL, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto profile = hartogs::Profile::parse(text);
    std::string id = profile.id();
    *out = new hartogs_profile{std::move(profile), std::move(id)};
  });
}

void hartogs_profile_destroy(hartogs_profile* profile) { delete profile; }

const char* hartogs_profile_id(const hartogs_profile* profile) {
  return profile == nullptr ? "" : profile->id.c_str();
}

hartogs_status hartogs_profile_x0(const hartogs_profile* profile, double* out) {
  if (profile == nullptr || out == nullptr) return set_error(HARTOGS_E_NULL, "null argument");
  *out = profile->value.x0();
  return HARTOGS_OK;
}

hartogs_status hartogs_profile_eval(const hartogs_profile* profile, double x, int order,
                                    double* out) {
  if (profile == nullptr || out == nullptr) return set_error(HARTOGS_E_NULL, "null argument");
  return guarded([&] { *out = profile->value.eval(x, order); });
}

hartogs_status hartogs_profile_margin(const hartogs_profile* profile, double x, double* out) {
  if (profile == nullptr || out == nullptr) return set_error(HARTOGS_E_NULL, "null argument");
  return guarded([&] { *out = profile->value.pseudoconvexity_margin(x); });
}

hartogs_status hartogs_check_pseudoconvex(const hartogs_profile* profile, size_t grid_size,
                                          double tol, int* passed, double* worst_margin,
                                          double* worst_x) {
  if (profile == nullptr) return set_error(HARTOGS_E_NULL, "null profile");
  return guarded([&] {
    const auto grid = hartogs::margin_grid(profile->value, grid_size);
    const auto r = hartogs::is_strongly_pseudoconvex(profile->value, grid, tol);
    if (passed != nullptr) *passed = r.strongly_pseudoconvex ? 1 : 0;
    if (worst_margin != nullptr) *worst_margin = r.worst_margin;
    if (worst_x != nullptr) *worst_x = r.worst_x;
  });
}

hartogs_status hartogs_metric(const hartogs_profile* profile, size_t n, const double* z,
                              double* h, double* det) {
  if (profile == nullptr) return set_error(HARTOGS_E_NULL, "null profile");
  return guarded([&] {
    const auto p = hartogs::make_point(profile->value, read_point(n, z));
    const auto m = hartogs::assemble_metric(profile->value, p);
    if (h != nullptr) {
      const auto N = static_cast<Eigen::Index>(n);
      for (Eigen::Index r = 0; r < N; ++r) {
        for (Eigen::Index c = 0; c < N; ++c) {
          h[2 * (r * N + c)] = m.h(r, c).real();
          h[2 * (r * N + c) + 1] = m.h(r, c).imag();
        }
      }
    }
    if (det != nullptr) *det = m.det;
  });
}

hartogs_status hartogs_curvature(const hartogs_profile* profile, size_t n, const double* z,
                                 double* scal, double* rho) {
  if (profile == nullptr) return set_error(HARTOGS_E_NULL, "null profile");
  return guarded([&] {
    const auto p = hartogs::make_point(profile->value, read_point(n, z));
    const auto m = hartogs::assemble_metric(profile->value, p);
    const auto c = hartogs::compute_curvature(profile->value, p, m);
    if (scal != nullptr) *scal = c.scal;
    if (rho != nullptr) {
      for (std::size_t k = 0; k < c.rho.size(); ++k) rho[k] = c.rho[k];
    }
  });
}

hartogs_status hartogs_extremal_residual(const hartogs_profile* profile, size_t n,
                                         const double* z, double* out) {
  if (profile == nullptr || out == nullptr) return set_error(HARTOGS_E_NULL, "null argument");
  return guarded([&] {
    const auto p = hartogs::make_point(profile->value, read_point(n, z));
    *out = hartogs::extremal_residual(profile->value, p);
  });
}

hartogs_status hartogs_einstein_residual(const hartogs_profile* profile, size_t n,
                                         const double* z, double* out) {
  if (profile == nullptr || out == nullptr) return set_error(HARTOGS_E_NULL, "null argument");
  return guarded([&] {
    const auto p = hartogs::make_point(profile->value, read_point(n, z));
    *out = hartogs::einstein_residual(profile->value, p);
  });
}

hartogs_status hartogs_field_parse(const char* text, size_t n, int max_degree,
                                   hartogs_field** out) {
  if (text == nullptr || out == nullptr) return set_error(HARTOGS_E_NULL, "null argument");
  *out = nullptr;
  return guarded([&] {
    hartogs::check_dimension(n);
    auto field = hartogs::HoloVectorField::parse(text, static_cast<Eigen::Index>(n), max_degree);
    *out = new hartogs_field{std::move(field)};
  });
}

void hartogs_field_destroy(hartogs_field* field) { delete field; }

hartogs_status hartogs_soliton_residual(const hartogs_profile* profile, size_t n,
                                        const double* z, double lambda,
                                        const hartogs_field* field, double* out) {
  if (profile == nullptr || out == nullptr) return set_error(HARTOGS_E_NULL, "null argument");
  return guarded([&] {
    const auto p = hartogs::make_point(profile->value, read_point(n, z));
    hartogs::SolitonParams s;
    s.lambda = lambda;
    if (field != nullptr) s.field = field->value;
    *out = hartogs::soliton_residual(profile->value, p, s);
  });
}

hartogs_status hartogs_hyperbolic_isometry(double c1, double c2, size_t n, const double* z,
                                           double* w) {
  if (w == nullptr) return set_error(HARTOGS_E_NULL, "null output");
  return guarded([&] {
    const auto image = hartogs::hyperbolic_isometry(c1, c2, read_point(n, z));
    for (Eigen::Index k = 0; k < image.size(); ++k) {
      w[2 * k] = image(k).real();
      w[2 * k + 1] = image(k).imag();
    }
  });
}

hartogs_status hartogs_pullback_check(double c1, double c2, size_t n, const double* z,
                                      double* out) {
  if (out == nullptr) return set_error(HARTOGS_E_NULL, "null output");
  return guarded([&] {
    const auto profile = hartogs::Profile::affine(c1, c2);
    const auto p = hartogs::make_point(profile, read_point(n, z));
    *out = hartogs::pullback_check(c1, c2, p);
  });
}

hartogs_status hartogs_curvature_scan(const hartogs_profile* profile,
                                      const hartogs_scan_options* options, hartogs_report** out) {
  if (profile == nullptr || out == nullptr) return set_error(HARTOGS_E_NULL, "null argument");
  *out = nullptr;
  return guarded(
      [&] { *out = make_report(hartogs::curvature_scan(profile->value, read_options(options))); });
}

hartogs_status hartogs_levi_scan(const hartogs_profile* profile,
                                 const hartogs_scan_options* options, hartogs_report** out) {
  if (profile == nullptr || out == nullptr) return set_error(HARTOGS_E_NULL, "null argument");
  *out = nullptr;
  return guarded(
      [&] { *out = make_report(hartogs::levi_scan(profile->value, read_options(options))); });
}

hartogs_status hartogs_extremal_scan(const hartogs_profile* profile,
                                     const hartogs_scan_options* options, hartogs_report** out) {
  if (profile == nullptr || out == nullptr) return set_error(HARTOGS_E_NULL, "null argument");
  *out = nullptr;
  return guarded(
      [&] { *out = make_report(hartogs::extremal_scan(profile->value, read_options(options))); });
}

hartogs_status hartogs_soliton_scan(const hartogs_profile* profile,
                                    const hartogs_scan_options* options, double lambda,
                                    const hartogs_field* field, hartogs_report** out) {
  if (profile == nullptr || out == nullptr) return set_error(HARTOGS_E_NULL, "null argument");
  *out = nullptr;
  return guarded([&] {
    hartogs::SolitonParams s;
    s.lambda = lambda;
    if (field != nullptr) s.field = field->value;
    *out = make_report(hartogs::soliton_scan(profile->value, read_options(options), s));
  });
}

hartogs_status hartogs_soliton_sweep(const hartogs_profile* profile,
                                     const hartogs_scan_options* options, int max_degree,
                                     double* lambda, double* residual_floor) {
  if (profile == nullptr) return set_error(HARTOGS_E_NULL, "null profile");
  return guarded([&] {
    const auto r = hartogs::soliton_sweep_scan(profile->value, read_options(options), max_degree);
    if (lambda != nullptr) *lambda = r.lambda;
    if (residual_floor != nullptr) *residual_floor = r.residual_floor;
  });
}

hartogs_status hartogs_verify_theorems(const hartogs_profile* profile,
                                       const hartogs_scan_options* options, hartogs_report** out,
                                       int* all_passed) {
  if (profile == nullptr) return set_error(HARTOGS_E_NULL, "null profile");
  if (out != nullptr) *out = nullptr;
  return guarded([&] {
    const auto v = hartogs::verify_theorems(profile->value, read_options(options));
    if (all_passed != nullptr) *all_passed = v.all_passed() ? 1 : 0;
    if (out != nullptr) *out = make_report(v.table());
  });
}

size_t hartogs_report_rows(const hartogs_report* report) {
  return report == nullptr ? 0 : report->value.rows.size();
}

size_t hartogs_report_cols(const hartogs_report* report) {
  return report == nullptr ? 0 : report->value.columns.size();
}

const char* hartogs_report_column(const hartogs_report* report, size_t col) {
  if (report == nullptr || col >= report->value.columns.size()) return nullptr;
  return report->value.columns[col].c_str();
}

hartogs_status hartogs_report_find(const hartogs_report* report, const char* name, size_t* col) {
  if (report == nullptr || name == nullptr || col == nullptr) {
    return set_error(HARTOGS_E_NULL, "null argument");
  }
  return guarded([&] { *col = report->value.column_index(name); });
}

hartogs_status hartogs_report_number(const hartogs_report* report, size_t row, size_t col,
                                     double* out) {
  if (report == nullptr || out == nullptr) return set_error(HARTOGS_E_NULL, "null argument");
  return guarded([&] { *out = report->value.number(row, col); });
}

const char* hartogs_report_text(const hartogs_report* report, size_t row, size_t col) {
  if (report == nullptr) return nullptr;
  if (row >= report->value.rows.size() || col >= report->value.columns.size()) return nullptr;
  report->scratch = report->value.text(row, col);
  return report->scratch.c_str();
}

hartogs_status hartogs_report_write_csv(const hartogs_report* report, const char* path) {
  if (report == nullptr || path == nullptr) return set_error(HARTOGS_E_NULL, "null argument");
  return guarded([&] { hartogs::write_csv_file(report->value, path); });
}

void hartogs_report_destroy(hartogs_report* report) { delete report; }

}  // extern "C"
