#include "hartogs/profile.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "hartogs/error.hpp"

namespace hartogs {

namespace {

std::string format_shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view s, std::string_view whole) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto res = std::from_chars(first, last, v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != last || !std::isfinite(v))
    fail(ErrorKind::Parse, "bad number '" + std::string(s) + "' in profile '" +
                               std::string(whole) + "'");
  return v;
}

std::vector<double> split_params(std::string_view s, std::string_view whole) {
  std::vector<double> out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(parse_number(s.substr(0, comma), whole));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0))
    fail(ErrorKind::Usage, std::string(what) + " must be positive");
}

// p (p-1) ... (p-k+1)
double falling(double p, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= p - i;
  return r;
}

}  // namespace

Profile Profile::affine(double c1, double c2) {
  require_positive(c1, "affine c1");
  require_positive(c2, "affine c2");
  return Profile(ProfileFamily::Affine, {c1, c2}, c1 / c2);
}

Profile Profile::power_cap(double p) {
  require_positive(p, "powercap exponent");
  return Profile(ProfileFamily::PowerCap, {p}, 1.0);
}

Profile Profile::exp_decay(double a) {
  require_positive(a, "expdecay rate");
  return Profile(ProfileFamily::ExpDecay, {a}, kInfinity);
}

Profile Profile::rational() { return Profile(ProfileFamily::Rational, {}, kInfinity); }

Profile Profile::constant_probe(double c) {
  require_positive(c, "constant value");
  return Profile(ProfileFamily::Constant, {c}, kInfinity);
}

Profile Profile::parse(std::string_view text) {
  auto colon = text.find(':');
  std::string_view name = text.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string_view::npos) params = split_params(text.substr(colon + 1), text);

  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      std::ostringstream os;
      os << "profile '" << text << "' expects " << count << " parameter(s), got "
         << params.size();
      fail(ErrorKind::Parse, os.str());
    }
  };

  if (name == "affine") {
    expect(2);
    return affine(params[0], params[1]);
  }
  if (name == "powercap") {
    expect(1);
    return power_cap(params[0]);
  }
  if (name == "expdecay") {
    expect(1);
    return exp_decay(params[0]);
  }
  if (name == "rational") {
    if (colon != std::string_view::npos) expect(0);
    return rational();
  }
  fail(ErrorKind::Parse, "unknown profile family '" + std::string(name) + "'");
}

std::string Profile::id() const {
  switch (family_) {
    case ProfileFamily::Affine:
      return "affine:" + format_shortest(params_[0]) + "," + format_shortest(params_[1]);
    case ProfileFamily::PowerCap:
      return "powercap:" + format_shortest(params_[0]);
    case ProfileFamily::ExpDecay:
      return "expdecay:" + format_shortest(params_[0]);
    case ProfileFamily::Rational:
      return "rational";
    case ProfileFamily::Constant:
      return "constant:" + format_shortest(params_[0]);
  }
  return "?";
}

double Profile::eval(double x, int order) const {
  if (order < 0 || order > kMaxOrder)
    fail(ErrorKind::Usage, "derivative order must be in 0..4");
  if (!(x >= 0.0 && x < x0_)) {
    std::ostringstream os;
    os << "x = " << x << " outside [0, " << x0_ << ") for " << id();
    fail(ErrorKind::Domain, os.str());
  }
  return eval_unchecked(x, order);
}

double Profile::eval_unchecked(double x, int order) const {
  switch (family_) {
    case ProfileFamily::Affine:
      if (order == 0) return params_[0] - params_[1] * x;
      return order == 1 ? -params_[1] : 0.0;
    case ProfileFamily::PowerCap: {
      const double p = params_[0];
      const double sign = (order % 2 == 0) ? 1.0 : -1.0;
      const double c = falling(p, order);
      if (c == 0.0) return 0.0;
      return sign * c * std::pow(1.0 - x, p - order);
    }
    case ProfileFamily::ExpDecay: {
      const double a = params_[0];
      return std::pow(-a, order) * std::exp(-a * x);
    }
    case ProfileFamily::Rational: {
      const double sign = (order % 2 == 0) ? 1.0 : -1.0;
      return sign * std::tgamma(order + 1.0) / std::pow(1.0 + x, order + 1);
    }
    case ProfileFamily::Constant:
      return order == 0 ? params_[0] : 0.0;
  }
  return 0.0;
}

double Profile::b_function(double x) const {
  const double f = eval(x, 0);
  const double f1 = eval_unchecked(x, 1);
  const double f2 = eval_unchecked(x, 2);
  return x * f1 * f1 - f * (f1 + f2 * x);
}

double Profile::pseudoconvexity_margin(double x) const {
  const double f = eval(x, 0);
  return b_function(x) / (f * f);
}

bool Profile::is_affine() const noexcept {
  return family_ == ProfileFamily::Affine ||
         (family_ == ProfileFamily::PowerCap && params_[0] == 1.0);
}

std::pair<double, double> Profile::affine_coefficients() const {
  if (family_ == ProfileFamily::Affine) return {params_[0], params_[1]};
  if (is_affine()) return {1.0, 1.0};
  fail(ErrorKind::Usage, id() + " is not affine");
}

double Profile::sampling_cap() const noexcept {
  return bounded() ? x0_ * (1.0 - kBoundaryGap) : kUnboundedCap;
}

PseudoconvexityReport is_strongly_pseudoconvex(const Profile& profile,
                                               std::span<const double> grid,
                                               double tol) {
  if (grid.empty()) fail(ErrorKind::Usage, "pseudoconvexity grid is empty");
  PseudoconvexityReport rep;
  rep.worst_margin = Profile::kInfinity;
  for (double x : grid) {
    const double m = profile.pseudoconvexity_margin(x);
    if (m < rep.worst_margin) {
      rep.worst_margin = m;
      rep.worst_x = x;
    }
  }
  rep.strongly_pseudoconvex = rep.worst_margin > tol;
  return rep;
}

std::vector<double> margin_grid(const Profile& profile, std::size_t count) {
  if (count == 0) fail(ErrorKind::Usage, "grid size must be positive");
  std::vector<double> grid(count);
  const double hi = profile.sampling_cap();
  for (std::size_t i = 0; i < count; ++i)
    grid[i] = count == 1 ? 0.0 : hi * static_cast<double>(i) / static_cast<double>(count - 1);
  return grid;
}

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Singular: return "singular";
    case ErrorKind::Numeric: return "numeric";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Sampling: return "sampling";
    case ErrorKind::Io: return "io";
    case ErrorKind::Invariant: return "invariant";
  }
  return "unknown";
}

}  // namespace hartogs
