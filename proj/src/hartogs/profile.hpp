#pragma once

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hartogs {

/// Closed set of boundary profiles F: [0, x0) -> (0, inf). Each family
/// carries closed-form derivatives up to order four.
enum class ProfileFamily {
  Affine,    // F = c1 - c2 x
  PowerCap,  // F = (1 - x)^p
  ExpDecay,  // F = exp(-a x)
  Rational,  // F = 1 / (1 + x)
  Constant,  // F = c; violates F' < 0, test probe only
};

class Profile {
 public:
  static constexpr int kMaxOrder = 4;
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();
  /// Upper end of the x range used for sampling when x0 is infinite.
  static constexpr double kUnboundedCap = 10.0;
  /// Relative distance kept from x0 when sampling.
  static constexpr double kBoundaryGap = 1e-3;

  static Profile affine(double c1, double c2);
  static Profile power_cap(double p);
  static Profile exp_decay(double a);
  static Profile rational();
  /// Constant F. Not a valid Hartogs profile; not reachable from parse().
  static Profile constant_probe(double c = 1.0);

  /// Parses `family:param[,param]`, e.g. `affine:1,1`, `powercap:2`,
  /// `expdecay:0.5`, `rational`. Throws Error(Parse) on malformed text.
  static Profile parse(std::string_view text);

  ProfileFamily family() const noexcept { return family_; }
  double x0() const noexcept { return x0_; }
  bool bounded() const noexcept { return x0_ < kInfinity; }
  std::span<const double> params() const noexcept { return {params_.data(), params_.size()}; }

  /// Canonical text form, parseable by parse() for every public family.
  std::string id() const;

  /// F^{(order)}(x), order in 0..4. Throws Error(Domain) unless 0 <= x < x0.
  double eval(double x, int order = 0) const;

  /// -(x F'/F)' = B / F^2 with B = x F'^2 - F (F' + x F'').
  double pseudoconvexity_margin(double x) const;

  /// B(x) = x F'^2 - F (F' + F'' x).
  double b_function(double x) const;

  /// True when F'' vanishes identically (Affine, or PowerCap with p = 1).
  bool is_affine() const noexcept;
  /// (c1, c2) with F = c1 - c2 x; only meaningful when is_affine().
  std::pair<double, double> affine_coefficients() const;

  /// Largest x used by samplers: x0 (1 - 1e-3), or 10 when x0 is infinite.
  double sampling_cap() const noexcept;

 private:
  Profile(ProfileFamily family, std::vector<double> params, double x0)
      : family_(family), params_(std::move(params)), x0_(x0) {}

  double eval_unchecked(double x, int order) const;

  ProfileFamily family_;
  std::vector<double> params_;
  double x0_;
};

struct PseudoconvexityReport {
  bool strongly_pseudoconvex = false;
  double worst_margin = 0.0;
  double worst_x = 0.0;
};

/// Evaluates the margin on every grid point; passes iff the minimum exceeds tol.
PseudoconvexityReport is_strongly_pseudoconvex(const Profile& profile,
                                               std::span<const double> grid,
                                               double tol);

/// `count` equispaced points on [0, profile.sampling_cap()].
std::vector<double> margin_grid(const Profile& profile, std::size_t count);

}  // namespace hartogs
