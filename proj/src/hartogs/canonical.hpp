#pragma once

#include <string_view>
#include <vector>

#include "hartogs/metric.hpp"

namespace hartogs {

/// c * z_0^{e_0} ... z_{n-1}^{e_{n-1}}
struct Monomial {
  Complex coeff;
  std::vector<int> exponents;

  int degree() const;
};

/// Holomorphic polynomial in z_0, ..., z_{n-1}.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Monomial> terms) : terms_(std::move(terms)) {}

  Complex eval(const CVector& z) const;
  /// Exact d/dz_a.
  Complex derivative(const CVector& z, Eigen::Index a) const;
  int degree() const;
  const std::vector<Monomial>& terms() const { return terms_; }

 private:
  std::vector<Monomial> terms_;
};

/// Real holomorphic vector field X = sum_k (f_k d/dz_k + conj(f_k) d/dzbar_k)
/// with polynomial components f_k.
class HoloVectorField {
 public:
  static constexpr int kDefaultMaxDegree = 2;

  HoloVectorField() = default;
  explicit HoloVectorField(std::vector<Polynomial> components)
      : components_(std::move(components)) {}

  static HoloVectorField zero(Eigen::Index n);
  /// f_k = i c z_k for every k.
  static HoloVectorField rotation(Eigen::Index n, double c);
  /// f_k = delta_{k,axis}.
  static HoloVectorField translation(Eigen::Index n, Eigen::Index axis);

  /// One polynomial per component separated by '|'; monomials separated by
  /// ';' as `coeff_re,coeff_im:e0,e1,...,e{n-1}`. An empty component is the
  /// zero polynomial. Throws Error(Parse).
  static HoloVectorField parse(std::string_view text, Eigen::Index n,
                               int max_degree = kDefaultMaxDegree);

  Eigen::Index dim() const { return static_cast<Eigen::Index>(components_.size()); }
  const std::vector<Polynomial>& components() const { return components_; }

  /// (f_0(z), ..., f_{n-1}(z)).
  CVector eval(const CVector& z) const;
  /// J(k, a) = d f_k / d z_a.
  Eigen::MatrixXcd jacobian(const CVector& z) const;

  HoloVectorField operator+(const HoloVectorField& other) const;

 private:
  std::vector<Polynomial> components_;
};

struct SolitonParams {
  double lambda = 0.0;
  HoloVectorField field;

  /// lambda + (n + 1).
  double gamma(Eigen::Index n) const { return lambda + static_cast<double>(n + 1); }
};

/// Closed-form (d scal/dzbar_0, ..., d scal/dzbar_{n-1}) from
/// scal = -n(n+1) + G(|z_0|^2) A, with G' by central differences of G.
CVector scalar_gradient_bar(const Profile& profile, const CVector& z);

/// T^a(z) = sum_b g^{b\bar a} d scal / dzbar_b.
CVector hamiltonian_field(const Profile& profile, const CVector& z);

/// max_{a,c} |d T^a / dzbar_c|, zero iff the metric is extremal at p. Requires
/// p.margin >= 10 times the Wirtinger step; throws Error(Domain) otherwise.
double extremal_residual(const Profile& profile, const DomainPoint& p);

/// (L_X g)_{a\bar b} = X(g_{a\bar b}) + sum_k [(df_k/dz_a) g_{k\bar b} + conj(df_k/dz_b) g_{a\bar k}].
/// X(g) is a directional difference of the closed-form metric along f(z).
HermitianMatrix lie_derivative_components(const Profile& profile, const DomainPoint& p,
                                          const HoloVectorField& X);

/// ||Ric - lambda h - L_X g||_F / (1 + ||h||_F).
double soliton_residual(const Profile& profile, const DomainPoint& p, const SolitonParams& s);

/// ||Ric + (n+1) h||_F / (1 + ||h||_F).
double einstein_residual(const Profile& profile, const DomainPoint& p);

/// (z_0 / sqrt(c1/c2), z_1 / sqrt(c1), ..., z_{n-1} / sqrt(c1)); maps D_F of
/// F = c1 - c2 x into the complex hyperbolic ball. Throws Error(Domain) when
/// z is outside that D_F.
CVector hyperbolic_isometry(double c1, double c2, const CVector& z);

/// ||J^H h_hyp(phi(z)) J - h_F(z)||_F / ||h_F(z)||_F for F = c1 - c2 x.
double pullback_check(double c1, double c2, const DomainPoint& p);

struct SolitonSweepResult {
  double lambda = 0.0;
  HoloVectorField field;
  /// sqrt(mean_p (||Ric - lambda h - L_X g||_F / (1 + ||h||_F))^2) at the optimum.
  double residual_floor = 0.0;
  std::size_t unknowns = 0;
};

/// Least-squares fit of (lambda, X) with X polynomial of total degree <=
/// max_degree over the given points.
SolitonSweepResult soliton_sweep(const Profile& profile, const std::vector<DomainPoint>& points,
                                 int max_degree = HoloVectorField::kDefaultMaxDegree);

/// All exponent vectors in n variables with total degree <= max_degree,
/// graded then lexicographic.
std::vector<std::vector<int>> monomial_exponents(Eigen::Index n, int max_degree);

}  // namespace hartogs
