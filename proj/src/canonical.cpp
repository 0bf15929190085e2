#include "hartogs/canonical.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "hartogs/curvature.hpp"
#include "hartogs/error.hpp"
#include "hartogs/wirtinger.hpp"

namespace hartogs {

namespace {

constexpr double kGradientStep = 1e-5;
constexpr double kStencilMarginFactor = 10.0;

double parse_double(std::string_view s) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  double v = 0.0;
  auto res = std::from_chars(first, last, v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != last || !std::isfinite(v))
    fail(ErrorKind::Parse, "bad coefficient '" + std::string(s) + "'");
  return v;
}

int parse_exponent(std::string_view s) {
  int v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() || v < 0)
    fail(ErrorKind::Parse, "bad exponent '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Complex ipow(Complex z, int e) {
  Complex r = 1.0;
  for (int i = 0; i < e; ++i) r *= z;
  return r;
}

// G' by central differences, one-sided near the ends of [0, x0).
double g_derivative(const Profile& profile, double x) {
  const double h = kGradientStep * (1.0 + x);
  auto g = [&](double t) { return g_function(profile, t); };
  if (x - h < 0.0) return (-3.0 * g(x) + 4.0 * g(x + h) - g(x + 2.0 * h)) / (2.0 * h);
  if (x + h >= profile.x0()) return (3.0 * g(x) - 4.0 * g(x - h) + g(x - 2.0 * h)) / (2.0 * h);
  return (g(x + h) - g(x - h)) / (2.0 * h);
}

void monomials_rec(Eigen::Index n, int remaining, std::vector<int>& cur, Eigen::Index pos,
                   std::vector<std::vector<int>>& out) {
  if (pos == n) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[static_cast<std::size_t>(pos)] = e;
    monomials_rec(n, remaining - e, cur, pos + 1, out);
  }
  cur[static_cast<std::size_t>(pos)] = 0;
}

}  // namespace

int Monomial::degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

Complex Polynomial::eval(const CVector& z) const {
  Complex sum = 0.0;
  for (const auto& m : terms_) {
    Complex term = m.coeff;
    for (std::size_t j = 0; j < m.exponents.size(); ++j)
      term *= ipow(z[static_cast<Eigen::Index>(j)], m.exponents[j]);
    sum += term;
  }
  return sum;
}

Complex Polynomial::derivative(const CVector& z, Eigen::Index a) const {
  Complex sum = 0.0;
  const auto aa = static_cast<std::size_t>(a);
  for (const auto& m : terms_) {
    const int ea = m.exponents[aa];
    if (ea == 0) continue;
    Complex term = m.coeff * static_cast<double>(ea);
    for (std::size_t j = 0; j < m.exponents.size(); ++j) {
      const int e = (j == aa) ? ea - 1 : m.exponents[j];
      term *= ipow(z[static_cast<Eigen::Index>(j)], e);
    }
    sum += term;
  }
  return sum;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& m : terms_) d = std::max(d, m.degree());
  return d;
}

HoloVectorField HoloVectorField::zero(Eigen::Index n) {
  return HoloVectorField(std::vector<Polynomial>(static_cast<std::size_t>(n)));
}

HoloVectorField HoloVectorField::rotation(Eigen::Index n, double c) {
  std::vector<Polynomial> comps;
  for (Eigen::Index k = 0; k < n; ++k) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(k)] = 1;
    comps.emplace_back(std::vector<Monomial>{{Complex(0.0, c), e}});
  }
  return HoloVectorField(std::move(comps));
}

HoloVectorField HoloVectorField::translation(Eigen::Index n, Eigen::Index axis) {
  std::vector<Polynomial> comps(static_cast<std::size_t>(n));
  comps[static_cast<std::size_t>(axis)] =
      Polynomial({{Complex(1.0, 0.0), std::vector<int>(static_cast<std::size_t>(n), 0)}});
  return HoloVectorField(std::move(comps));
}

HoloVectorField HoloVectorField::parse(std::string_view text, Eigen::Index n, int max_degree) {
  const auto parts = split(text, '|');
  if (static_cast<Eigen::Index>(parts.size()) != n) {
    std::ostringstream os;
    os << "vector field needs " << n << " '|'-separated components, got " << parts.size();
    fail(ErrorKind::Parse, os.str());
  }
  std::vector<Polynomial> comps;
  for (auto part : parts) {
    part = trim(part);
    std::vector<Monomial> terms;
    if (!part.empty()) {
      for (auto mono : split(part, ';')) {
        mono = trim(mono);
        const auto colon = mono.find(':');
        if (colon == std::string_view::npos)
          fail(ErrorKind::Parse, "monomial '" + std::string(mono) + "' lacks ':'");
        const auto coeff = split(mono.substr(0, colon), ',');
        if (coeff.size() != 2)
          fail(ErrorKind::Parse, "coefficient must be 're,im' in '" + std::string(mono) + "'");
        const auto exps = split(mono.substr(colon + 1), ',');
        if (static_cast<Eigen::Index>(exps.size()) != n)
          fail(ErrorKind::Parse, "monomial '" + std::string(mono) + "' needs one exponent per coordinate");
        Monomial m{Complex(parse_double(trim(coeff[0])), parse_double(trim(coeff[1]))), {}};
        for (auto e : exps) m.exponents.push_back(parse_exponent(trim(e)));
        if (m.degree() > max_degree)
          fail(ErrorKind::Parse, "monomial '" + std::string(mono) + "' exceeds the degree bound");
        terms.push_back(std::move(m));
      }
    }
    comps.emplace_back(std::move(terms));
  }
  return HoloVectorField(std::move(comps));
}

CVector HoloVectorField::eval(const CVector& z) const {
  CVector out(dim());
  for (Eigen::Index k = 0; k < dim(); ++k) out[k] = components_[static_cast<std::size_t>(k)].eval(z);
  return out;
}

Eigen::MatrixXcd HoloVectorField::jacobian(const CVector& z) const {
  Eigen::MatrixXcd j(dim(), z.size());
  for (Eigen::Index k = 0; k < dim(); ++k)
    for (Eigen::Index a = 0; a < z.size(); ++a)
      j(k, a) = components_[static_cast<std::size_t>(k)].derivative(z, a);
  return j;
}

HoloVectorField HoloVectorField::operator+(const HoloVectorField& other) const {
  if (other.dim() != dim()) fail(ErrorKind::Usage, "vector field dimensions differ");
  std::vector<Polynomial> comps;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    auto terms = components_[k].terms();
    const auto& more = other.components_[k].terms();
    terms.insert(terms.end(), more.begin(), more.end());
    comps.emplace_back(std::move(terms));
  }
  return HoloVectorField(std::move(comps));
}

CVector scalar_gradient_bar(const Profile& profile, const CVector& z) {
  const double x = std::norm(z[0]);
  const double a = defining_a(profile, z);
  const double g = g_function(profile, x);
  const double g1 = g_derivative(profile, x);
  CVector grad(z.size());
  grad[0] = z[0] * (g1 * a + g * profile.eval(x, 1));
  for (Eigen::Index i = 1; i < z.size(); ++i) grad[i] = -g * z[i];
  return grad;
}

CVector hamiltonian_field(const Profile& profile, const CVector& z) {
  const auto p = contains(profile, z);
  if (!p) fail(ErrorKind::Numeric, "Hamiltonian field evaluated outside D_F");
  const MetricData m = assemble_metric(profile, *p);
  // T^a = sum_b h_inv(b, a) grad_b
  return m.h_inv.transpose() * scalar_gradient_bar(profile, z);
}

double extremal_residual(const Profile& profile, const DomainPoint& p) {
  const wirtinger::ComplexStencil stencil;
  double widest = 0.0;
  for (Eigen::Index a = 0; a < p.dim(); ++a) widest = std::max(widest, stencil.step_at(p.z[a]));
  if (p.margin < kStencilMarginFactor * widest)
    fail(ErrorKind::Domain, "point too close to the boundary for the extremal stencil");

  double worst = 0.0;
  for (Eigen::Index a = 0; a < p.dim(); ++a) {
    const wirtinger::ComplexField t_a = [&](const CVector& z) {
      return hamiltonian_field(profile, z)[a];
    };
    for (Eigen::Index c = 0; c < p.dim(); ++c)
      worst = std::max(worst, std::abs(wirtinger::d_zbar(t_a, p.z, c, stencil)));
  }
  return worst;
}

HermitianMatrix lie_derivative_components(const Profile& profile, const DomainPoint& p,
                                          const HoloVectorField& X) {
  if (X.dim() != p.dim()) fail(ErrorKind::Usage, "vector field and point dimensions differ");
  const HermitianMatrix h = metric_matrix(profile, p.z);
  const CVector v = X.eval(p.z);
  const auto metric_at = [&](const CVector& z) { return metric_matrix(profile, z); };
  const HermitianMatrix xg = wirtinger::directional<HermitianMatrix>(metric_at, p.z, v);
  const Eigen::MatrixXcd jt_h = X.jacobian(p.z).transpose() * h;
  return xg + jt_h + jt_h.adjoint();
}

double soliton_residual(const Profile& profile, const DomainPoint& p, const SolitonParams& s) {
  const MetricData m = assemble_metric(profile, p);
  const HermitianMatrix ric = ricci_tensor(profile, p, m);
  HermitianMatrix r = ric - s.lambda * m.h;
  if (s.field.dim() != 0) r -= lie_derivative_components(profile, p, s.field);
  return r.norm() / (1.0 + m.h.norm());
}

double einstein_residual(const Profile& profile, const DomainPoint& p) {
  const MetricData m = assemble_metric(profile, p);
  const HermitianMatrix r = ricci_tensor(profile, p, m) + static_cast<double>(p.dim() + 1) * m.h;
  return r.norm() / (1.0 + m.h.norm());
}

CVector hyperbolic_isometry(double c1, double c2, const CVector& z) {
  const Profile f = Profile::affine(c1, c2);
  if (!contains(f, z)) fail(ErrorKind::Domain, "point outside D_F of " + f.id());
  CVector w = z / std::sqrt(c1);
  w[0] = z[0] / std::sqrt(c1 / c2);
  return w;
}

double pullback_check(double c1, double c2, const DomainPoint& p) {
  const Profile f = Profile::affine(c1, c2);
  const Profile hyp = Profile::affine(1.0, 1.0);
  const CVector w = hyperbolic_isometry(c1, c2, p.z);
  Eigen::VectorXd jac = Eigen::VectorXd::Constant(p.dim(), 1.0 / std::sqrt(c1));
  jac[0] = 1.0 / std::sqrt(c1 / c2);
  const HermitianMatrix pulled = jac.asDiagonal() * metric_matrix(hyp, w) * jac.asDiagonal();
  const HermitianMatrix h = metric_matrix(f, p.z);
  return (pulled - h).norm() / h.norm();
}

std::vector<std::vector<int>> monomial_exponents(Eigen::Index n, int max_degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  for (int d = 0; d <= max_degree; ++d) monomials_rec(n, d, cur, 0, out);
  return out;
}

SolitonSweepResult soliton_sweep(const Profile& profile, const std::vector<DomainPoint>& points,
                                 int max_degree) {
  if (points.empty()) fail(ErrorKind::Usage, "soliton sweep needs at least one point");
  if (max_degree < 0) fail(ErrorKind::Usage, "degree bound must be non-negative");
  const Eigen::Index n = points.front().dim();

  // Basis fields: unit real and unit imaginary coefficient on every monomial
  // of every component.
  const auto exps = monomial_exponents(n, max_degree);
  struct BasisField {
    Eigen::Index component;
    std::size_t monomial;
    Complex coeff;
  };
  std::vector<BasisField> basis;
  for (Eigen::Index k = 0; k < n; ++k)
    for (std::size_t j = 0; j < exps.size(); ++j)
      for (Complex c : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) basis.push_back({k, j, c});

  auto field_of = [&](const BasisField& b) {
    std::vector<Polynomial> comps(static_cast<std::size_t>(n));
    comps[static_cast<std::size_t>(b.component)] = Polynomial({{b.coeff, exps[b.monomial]}});
    return HoloVectorField(std::move(comps));
  };

  const Eigen::Index unknowns = 1 + static_cast<Eigen::Index>(basis.size());
  const Eigen::Index per_point = n * n;  // diagonal reals + 2 per upper off-diagonal entry
  const Eigen::Index rows = per_point * static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd design = Eigen::MatrixXd::Zero(rows, unknowns);
  Eigen::VectorXd target = Eigen::VectorXd::Zero(rows);

  auto scatter = [&](const HermitianMatrix& m, Eigen::Index row0, double w, auto&& put) {
    Eigen::Index r = row0;
    const double off = std::sqrt(2.0) * w;
    for (Eigen::Index a = 0; a < n; ++a) {
      put(r++, w * m(a, a).real());
      for (Eigen::Index b = a + 1; b < n; ++b) {
        put(r++, off * m(a, b).real());
        put(r++, off * m(a, b).imag());
      }
    }
  };

  for (std::size_t i = 0; i < points.size(); ++i) {
    const DomainPoint& p = points[i];
    const MetricData m = assemble_metric(profile, p);
    const HermitianMatrix ric = ricci_tensor(profile, p, m);
    const double w = 1.0 / (1.0 + m.h.norm());
    const Eigen::Index row0 = per_point * static_cast<Eigen::Index>(i);
    scatter(ric, row0, w, [&](Eigen::Index r, double v) { target[r] = v; });
    scatter(m.h, row0, w, [&](Eigen::Index r, double v) { design(r, 0) = v; });
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const HermitianMatrix lx = lie_derivative_components(profile, p, field_of(basis[j]));
      const auto col = static_cast<Eigen::Index>(j + 1);
      scatter(lx, row0, w, [&](Eigen::Index r, double v) { design(r, col) = v; });
    }
  }

  const Eigen::VectorXd sol = design.completeOrthogonalDecomposition().solve(target);
  const double rss = (design * sol - target).squaredNorm();

  SolitonSweepResult out;
  out.lambda = sol[0];
  out.unknowns = static_cast<std::size_t>(unknowns);
  out.residual_floor = std::sqrt(rss / static_cast<double>(points.size()));
  std::vector<std::vector<Monomial>> terms(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const double c = sol[static_cast<Eigen::Index>(j + 1)];
    if (c == 0.0) continue;
    auto& slot = terms[static_cast<std::size_t>(basis[j].component)];
    slot.push_back({c * basis[j].coeff, exps[basis[j].monomial]});
  }
  std::vector<Polynomial> comps;
  for (auto& t : terms) comps.emplace_back(std::move(t));
  out.field = HoloVectorField(std::move(comps));
  return out;
}

}  // namespace hartogs
