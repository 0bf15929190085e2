#include <doctest.h>

#include <cmath>
#include <limits>

#include "../support.hpp"
#include "hartogs/error.hpp"
#include "hartogs/metric.hpp"
#include "hartogs/random.hpp"
#include "hartogs/wirtinger.hpp"

using namespace hartogs;
using hartogs::testing::vec;

namespace {

bool near(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }

}  // namespace

TEST_CASE("d_z examples") {
  const CVector p = vec({{1, 1}});
  CHECK(near(wirtinger::d_z([](const CVector& z) { return z(0) * z(0); }, p, 0), {2, 2}, 1e-7));
  CHECK(near(wirtinger::d_z([](const CVector& z) { return Complex(std::norm(z(0)), 0.0); }, p, 0), {1, -1},
             1e-7));
  CHECK(std::abs(wirtinger::d_z([](const CVector& z) { return std::conj(z(0)); }, p, 0)) <= 1e-9);
}

TEST_CASE("d_zbar on analytic and anti-analytic fields") {
  const CVector p = vec({{0.3, -0.7}, {1.2, 0.4}});
  CHECK(std::abs(wirtinger::d_zbar([](const CVector& z) { return z(0) * z(1); }, p, 1)) <= 1e-9);
  CHECK(near(wirtinger::d_zbar([](const CVector& z) { return std::conj(z(1) * z(1)); }, p, 1),
             2.0 * std::conj(p(1)), 1e-7));
  CHECK(near(wirtinger::d_zbar([](const CVector& z) { return z(0) * std::conj(z(0)); }, p, 0), p(0),
             1e-7));
}

TEST_CASE("z z-bar and z^2 reproduced to 1e-7 on random points") {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const CVector p = vec({{rng.uniform(-3, 3), rng.uniform(-3, 3)}, {rng.uniform(-3, 3), rng.uniform(-3, 3)}});
    const auto sq = [](const CVector& z) { return z(1) * z(1); };
    const auto zz = [](const CVector& z) { return z(1) * std::conj(z(1)); };
    CHECK(near(wirtinger::d_z(sq, p, 1), 2.0 * p(1), 1e-7));
    CHECK(near(wirtinger::d_z(zz, p, 1), std::conj(p(1)), 1e-7));
    CHECK(near(wirtinger::d_zbar(zz, p, 1), p(1), 1e-7));
  }
}

TEST_CASE("non-finite stencil values are a numeric error") {
  const CVector p = vec({{0, 0}});
  const auto f = [](const CVector& z) {
    return z(0).real() > 0 ? Complex(std::numeric_limits<double>::quiet_NaN(), 0) : Complex(0, 0);
  };
  try {
    wirtinger::d_z(f, p, 0);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Numeric);
  }
}

TEST_CASE("hessian_z_zbar examples") {
  const CVector p = vec({{0.4, -0.2}, {0.1, 0.3}});
  const auto sum = [](const CVector& z) { return z.squaredNorm(); };
  auto h = wirtinger::hessian_z_zbar(sum, p);
  CHECK((h - HermitianMatrix::Identity(2, 2)).norm() <= 1e-7);

  const auto re = [](const CVector& z) { return z(0).real(); };
  h = wirtinger::hessian_z_zbar(re, p);
  CHECK(h.norm() <= 1e-7);

  const auto profile = Profile::affine(1, 1);
  const auto phi = [&](const CVector& z) { return kahler_potential(profile, z); };
  h = wirtinger::hessian_z_zbar(phi, CVector::Zero(2));
  CHECK((h - HermitianMatrix::Identity(2, 2)).norm() <= 1e-6);
}

TEST_CASE("hessian picks up the mixed term of |z0 + z1|^2") {
  const CVector p = vec({{0.2, 0.1}, {-0.3, 0.5}});
  const auto f = [](const CVector& z) { return std::norm(z(0) + z(1)); };
  const auto h = wirtinger::hessian_z_zbar(f, p);
  CHECK((h - HermitianMatrix::Ones(2, 2)).norm() <= 1e-7);
  // 2 Re(conj(z0) z1) couples z0 and z1 only through the off-diagonal.
  const auto g = [](const CVector& z) { return 2.0 * (std::conj(z(0)) * z(1)).real(); };
  const auto hg = wirtinger::hessian_z_zbar(g, p);
  CHECK(std::abs(hg(0, 0)) <= 1e-7);
  CHECK(std::abs(hg(0, 1) - 1.0) <= 1e-7);
  CHECK(std::abs(hg(1, 0) - 1.0) <= 1e-7);
}

TEST_CASE("hessian output is exactly Hermitian") {
  const auto profile = Profile::power_cap(2);
  const auto phi = [&](const CVector& z) { return kahler_potential(profile, z); };
  for (const auto& p : sample_interior(profile, 3, 10, 5, 0.05)) {
    const auto h = wirtinger::hessian_z_zbar(phi, p.z);
    for (Eigen::Index a = 0; a < 3; ++a)
      for (Eigen::Index b = 0; b < 3; ++b) {
        CHECK(h(a, b).real() == h(b, a).real());
        CHECK(h(a, b).imag() == -h(b, a).imag());
      }
  }
}

TEST_CASE("step scaling") {
  wirtinger::ComplexStencil s;
  CHECK(s.step == 1e-4);
  CHECK(s.step_at({3, 4}) == doctest::Approx(6e-4));
  CHECK(wirtinger::ComplexStencil::for_margin(0.2).step == doctest::Approx(2e-5));
  CHECK(wirtinger::ComplexStencil::for_margin(5.0).step == doctest::Approx(1e-4));
}

TEST_CASE("directional derivative is fourth order accurate") {
  const CVector p = vec({{0.5, 0.1}, {-0.2, 0.3}});
  const CVector v = vec({{1, 2}, {0.5, -1}});
  // f = z0^3 z1: derivative along v is 3 z0^2 z1 v0 + z0^3 v1.
  const auto f = [](const CVector& z) { return z(0) * z(0) * z(0) * z(1); };
  const Complex want = 3.0 * p(0) * p(0) * p(1) * v(0) + p(0) * p(0) * p(0) * v(1);
  const Complex got = wirtinger::directional<Complex>(f, p, v);
  CHECK(std::abs(got - want) <= 1e-11);
  CHECK(std::abs(wirtinger::directional<Complex>(f, p, CVector::Zero(2))) == 0.0);
}
