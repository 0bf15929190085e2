#include <doctest.h>

#include <cmath>
#include <vector>

#include "../support.hpp"
#include "hartogs/error.hpp"
#include "hartogs/profile.hpp"

using namespace hartogs;
using hartogs::testing::builtin_profiles;
using hartogs::testing::fd_derivative;

TEST_CASE("eval returns closed-form values") {
  CHECK(Profile::affine(1, 1).eval(0.0, 0) == 1.0);
  CHECK(Profile::affine(1, 1).eval(0.5, 1) == -1.0);
  CHECK(Profile::power_cap(2).eval(0.5, 2) == doctest::Approx(2.0).epsilon(1e-15));
  const auto pc = Profile::power_cap(2);
  const double fd = fd_derivative([&](double t) { return pc.eval(t, 1); }, 0.5);
  CHECK(fd == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("x0 per family") {
  CHECK(Profile::affine(2, 3).x0() == doctest::Approx(2.0 / 3.0));
  CHECK(Profile::power_cap(0.5).x0() == 1.0);
  CHECK(std::isinf(Profile::exp_decay(1).x0()));
  CHECK(std::isinf(Profile::rational().x0()));
  CHECK(Profile::affine(1, 1).bounded());
  CHECK_FALSE(Profile::rational().bounded());
}

TEST_CASE("closed-form derivatives match finite differences") {
  for (const auto& p : builtin_profiles()) {
    CAPTURE(p.id());
    for (double x : margin_grid(p, 40)) {
      if (x == 0.0) continue;
      for (int order = 1; order <= Profile::kMaxOrder; ++order) {
        const double fd = fd_derivative([&](double t) { return p.eval(t, order - 1); }, x);
        const double exact = p.eval(x, order);
        CAPTURE(x);
        CAPTURE(order);
        CHECK(std::abs(fd - exact) <= 1e-6 * (1.0 + std::abs(exact)));
      }
    }
  }
}

TEST_CASE("standing hypothesis F > 0, F' < 0 on the sampling range") {
  for (const auto& p : builtin_profiles()) {
    for (double x : margin_grid(p, 200)) {
      CHECK(p.eval(x, 0) > 0.0);
      CHECK(p.eval(x, 1) < 0.0);
    }
  }
}

TEST_CASE("eval outside [0, x0) is a domain error") {
  const auto p = Profile::affine(1, 1);
  CHECK_THROWS_AS(p.eval(-1e-3), Error);
  CHECK_THROWS_AS(p.eval(1.0), Error);
  CHECK_THROWS_AS(Profile::power_cap(2).eval(1.5), Error);
  try {
    p.eval(2.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Domain);
  }
  CHECK_THROWS_AS(p.eval(0.5, 5), Error);
}

TEST_CASE("pseudoconvexity margin examples") {
  CHECK(Profile::affine(1, 1).pseudoconvexity_margin(0.0) == doctest::Approx(1.0));
  for (double x : {0.0, 0.7, 3.0, 9.5})
    CHECK(Profile::exp_decay(1).pseudoconvexity_margin(x) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(Profile::power_cap(2).pseudoconvexity_margin(0.0) == doctest::Approx(2.0));
  // p / (1 - x)^2 for the power cap
  CHECK(Profile::power_cap(3).pseudoconvexity_margin(0.5) == doctest::Approx(12.0));
}

TEST_CASE("margin matches a finite difference of -x F'/F") {
  for (const auto& p : builtin_profiles()) {
    CAPTURE(p.id());
    const auto q = [&](double t) { return -t * p.eval(t, 1) / p.eval(t, 0); };
    for (double x : margin_grid(p, 60)) {
      const double m = p.pseudoconvexity_margin(x);
      CAPTURE(x);
      CHECK(std::abs(m - fd_derivative(q, x, 0.0, p.x0())) <= 1e-6 * (1.0 + std::abs(m)));
    }
  }
}

TEST_CASE("is_strongly_pseudoconvex examples") {
  const auto affine = Profile::affine(2, 3);
  std::vector<double> grid;
  for (int i = 0; i < 100; ++i) grid.push_back((2.0 / 3.0 - 1e-3) * i / 99.0);
  auto r = is_strongly_pseudoconvex(affine, grid, 1e-9);
  CHECK(r.strongly_pseudoconvex);
  CHECK(r.worst_margin > 1e-9);

  grid.clear();
  for (int i = 0; i < 100; ++i) grid.push_back(10.0 * i / 99.0);
  r = is_strongly_pseudoconvex(Profile::exp_decay(1), grid, 1e-9);
  CHECK(r.strongly_pseudoconvex);
  CHECK(r.worst_margin == doctest::Approx(1.0));

  r = is_strongly_pseudoconvex(Profile::constant_probe(), grid, 1e-9);
  CHECK_FALSE(r.strongly_pseudoconvex);
  CHECK(r.worst_margin == 0.0);

  try {
    is_strongly_pseudoconvex(affine, std::vector<double>{}, 1e-9);
    FAIL("empty grid accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Usage);
  }
}

TEST_CASE("affine margin minimum sits at x = 0") {
  const auto p = Profile::affine(1, 1);
  const auto grid = margin_grid(p, 1000);
  const auto r = is_strongly_pseudoconvex(p, grid, 1e-9);
  CHECK(r.worst_margin == doctest::Approx(1.0));
  CHECK(r.worst_x == 0.0);
}

TEST_CASE("margin grid respects the boundary gap") {
  const auto p = Profile::power_cap(2);
  const auto g = margin_grid(p, 11);
  REQUIRE(g.size() == 11);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == doctest::Approx(1.0 - 1e-3));
  CHECK(margin_grid(Profile::rational(), 5).back() == doctest::Approx(10.0));
}

TEST_CASE("parse accepts the documented forms and round-trips ids") {
  for (const char* text : {"affine:1,1", "affine:2,3", "powercap:2", "expdecay:0.5", "rational",
                           "affine:0.5,2"}) {
    const auto p = Profile::parse(text);
    CHECK(p.id() == text);
    CHECK(Profile::parse(p.id()).id() == p.id());
  }
  CHECK(Profile::parse("affine:2,3").family() == ProfileFamily::Affine);
  CHECK(Profile::parse("rational").family() == ProfileFamily::Rational);
}

TEST_CASE("parse rejects malformed text") {
  for (const char* text : {"affine:1", "affine:1,1,1", "affine:", "affine:a,b", "powercap",
                           "powercap:-1", "expdecay:0", "affine:1,-2", "rational:1", "constant",
                           "constant:1", "bogus:1", "", "affine:1,,1", "affine:1 ,1"}) {
    CAPTURE(text);
    try {
      Profile::parse(text);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK((e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::Usage));
    }
  }
}

TEST_CASE("factories reject non-positive parameters") {
  CHECK_THROWS_AS(Profile::affine(0, 1), Error);
  CHECK_THROWS_AS(Profile::affine(1, 0), Error);
  CHECK_THROWS_AS(Profile::power_cap(0), Error);
  CHECK_THROWS_AS(Profile::exp_decay(-1), Error);
}

TEST_CASE("affine detection") {
  CHECK(Profile::affine(2, 3).is_affine());
  CHECK(Profile::power_cap(1).is_affine());
  CHECK_FALSE(Profile::power_cap(2).is_affine());
  CHECK_FALSE(Profile::rational().is_affine());
  const auto [c1, c2] = Profile::power_cap(1).affine_coefficients();
  CHECK(c1 == 1.0);
  CHECK(c2 == 1.0);
}
