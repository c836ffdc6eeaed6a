#include "psc/curvature.hpp"
#include "psc/oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace psc;
using namespace psc::warp;

namespace {

WarpProfile single(const WarpFunction& f, int d2, double t_max) {
  WarpProfile p;
  p.a = 0.0;
  p.b = 0.0;
  p.c = 1.0;
  p.dims = {0, 0, d2};
  p.t_max = t_max;
  p.functions[2] = f;
  return p;
}

}  // namespace

TEST_CASE("Christoffel Ricci of simple diagonal metrics") {
  SUBCASE("round sphere dt^2 + sin^2 t dx^2") {
    for (double t : {0.3, 1.0, 2.5}) {
      const auto r = diagonal_metric_ricci({squared({std::sin(t), std::cos(t), -std::sin(t)})});
      REQUIRE(r.size() == 2);
      CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(r[1] == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("cone dt^2 + t^2 (dx^2 + dy^2)") {
    const double t = 0.7;
    const auto r = diagonal_metric_ricci({squared({t, 1.0, 0.0}), squared({t, 1.0, 0.0})});
    REQUIRE(r.size() == 3);
    // R_ii/g_ii = -F''/F - (n-1) F'^2/F^2 with F = t, n = 2
    CHECK(r[0] == doctest::Approx(0.0));
    CHECK(r[1] == doctest::Approx(-1.0 / (t * t)));
    CHECK(r[2] == doctest::Approx(-1.0 / (t * t)));
  }
  SUBCASE("product with an exponential factor") {
    // dt^2 + e^{2t} dx^2: hyperbolic plane, curvature -1
    const double t = 0.4;
    const auto r = diagonal_metric_ricci({squared({std::exp(t), std::exp(t), std::exp(t)})});
    CHECK(r[0] == doctest::Approx(-1.0));
    CHECK(r[1] == doctest::Approx(-1.0));
  }
  CHECK(squared({2.0, 3.0, 5.0}).value == 4.0);
  CHECK(squared({2.0, 3.0, 5.0}).d1 == 12.0);
  CHECK(squared({2.0, 3.0, 5.0}).d2 == 2.0 * (9.0 + 10.0));
}

TEST_CASE("sine profile passes both oracle checks") {
  const WarpProfile p = build_trig_profile(1.0, {0, 0, 1}, 3.0);
  const OracleReport r = fd_oracle(p, 1000);
  CHECK(r.passed());
  CHECK(r.derivatives.points == 999);
  CHECK(r.derivatives.max_first_error < 1e-8);
  CHECK(r.derivatives.max_second_error < 1e-8);
  CHECK(r.abelian.applicable);
  CHECK(r.abelian.fiber_compared);
  CHECK(r.abelian.max_ric_t_error < 1e-7);
  CHECK(r.abelian.max_ric_2_error < 1e-7);
}

TEST_CASE("a three-dimensional fiber only checks the radial term") {
  const WarpProfile p = build_trig_profile(1.0, {0, 0, 3}, 3.0);
  const OracleReport r = fd_oracle(p, 500);
  CHECK(r.abelian.applicable);
  CHECK_FALSE(r.abelian.fiber_compared);
  CHECK(r.passed());
  CHECK(ric_T(p, 1.0) == doctest::Approx(3.0));
}

TEST_CASE("a constant warping function is flat") {
  const WarpProfile p = single(WarpFunction({{0.0, ConstantPiece{0.8}}}), 1, 2.0);
  const OracleReport r = fd_oracle(p, 200);
  CHECK(r.passed());
  CHECK(r.abelian.max_ric_t_error == 0.0);
  const auto g = diagonal_metric_ricci({squared({0.8, 0.0, 0.0})});
  CHECK(g[0] == 0.0);
  CHECK(g[1] == 0.0);
}

TEST_CASE("smoothed profiles are C^2 to the audit tolerance") {
  ProfileParams params;
  params.t_max = 10.0;
  for (const WarpProfile& p : {smooth_profile(build_gz_profile(params), 0.01),
                               smooth_profile(build_modified_profile(params), 0.01)}) {
    const OracleReport r = fd_oracle(p, 4096);
    CHECK(r.derivatives.passed);
    CHECK_FALSE(r.abelian.applicable);
    CHECK(r.passed());
  }
}

TEST_CASE("an unsmoothed kink fails the derivative audit") {
  // F0 switches from sine to constant at t0 = asin(ab) with slope cos(t0) != 0;
  // the grid is chosen so that sample 37 lands on t0
  ProfileParams params;
  const double t0 = std::asin(params.a * params.b);
  params.t_max = t0 * 1000.0 / 37.0;
  const WarpProfile p = build_gz_profile(params);
  const OracleReport r = fd_oracle(p, 1000);
  CHECK_FALSE(r.derivatives.passed);
  CHECK(r.derivatives.max_first_error > 0.1);
  CHECK(r.derivatives.worst_t == doctest::Approx(t0));
}
