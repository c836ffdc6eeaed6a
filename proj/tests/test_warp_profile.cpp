#include "psc/warp_profile.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace psc::warp;

namespace {

constexpr double kPi = std::numbers::pi;

ProfileParams params(double a, double b, double c, double eps = 0.05, double t_max = 10.0) {
  ProfileParams p;
  p.a = a;
  p.b = b;
  p.c = c;
  p.epsilon = eps;
  p.t_max = t_max;
  return p;
}

// Left and right limits of F, F', F'' at every blend boundary agree.
void check_c2_at_windows(const WarpFunction& f, double tol) {
  for (const auto& b : f.blends()) {
    if (!b) continue;
    for (double edge : {b->start, b->end}) {
      const double h = 1e-12;
      const Jet in = f(edge);
      const Jet lo = f(edge - h);
      const Jet hi = f(edge + h);
      CAPTURE(edge);
      CHECK(std::abs(lo.value - in.value) < tol);
      CHECK(std::abs(hi.value - in.value) < tol);
      CHECK(std::abs(lo.d1 - hi.d1) < tol);
      CHECK(std::abs(lo.d2 - hi.d2) < 1e-6);
    }
  }
}

}  // namespace

TEST_CASE("pieces") {
  const Jet s = evaluate(TrigPiece{2.0}, kPi / 2.0);
  CHECK(s.value == doctest::Approx(2.0 * std::sin(kPi / 4.0)));
  CHECK(s.d1 == doctest::Approx(std::cos(kPi / 4.0)));
  CHECK(s.d2 == doctest::Approx(-std::sin(kPi / 4.0) / 2.0));
  const Jet r = evaluate(RationalPiece{1.0, 2.0, 1.0}, 1.0);
  CHECK(r.value == doctest::Approx(0.0));
  CHECK(r.d1 == doctest::Approx(0.5));
  CHECK(r.d2 == doctest::Approx(-0.5));
  CHECK_THROWS_AS(evaluate(RationalPiece{1.0, 1.0, -2.0}, 1.0), ProfileError);
  const Jet q = evaluate(QuadraticPiece{1.0, 2.0, 3.0, 4.0}, 2.0);
  CHECK(q.value == doctest::Approx(7.0));
  CHECK(q.d1 == doctest::Approx(7.0));
  CHECK(q.d2 == doctest::Approx(4.0));
}

TEST_CASE("smoothstep") {
  CHECK(smoothstep(0.0) == 0.0);
  CHECK(smoothstep(1.0) == 1.0);
  CHECK(smoothstep(0.5) == doctest::Approx(0.5));
  CHECK(smoothstep_d1(0.5) == doctest::Approx(30.0 / 16.0));
  CHECK(smoothstep_integral(1.0) == doctest::Approx(0.5));
  for (double x = 0.05; x < 1.0; x += 0.1) {
    const double h = 1e-6;
    CHECK((smoothstep(x + h) - smoothstep(x - h)) / (2 * h) == doctest::Approx(smoothstep_d1(x)).epsilon(1e-8));
    CHECK((smoothstep_integral(x + h) - smoothstep_integral(x - h)) / (2 * h) ==
          doctest::Approx(smoothstep(x)).epsilon(1e-8));
    CHECK(smoothstep(x) + smoothstep(1.0 - x) == doctest::Approx(1.0));
  }
}

TEST_CASE("sine/constant profile crossing times") {
  SUBCASE("a = b = 1/2, c = 1") {
    const WarpProfile p = build_gz_profile(params(0.5, 0.5, 1.0));
    CHECK(p.t0 == doctest::Approx(0.252680).epsilon(1e-6));
    CHECK(p.t1 == doctest::Approx(0.523599).epsilon(1e-6));
    CHECK(p.functions[2](p.t0).value == doctest::Approx(0.25));
    CHECK(p.functions[2](p.t1).value == doctest::Approx(0.5));
    CHECK(p.functions[0](3.0).value == doctest::Approx(0.25));
    CHECK(p.functions[1](3.0).value == doctest::Approx(0.5));
    CHECK(p.functions[2](3.0).value == doctest::Approx(1.0));
    CHECK(p.functions[0](0.1).value == doctest::Approx(std::sin(0.1)));
  }
  SUBCASE("c = 2") {
    const WarpProfile p = build_gz_profile(params(0.5, 0.5, 2.0));
    CHECK(p.t1 == doctest::Approx(kPi / 3.0));
    CHECK(p.functions[2](10.0).value == doctest::Approx(2.0));
  }
  SUBCASE("a = b = 1 coincides with the sine") {
    const WarpProfile p = build_gz_profile(params(1.0, 1.0, 1.0));
    CHECK(p.t0 == doctest::Approx(kPi / 2.0));
    CHECK(p.t1 == doctest::Approx(kPi / 2.0));
    for (double t = 0.1; t < kPi / 2.0; t += 0.2) {
      CHECK(p.functions[0](t).value == p.functions[2](t).value);
      CHECK(p.functions[1](t).value == p.functions[2](t).value);
    }
  }
}

TEST_CASE("sine/constant profile parameter checks") {
  CHECK_THROWS_AS(build_gz_profile(params(1.5, 0.5, 1.0)), ProfileError);
  CHECK_THROWS_AS(build_gz_profile(params(0.5, -0.1, 1.0)), ProfileError);
  CHECK_THROWS_AS(build_gz_profile(params(0.5, 0.5, 0.0)), ProfileError);
  CHECK_THROWS_AS(build_gz_profile(params(0.5, 0.5, 1.0, 0.05, 1.0)), ProfileError);
  ProfileParams p = params(0.0, 0.5, 1.0);
  CHECK_THROWS_AS(build_gz_profile(p), ProfileError);
  p.dims = {0, 1, 1};
  const WarpProfile q = build_gz_profile(p);
  CHECK_FALSE(q.built(0));
  CHECK(q.functions[0](1.0).value == 0.0);
  p.dims = {0, 0, 0};
  CHECK_THROWS_AS(build_gz_profile(p), ProfileError);
  p.dims = {-1, 1, 1};
  CHECK_THROWS_AS(build_gz_profile(p), ProfileError);
}

TEST_CASE("modified profile extensions") {
  SUBCASE("F2 extension constant for c = 1, eps = 0.1") {
    const WarpProfile p = build_modified_profile(params(0.5, 0.5, 1.0, 0.1));
    const double t_star = kPi / 2.0 - 0.1;
    // independent: sin(pi/2 - 0.1) = cos(0.1)
    const double expected = 1.0 / (1.0 - std::cos(0.1)) - t_star;
    CHECK(p.lambdas[2] == doctest::Approx(expected).epsilon(1e-9));
    CHECK(p.lambdas[2] == doctest::Approx(198.6959).epsilon(1e-6));
    CHECK(p.functions[2](t_star).value == doctest::Approx(0.9950042).epsilon(1e-7));
    CHECK(p.functions[2](t_star + 1.0).d2 ==
          doctest::Approx(-2.0 / std::pow(t_star + 1.0 + p.lambdas[2], 3)));
  }
  SUBCASE("F1 extension matches value and slope, stays below bc") {
    const WarpProfile p = build_modified_profile(params(0.5, 0.5, 1.0, 0.05));
    const double tj = p.t1 - 0.05;
    const auto& segs = p.functions[1].segments();
    REQUIRE(segs.size() == 2);
    CHECK(segs[1].start == doctest::Approx(tj));
    const Jet left = evaluate(segs[0].piece, tj);
    const Jet right = evaluate(segs[1].piece, tj);
    CHECK(std::abs(left.value - right.value) < 1e-14);
    CHECK(std::abs(left.d1 - right.d1) < 1e-12);
    CHECK(p.kappas[1] > 0.0);
    for (double t = tj; t < 1e6; t *= 3.0) CHECK(p.functions[1](t).value < 0.5);
    CHECK(p.functions[1](1e6).value == doctest::Approx(0.5).epsilon(1e-6));
  }
  SUBCASE("eps must be below t0") {
    CHECK_THROWS_AS(build_modified_profile(params(0.5, 0.5, 1.0, 0.3)), ProfileError);
    CHECK_THROWS_AS(build_modified_profile(params(0.5, 0.5, 1.0, 0.0)), ProfileError);
    CHECK_NOTHROW(build_modified_profile(params(0.5, 0.5, 1.0, 0.25)));
  }
  SUBCASE("a, b must be below 1") {
    CHECK_THROWS_AS(build_modified_profile(params(1.0, 0.5, 1.0)), ProfileError);
    CHECK_THROWS_AS(build_modified_profile(params(0.5, 1.0, 1.0)), ProfileError);
  }
  SUBCASE("small eps pushes lambda2 up") {
    const double l1 = build_modified_profile(params(0.5, 0.5, 1.0, 0.05)).lambdas[2];
    const double l2 = build_modified_profile(params(0.5, 0.5, 1.0, 0.01)).lambdas[2];
    CHECK(l2 > 20.0 * l1);
  }
}

TEST_CASE("evaluation") {
  const WarpProfile p = build_gz_profile(params(0.5, 0.5, 1.0));
  const ProfileJet j = eval_profile(p, kPi / 4.0);
  const double r = std::sqrt(2.0) / 2.0;
  CHECK(j[2].value == doctest::Approx(r));
  CHECK(j[2].d1 == doctest::Approx(r));
  CHECK(j[2].d2 == doctest::Approx(-r));
  const ProfileJet z = eval_profile(p, 0.0);
  for (const auto& f : z) {
    CHECK(f.value == 0.0);
    CHECK(f.d1 == 1.0);
  }
  CHECK_THROWS_AS(eval_profile(p, -1e-3), std::out_of_range);
  CHECK_THROWS_AS(eval_profile(p, 10.5), std::out_of_range);
}

TEST_CASE("smoothing") {
  SUBCASE("delta = 0 is the identity") {
    const WarpProfile p = build_gz_profile(params(0.5, 0.5, 1.0));
    const WarpProfile q = smooth_profile(p, 0.0);
    for (double t = 0.05; t < 3.0; t += 0.1)
      for (std::size_t i = 0; i < 3; ++i) CHECK(q.functions[i](t).value == p.functions[i](t).value);
  }
  SUBCASE("sine/constant: F2' continuous across pi/2, C^2 at the window edges") {
    const WarpProfile p = smooth_profile(build_gz_profile(params(0.5, 0.5, 1.0)), 0.01);
    const double half = kPi / 2.0;
    CHECK(std::abs(p.functions[2](half - 1e-12).d1 - p.functions[2](half + 1e-12).d1) < 1e-9);
    for (const auto& f : p.functions) check_c2_at_windows(f, 1e-9);
    for (const auto& f : p.functions)
      for (const auto& b : f.blends()) {
        REQUIRE(b);
        CHECK(b->amplitude <= 0.0);
        CHECK(b->end - b->start <= 0.02 + 1e-15);
      }
    // F is untouched outside the windows
    CHECK(p.functions[2](half + 0.02).value == 1.0);
    CHECK(p.functions[0](1.0).value == 0.25);
  }
  SUBCASE("modified: strictly concave everywhere") {
    const WarpProfile p = smooth_profile(build_modified_profile(params(0.5, 0.5, 1.0)), 0.01);
    for (const auto& f : p.functions) {
      check_c2_at_windows(f, 1e-9);
      double worst = -1.0;
      for (int k = 1; k <= 4096; ++k) worst = std::max(worst, f(10.0 * k / 4096.0).d2);
      CHECK(worst < 0.0);
    }
  }
  SUBCASE("oversized windows are rejected") {
    const WarpProfile p = build_gz_profile(params(0.5, 0.5, 1.0));
    CHECK_THROWS_AS(smooth_profile(p, 0.3), ProfileError);
    CHECK_THROWS_AS(smooth_profile(p, -0.1), ProfileError);
    CHECK_THROWS_AS(smooth_profile(smooth_profile(p, 0.01), 0.01), ProfileError);
  }
  SUBCASE("breakpoints and trig lookup") {
    const WarpProfile p = smooth_profile(build_gz_profile(params(0.5, 0.5, 1.0)), 0.01);
    CHECK(p.functions[2].breakpoints() == std::vector<double>{kPi / 2.0});
    CHECK(p.functions[2].trig_at(0.5) != nullptr);
    CHECK(p.functions[2].trig_at(kPi / 2.0) == nullptr);
    CHECK(p.functions[2].trig_at(2.0) == nullptr);
  }
}

TEST_CASE("warp function construction") {
  CHECK_THROWS_AS(WarpFunction(std::vector<Segment>{}), ProfileError);
  CHECK_THROWS_AS(WarpFunction({{0.5, ConstantPiece{1.0}}}), ProfileError);
  CHECK_THROWS_AS(WarpFunction({{0.0, ConstantPiece{1.0}}, {0.0, ConstantPiece{1.0}}}), ProfileError);
  WarpFunction f({{0.0, TrigPiece{1.0}}});
  CHECK_THROWS_AS(f.set_blend(0, Blend{}), std::out_of_range);
}
