#include "psc/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace psc {

using warp::WarpProfile;

namespace {

/// Everything the Ricci formulas need from one function at t.
struct Local {
  double value = 0.0;
  double d1 = 0.0;
  double r1 = 0.0;  // F'/F
  double r2 = 0.0;  // F''/F
};

RicciSample trig_limit(const WarpProfile& p) {
  double c = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!p.active(i)) continue;
    const auto* trig = p.functions[i].trig_at(0.0);
    if (!trig || (c != 0.0 && trig->c != c)) {
      throw std::domain_error("ric_functions: t = 0 needs every active F_i to start as c sin(t/c)");
    }
    c = trig->c;
  }
  const double d0 = p.dims[0], d1 = p.dims[1], d2 = p.dims[2];
  const double c2 = c * c;
  RicciSample s;
  s.t = 0.0;
  s.ric_t = (d0 + d1 + d2) / c2;
  if (p.active(0)) s.ric[0] = (d1 + d2 + 1.0) / c2;
  if (p.active(1)) s.ric[1] = (d0 + d1 + d2) / c2;
  if (p.active(2)) s.ric[2] = (d0 + d1 + d2) / c2;
  return s;
}

}  // namespace

RicciSample ric_functions(const WarpProfile& p, double t) {
  const warp::ProfileJet jet = warp::eval_profile(p, t);
  if (t == 0.0) return trig_limit(p);

  std::array<Local, 3> f;
  for (std::size_t i = 0; i < 3; ++i) {
    f[i].value = jet[i].value;
    f[i].d1 = jet[i].d1;
    if (!p.active(i)) continue;
    if (!(jet[i].value > 0.0)) {
      std::ostringstream os;
      os << "ric_functions: F_" << i << " vanishes at t = " << t;
      throw std::domain_error(os.str());
    }
    std::tie(f[i].r1, f[i].r2) = p.functions[i].log_ratios(t);
  }
  const double d0 = p.dims[0], d1 = p.dims[1], d2 = p.dims[2];
  auto sq = [](double x) { return x * x; };

  RicciSample s;
  s.t = t;
  s.ric_t = -(d0 * f[0].r2 + d1 * f[1].r2 + d2 * f[2].r2);

  if (p.active(0)) {
    double inv4 = 0.0;
    double drift = 0.0;
    if (p.active(1)) {
      inv4 += d1 / sq(sq(f[1].value));
      drift += d1 * f[1].r1;
    }
    if (p.active(2)) {
      inv4 += d2 / sq(sq(f[2].value));
      drift += d2 * f[2].r1;
    }
    s.ric[0] = inv4 * sq(f[0].value) - drift * f[0].r1 - f[0].r2;
  }
  if (p.active(1)) {
    const double F1 = f[1].value;
    const double q01 = sq(f[0].value) / sq(F1);
    double num = (d1 - 1.0) * (4.0 - 3.0 * q01 - sq(f[1].d1));
    double drift = 0.0;
    if (p.active(0)) {
      num += d0 * q01;
      drift += d0 * f[0].r1;
    }
    double value = num / sq(F1);
    if (p.active(2)) {
      value += d2 * sq(F1) / sq(sq(f[2].value));
      drift += d2 * f[2].r1;
    }
    s.ric[1] = value - drift * f[1].r1 - f[1].r2;
  }
  if (p.active(2)) {
    const double F2 = f[2].value;
    double num = (d2 - 1.0) * (1.0 - sq(f[2].d1));
    double drift = 0.0;
    if (p.active(0)) {
      num += d0 * (3.0 - 2.0 * sq(f[0].value) / sq(F2));
      drift += d0 * f[0].r1;
    }
    if (p.active(1)) {
      num += d1 * (3.0 - 2.0 * sq(f[1].value) / sq(F2));
      drift += d1 * f[1].r1;
    }
    s.ric[2] = num / sq(F2) - drift * f[2].r1 - f[2].r2;
  }
  return s;
}

double ric_T(const WarpProfile& profile, double t) { return ric_functions(profile, t).ric_t; }

BlockSplitting BlockSplitting::make(LieAlgebra algebra, Subspace h, std::array<Subspace, 3> p,
                                    double tol) {
  std::vector<Subspace> parts{h, p[0], p[1], p[2]};
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (parts[i].is_zero() || parts[j].is_zero()) continue;
      const double overlap = (parts[i].basis().transpose() * parts[j].basis()).cwiseAbs().maxCoeff();
      if (overlap > tol) throw std::invalid_argument("BlockSplitting: blocks are not Q-orthogonal");
    }
  BlockSplitting out;
  out.m = orthogonal_complement(algebra, direct_sum(parts, tol), tol);
  out.algebra = std::move(algebra);
  out.h = std::move(h);
  out.p = std::move(p);
  return out;
}

std::array<int, 3> BlockSplitting::dims() const {
  return {static_cast<int>(p[0].dim()), static_cast<int>(p[1].dim()), static_cast<int>(p[2].dim())};
}

double ric_A(const BlockSplitting& split, const Vector& a, const std::array<double, 3>& f,
             double tol) {
  if (split.m.residual(a) > tol * std::max(1.0, a.norm()))
    throw std::invalid_argument("ric_A: A must lie in m");
  for (double fi : f)
    if (!(fi >= 0.0 && fi <= std::sqrt(2.0) + tol))
      throw std::invalid_argument("ric_A: f_i must lie in [0, sqrt 2]");

  double total = 0.0;
  for (std::size_t k = 0; k < split.m.dim(); ++k) {
    const Vector br = split.algebra.bracket(a, split.m.basis_vector(k));
    total += split.h.project(br).squaredNorm();
    total += 0.25 * split.m.project(br).squaredNorm();
    for (std::size_t i = 0; i < 3; ++i)
      total += (1.0 - 0.5 * f[i] * f[i]) * split.p[i].project(br).squaredNorm();
  }
  return total;
}

bool CurvatureReport::concave() const {
  for (const auto& fa : functions)
    if (fa.active && !fa.strictly_concave) return false;
  return true;
}

CurvatureReport verify_profile(const WarpProfile& p, std::size_t grid_size, double tol) {
  if (grid_size == 0) throw std::invalid_argument("verify_profile: grid size must be positive");
  if (!(tol >= 0.0)) throw std::invalid_argument("verify_profile: tolerance must be non-negative");

  CurvatureReport r;
  r.grid_size = grid_size;
  r.tol = tol;
  r.samples.reserve(grid_size);

  const double inf = std::numeric_limits<double>::infinity();
  const std::array<double, 3> scales = p.scales();
  r.min_ric_t = inf;
  for (std::size_t i = 0; i < 3; ++i) {
    auto& fa = r.functions[i];
    fa.built = p.built(i);
    fa.active = p.active(i);
    fa.max_second_derivative = -inf;
    fa.f_min = inf;
    fa.f_max = -inf;
    if (fa.built) fa.slope_at_zero = p.functions[i](0.0).d1 / scales[i];
  }
  r.ordered = true;

  for (std::size_t k = 1; k <= grid_size; ++k) {
    const double t = p.t_max * static_cast<double>(k) / static_cast<double>(grid_size);
    RicciSample s = ric_functions(p, t);
    r.min_ric_t = std::min(r.min_ric_t, s.ric_t);
    for (std::size_t i = 0; i < 3; ++i)
      if (s.ric[i]) r.min_ric[i] = std::min(r.min_ric[i].value_or(inf), *s.ric[i]);

    const warp::ProfileJet jet = warp::eval_profile(p, t);
    for (std::size_t i = 0; i < 3; ++i) {
      auto& fa = r.functions[i];
      if (!fa.built) continue;
      fa.max_second_derivative = std::max(fa.max_second_derivative, jet[i].d2);
      if (jet[i].d2 >= 0.0) ++fa.nonnegative_second_derivative;
      const double fi = jet[i].value / scales[i];
      fa.f_min = std::min(fa.f_min, fi);
      fa.f_max = std::max(fa.f_max, fi);
    }
    constexpr double kOrderSlack = 1e-12;
    for (std::size_t i = 0; i + 1 < 3; ++i)
      if (p.built(i) && p.built(i + 1) && jet[i].value > jet[i + 1].value + kOrderSlack)
        r.ordered = false;
    r.samples.push_back(std::move(s));
  }

  for (auto& fa : r.functions) {
    if (!fa.built) continue;
    constexpr double kUnitSlack = 1e-12;
    fa.f_in_unit_interval = fa.f_min >= -kUnitSlack && fa.f_max <= 1.0 + kUnitSlack;
    fa.strictly_concave = fa.nonnegative_second_derivative == 0;
  }

  r.uniform_lower_bound = r.min_ric_t;
  for (const auto& m : r.min_ric)
    if (m) r.uniform_lower_bound = std::min(r.uniform_lower_bound, *m);
  r.nonnegative = r.uniform_lower_bound >= -tol;
  r.uniformly_positive = r.uniform_lower_bound >= tol;
  return r;
}

}  // namespace psc
