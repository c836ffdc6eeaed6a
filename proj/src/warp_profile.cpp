#include "psc/warp_profile.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace psc::warp {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using Quadrature = boost::math::quadrature::gauss<double, 20>;

}  // namespace

Jet evaluate(const Piece& piece, double t) {
  return std::visit(
      overloaded{
          [t](const TrigPiece& p) {
            const double s = std::sin(t / p.c);
            return Jet{p.c * s, std::cos(t / p.c), -s / p.c};
          },
          [](const ConstantPiece& p) { return Jet{p.value, 0.0, 0.0}; },
          [t](const RationalPiece& p) {
            const double u = t + p.lambda;
            if (u <= 0.0) throw ProfileError("rational piece evaluated at its pole");
            return Jet{p.limit - p.kappa / u, p.kappa / (u * u), -2.0 * p.kappa / (u * u * u)};
          },
          [t](const QuadraticPiece& p) {
            const double s = t - p.origin;
            return Jet{p.value + p.slope * s + 0.5 * p.curvature * s * s, p.slope + p.curvature * s,
                       p.curvature};
          },
      },
      piece);
}

double smoothstep(double x) {
  x = std::clamp(x, 0.0, 1.0);
  return x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}

double smoothstep_d1(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double y = x * (1.0 - x);
  return 30.0 * y * y;
}

double smoothstep_integral(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 0.5 + (x - 1.0);
  const double x2 = x * x;
  return x2 * x2 * (2.5 + x * (-3.0 + x));
}

WarpFunction::WarpFunction(std::vector<Segment> segments) : segments_(std::move(segments)) {
  if (segments_.empty()) throw ProfileError("warp function needs at least one segment");
  if (segments_.front().start != 0.0) throw ProfileError("first segment must start at t = 0");
  for (std::size_t j = 1; j < segments_.size(); ++j)
    if (!(segments_[j].start > segments_[j - 1].start))
      throw ProfileError("segment starts must be strictly increasing");
  blends_.assign(segments_.size() - 1, std::nullopt);
}

void WarpFunction::set_blend(std::size_t joint, Blend blend) {
  if (joint >= blends_.size()) throw std::out_of_range("set_blend: no such joint");
  blends_[joint] = blend;
}

std::size_t WarpFunction::segment_index(double t) const {
  std::size_t j = 0;
  while (j + 1 < segments_.size() && segments_[j + 1].start <= t) ++j;
  return j;
}

Jet WarpFunction::operator()(double t) const {
  for (std::size_t j = 0; j < blends_.size(); ++j)
    if (blends_[j] && blends_[j]->start <= t && t <= blends_[j]->end) return blended(j, t);
  return evaluate(segments_[segment_index(t)].piece, t);
}

Jet WarpFunction::blended(std::size_t joint, double t) const {
  const Piece& left = segments_[joint].piece;
  const Piece& right = segments_[joint + 1].piece;
  const Blend& bl = *blends_[joint];
  const double a = bl.start;
  const double w = bl.end - bl.start;
  auto q = [&](double s) {
    const double chi = smoothstep((s - a) / w);
    return (1.0 - chi) * evaluate(left, s).d2 + chi * evaluate(right, s).d2;
  };
  const Jet la = evaluate(left, a);
  const double x = (t - a) / w;
  Jet out;
  out.d2 = q(t) + bl.amplitude * smoothstep_d1(x) / w;
  if (t > a) {
    out.d1 = la.d1 + Quadrature::integrate(q, a, t) + bl.amplitude * smoothstep(x);
    out.value = la.value + la.d1 * (t - a) +
                Quadrature::integrate([&](double s) { return (t - s) * q(s); }, a, t) +
                bl.amplitude * w * smoothstep_integral(x);
  } else {
    out.d1 = la.d1;
    out.value = la.value;
  }
  return out;
}

std::pair<double, double> WarpFunction::log_ratios(double t) const {
  if (const TrigPiece* p = trig_at(t); p && t > 0.0) {
    return {1.0 / (p->c * std::tan(t / p->c)), -1.0 / (p->c * p->c)};
  }
  const Jet j = (*this)(t);
  return {j.d1 / j.value, j.d2 / j.value};
}

std::vector<double> WarpFunction::breakpoints() const {
  std::vector<double> out;
  for (std::size_t j = 1; j < segments_.size(); ++j) out.push_back(segments_[j].start);
  return out;
}

const TrigPiece* WarpFunction::trig_at(double t) const {
  for (const auto& b : blends_)
    if (b && b->start <= t && t <= b->end) return nullptr;
  return std::get_if<TrigPiece>(&segments_[segment_index(t)].piece);
}

std::string_view to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::Trig: return "trig";
    case ProfileKind::GroveZiller: return "gz";
    case ProfileKind::Modified: return "modified";
    case ProfileKind::Custom: return "custom";
  }
  return "unknown";
}

namespace {

void check_common(const ProfileParams& p) {
  if (!(p.c > 0.0) || !std::isfinite(p.c)) throw ProfileError("c must be positive");
  int total = 0;
  for (int d : p.dims) {
    if (d < 0) throw ProfileError("block dimensions must be non-negative");
    total += d;
  }
  if (total == 0) throw ProfileError("at least one block dimension must be positive");
  if (!(p.t_max > 0.0) || !std::isfinite(p.t_max)) throw ProfileError("t_max must be positive");
}

WarpProfile base_profile(const ProfileParams& p, ProfileKind kind) {
  WarpProfile out;
  out.kind = kind;
  out.a = p.a;
  out.b = p.b;
  out.c = p.c;
  out.dims = p.dims;
  out.t_max = p.t_max;
  out.t0 = p.c * std::asin(std::min(1.0, p.a * p.b));
  out.t1 = p.c * std::asin(std::min(1.0, p.b));
  return out;
}

}  // namespace

WarpProfile build_trig_profile(double c, std::array<int, 3> dims, double t_max) {
  ProfileParams p;
  p.a = 1.0;
  p.b = 1.0;
  p.c = c;
  p.dims = dims;
  p.t_max = t_max;
  check_common(p);
  if (!(t_max < kPi * c)) throw ProfileError("trig profile needs t_max < pi c");
  WarpProfile out = base_profile(p, ProfileKind::Trig);
  for (auto& f : out.functions) f = WarpFunction({{0.0, TrigPiece{c}}});
  return out;
}

WarpProfile build_gz_profile(const ProfileParams& p) {
  check_common(p);
  if (!(p.a >= 0.0 && p.a <= 1.0) || !(p.b >= 0.0 && p.b <= 1.0))
    throw ProfileError("a and b must lie in [0, 1]");
  if (p.dims[0] > 0 && !(p.a * p.b > 0.0)) throw ProfileError("d0 > 0 needs a, b > 0");
  if (p.dims[1] > 0 && !(p.b > 0.0)) throw ProfileError("d1 > 0 needs b > 0");
  const double half = 0.5 * kPi * p.c;
  if (!(p.t_max > half)) throw ProfileError("t_max must exceed pi c / 2");

  WarpProfile out = base_profile(p, ProfileKind::GroveZiller);
  const std::array<double, 3> scales = out.scales();
  const std::array<double, 3> crossings{out.t0, out.t1, half};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(scales[i] > 0.0)) {
      out.functions[i] = WarpFunction();
    } else if (scales[i] >= p.c) {
      out.functions[i] = WarpFunction({{0.0, TrigPiece{p.c}}, {half, ConstantPiece{p.c}}});
    } else {
      out.functions[i] =
          WarpFunction({{0.0, TrigPiece{p.c}}, {crossings[i], ConstantPiece{scales[i]}}});
    }
  }
  return out;
}

WarpProfile build_modified_profile(const ProfileParams& p) {
  check_common(p);
  if (p.dims[0] > 0 && !(p.a > 0.0 && p.a < 1.0)) throw ProfileError("a must lie in (0, 1)");
  if (p.dims[0] + p.dims[1] > 0 && !(p.b > 0.0 && p.b < 1.0))
    throw ProfileError("b must lie in (0, 1)");
  if (!(p.a >= 0.0 && p.a < 1.0) || !(p.b >= 0.0 && p.b < 1.0))
    throw ProfileError("a and b must lie in [0, 1)");
  const double half = 0.5 * kPi * p.c;
  if (!(p.t_max > half)) throw ProfileError("t_max must exceed pi c / 2");

  WarpProfile out = base_profile(p, ProfileKind::Modified);
  out.epsilon = p.epsilon;
  const std::array<double, 3> scales = out.scales();
  const std::array<double, 3> crossings{out.t0, out.t1, half};

  double first_crossing = half;
  for (std::size_t i = 0; i < 3; ++i)
    if (scales[i] > 0.0) first_crossing = std::min(first_crossing, crossings[i]);
  if (!(p.epsilon > 0.0 && p.epsilon < first_crossing)) {
    std::ostringstream os;
    os << "epsilon must lie in (0, " << first_crossing << ")";
    throw ProfileError(os.str());
  }

  for (std::size_t i = 0; i < 3; ++i) {
    if (!(scales[i] > 0.0)) {
      out.functions[i] = WarpFunction();
      continue;
    }
    const double tj = crossings[i] - p.epsilon;
    const Jet at = evaluate(TrigPiece{p.c}, tj);
    const double gap = scales[i] - at.value;
    double kappa = 1.0;
    double lambda = 0.0;
    if (i == 2) {
      lambda = 1.0 / gap - tj;
    } else {
      if (!(gap > 0.0) || !(at.d1 > 0.0)) throw ProfileError("cannot match rational tail");
      lambda = gap / at.d1 - tj;
      kappa = gap * gap / at.d1;
    }
    out.kappas[i] = kappa;
    out.lambdas[i] = lambda;
    out.functions[i] =
        WarpFunction({{0.0, TrigPiece{p.c}}, {tj, RationalPiece{scales[i], kappa, lambda}}});
  }
  return out;
}

namespace {

struct Mismatch {
  double value = 0.0;
  double amplitude = 0.0;
};

/// Value mismatch at the right end of the window [a, b] after the slope has
/// been matched by the bump amplitude.
Mismatch blend_mismatch(const Piece& left, const Piece& right, double a, double b) {
  const double w = b - a;
  auto q = [&](double s) {
    const double chi = smoothstep((s - a) / w);
    return (1.0 - chi) * evaluate(left, s).d2 + chi * evaluate(right, s).d2;
  };
  const Jet la = evaluate(left, a);
  const Jet rb = evaluate(right, b);
  Mismatch m;
  m.amplitude = rb.d1 - la.d1 - Quadrature::integrate(q, a, b);
  m.value = la.value + la.d1 * w +
            Quadrature::integrate([&](double s) { return (b - s) * q(s); }, a, b) +
            0.5 * m.amplitude * w - rb.value;
  return m;
}

bool seamless(const Piece& left, const Piece& right, double tb) {
  const Jet l = evaluate(left, tb);
  const Jet r = evaluate(right, tb);
  const double scale = 1e-14 * std::max({1.0, std::abs(l.value), std::abs(l.d2)});
  return std::abs(l.value - r.value) <= scale && std::abs(l.d1 - r.d1) <= scale &&
         std::abs(l.d2 - r.d2) <= scale;
}

std::optional<Blend> solve_blend(const Piece& left, const Piece& right, double tb, double delta) {
  if (seamless(left, right, tb)) return std::nullopt;

  // side 0 pins the left end at tb - delta, side 1 the right end at tb + delta;
  // theta in (0, 1] scales the free end.
  auto window = [&](int side, double theta) {
    return side == 0 ? std::pair{tb - delta, tb + theta * delta}
                     : std::pair{tb - theta * delta, tb + delta};
  };
  auto phi = [&](int side, double theta) {
    const auto [a, b] = window(side, theta);
    return blend_mismatch(left, right, a, b);
  };

  struct Candidate {
    double theta;
    int side;
    Mismatch m;
  };
  std::vector<Candidate> found;
  const Mismatch sym = phi(0, 1.0);
  const double scale = std::max(1.0, std::abs(evaluate(left, tb).value));
  if (std::abs(sym.value) <= 1e-15 * scale) found.push_back({1.0, 0, sym});

  constexpr int kSteps = 200;
  constexpr double kThetaMin = 0.02;
  for (int side = 0; side < 2; ++side) {
    double hi = 1.0;
    double f_hi = sym.value;
    for (int s = 1; s <= kSteps; ++s) {
      const double lo = 1.0 - (1.0 - kThetaMin) * s / kSteps;
      const double f_lo = phi(side, lo).value;
      if ((f_lo < 0.0) != (f_hi < 0.0) && f_lo != 0.0) {
        auto f = [&](double th) { return phi(side, th).value; };
        boost::math::tools::eps_tolerance<double> tol(50);
        std::uintmax_t iters = 100;
        const auto [r0, r1] = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, tol, iters);
        const double theta = 0.5 * (r0 + r1);
        found.push_back({theta, side, phi(side, theta)});
      } else if (f_lo == 0.0) {
        found.push_back({lo, side, phi(side, lo)});
      }
      hi = lo;
      f_hi = f_lo;
    }
  }
  if (found.empty()) {
    std::ostringstream os;
    os << "cannot smooth the corner at t = " << tb << " within half-width " << delta;
    throw ProfileError(os.str());
  }
  auto better = [](const Candidate& x, const Candidate& y) {
    const bool cx = x.m.amplitude <= 0.0;
    const bool cy = y.m.amplitude <= 0.0;
    if (cx != cy) return cx;
    return x.theta > y.theta;
  };
  const Candidate best = *std::min_element(found.begin(), found.end(), better);
  const auto [a, b] = window(best.side, best.theta);
  return Blend{a, b, best.m.amplitude};
}

}  // namespace

WarpProfile smooth_profile(const WarpProfile& profile, double delta) {
  if (!(delta >= 0.0) || !std::isfinite(delta)) throw ProfileError("delta must be non-negative");
  if (profile.delta > 0.0) throw ProfileError("profile is already smoothed");
  WarpProfile out = profile;
  if (delta == 0.0) return out;
  out.delta = delta;
  for (auto& f : out.functions) {
    const auto& segs = f.segments();
    for (std::size_t j = 0; j + 1 < segs.size(); ++j) {
      const double tb = segs[j + 1].start;
      const double prev = segs[j].start;
      const double next = j + 2 < segs.size() ? segs[j + 2].start : INFINITY;
      if (!(tb - delta > prev + (j == 0 ? 0.0 : delta)) || !(tb + delta < next - delta)) {
        std::ostringstream os;
        os << "delta = " << delta << " is too large for the breakpoint at t = " << tb;
        throw ProfileError(os.str());
      }
      if (auto blend = solve_blend(segs[j].piece, segs[j + 1].piece, tb, delta))
        f.set_blend(j, *blend);
    }
  }
  return out;
}

ProfileJet eval_profile(const WarpProfile& profile, double t) {
  if (!(t >= 0.0) || t > profile.t_max * (1.0 + 1e-14)) {
    std::ostringstream os;
    os << "t = " << t << " outside [0, " << profile.t_max << "]";
    throw std::out_of_range(os.str());
  }
  return {profile.functions[0](t), profile.functions[1](t), profile.functions[2](t)};
}

}  // namespace psc::warp
