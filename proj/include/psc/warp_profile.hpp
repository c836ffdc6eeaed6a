#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

namespace psc::warp {

/// Value and first two derivatives of a function of t.
struct Jet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// c sin(t / c)
struct TrigPiece {
  double c = 1.0;
};
struct ConstantPiece {
  double value = 0.0;
};
/// limit - kappa / (t + lambda); concave and increasing towards `limit` for kappa > 0.
struct RationalPiece {
  double limit = 0.0;
  double kappa = 0.0;
  double lambda = 0.0;
};
/// value + slope (t - origin) + curvature (t - origin)^2 / 2
struct QuadraticPiece {
  double origin = 0.0;
  double value = 0.0;
  double slope = 0.0;
  double curvature = 0.0;
};

using Piece = std::variant<TrigPiece, ConstantPiece, RationalPiece, QuadraticPiece>;

Jet evaluate(const Piece& piece, double t);

/// Smoothed corner on [start, end]. Inside the window
///   F'' = (1 - chi) left'' + chi right'' + amplitude * chi'
/// where chi is the quintic smoothstep across the window; start, end and
/// amplitude are solved so that F and F' meet the right piece at `end`.
struct Blend {
  double start = 0.0;
  double end = 0.0;
  double amplitude = 0.0;
};

struct Segment {
  double start = 0.0;
  Piece piece;
};

/// Piecewise-analytic function on [0, inf) with optional smoothed joints.
class WarpFunction {
 public:
  /// The zero function.
  WarpFunction() : WarpFunction({{0.0, ConstantPiece{0.0}}}) {}
  explicit WarpFunction(std::vector<Segment> segments);

  Jet operator()(double t) const;

  /// F'/F and F''/F, using closed forms on unsmoothed trig pieces so that the
  /// ratios stay accurate as t -> 0.
  std::pair<double, double> log_ratios(double t) const;

  const std::vector<Segment>& segments() const { return segments_; }
  /// blends()[j] smooths the joint between segments j and j + 1.
  const std::vector<std::optional<Blend>>& blends() const { return blends_; }
  void set_blend(std::size_t joint, Blend blend);

  std::vector<double> breakpoints() const;
  /// The trig piece active at t, if t is on an unblended trig segment.
  const TrigPiece* trig_at(double t) const;

 private:
  std::size_t segment_index(double t) const;
  Jet blended(std::size_t joint, double t) const;

  std::vector<Segment> segments_;
  std::vector<std::optional<Blend>> blends_;
};

enum class ProfileKind { Trig, GroveZiller, Modified, Custom };

std::string_view to_string(ProfileKind kind);

struct ProfileParams {
  double a = 0.5;
  double b = 0.5;
  double c = 1.0;
  std::array<int, 3> dims{1, 1, 1};
  double epsilon = 0.05;
  double t_max = 10.0;
};

/// The warping functions F_0, F_1, F_2 of the metric
///   dt^2 + f_0^2 Q|p0 + f_1^2 Q|p1 + f_2^2 Q|p2 + Q|m,
/// with F_0 = abc f_0, F_1 = bc f_1, F_2 = c f_2 and d_i = dim p_i.
struct WarpProfile {
  ProfileKind kind = ProfileKind::Custom;
  double a = 0.0;
  double b = 0.0;
  double c = 1.0;
  std::array<int, 3> dims{0, 0, 0};
  double t0 = 0.0;  ///< F_2(t0) = abc
  double t1 = 0.0;  ///< F_2(t1) = bc
  double epsilon = 0.0;
  std::array<double, 3> lambdas{0.0, 0.0, 0.0};  ///< extension constants (modified profile)
  std::array<double, 3> kappas{0.0, 0.0, 0.0};
  std::array<WarpFunction, 3> functions;
  double delta = 0.0;  ///< smoothing window half-width, 0 if unsmoothed
  double t_max = 0.0;

  std::array<double, 3> scales() const { return {a * b * c, b * c, c}; }
  /// A block takes part in the curvature sums iff d_i > 0.
  bool active(std::size_t i) const { return dims[i] > 0; }
  /// F_i is defined (non-zero scale); inactive blocks may still be built.
  bool built(std::size_t i) const { return scales()[i] > 0.0; }
};

class ProfileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All three F_i equal c sin(t / c); requires t_max < pi c.
WarpProfile build_trig_profile(double c, std::array<int, 3> dims, double t_max);

/// Sine up to the crossing times, then constant: F_2 = c sin(t/c) up to pi c / 2,
/// F_1 = F_2 up to t1 then bc, F_0 = F_2 up to t0 then abc. a = 1 or b = 1 is
/// accepted as the limit where the corresponding functions coincide with F_2.
WarpProfile build_gz_profile(const ProfileParams& params);

/// As the sine/constant profile but every tail is a concave rational function:
/// F_2 continues as c - 1/(t + lambda_2) from pi c / 2 - epsilon; F_1 and F_0
/// continue from t1 - epsilon and t0 - epsilon as bc - kappa/(t + lambda) and
/// abc - kappa/(t + lambda), matched in value and slope.
WarpProfile build_modified_profile(const ProfileParams& params);

/// Smooths every joint on a window of half-width at most delta around it.
/// delta = 0 returns the profile unchanged.
WarpProfile smooth_profile(const WarpProfile& profile, double delta);

using ProfileJet = std::array<Jet, 3>;

/// Throws std::out_of_range for t outside [0, t_max].
ProfileJet eval_profile(const WarpProfile& profile, double t);

/// The quintic smoothstep 6x^5 - 15x^4 + 10x^3 and its derivatives / integral.
double smoothstep(double x);
double smoothstep_d1(double x);
double smoothstep_integral(double x);

}  // namespace psc::warp
