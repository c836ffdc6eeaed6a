#pragma once

#include "psc/lie_algebra.hpp"
#include "psc/warp_profile.hpp"

#include <array>
#include <optional>
#include <vector>

namespace psc {

/// Radial Ricci term and the normalized Ricci values on the three blocks.
/// A block with d_i = 0 has no value.
struct RicciSample {
  double t = 0.0;
  double ric_t = 0.0;
  std::array<std::optional<double>, 3> ric{};
};

/// Ricci functions of the doubly warped metric at t. At t = 0 the all-sine
/// limit is returned, which requires every active F_i to start as c sin(t/c).
/// Throws std::domain_error if an active F_i vanishes at t > 0.
RicciSample ric_functions(const warp::WarpProfile& profile, double t);

/// Ric(T, T) = -sum_i d_i F_i''/F_i.
double ric_T(const warp::WarpProfile& profile, double t);

/// Q-orthogonal splitting g = h + p0 + p1 + p2 + m used by the metric
/// Q|h + f0^2 Q|p0 + f1^2 Q|p1 + f2^2 Q|p2 + Q|m on the singular orbit side.
struct BlockSplitting {
  LieAlgebra algebra;
  Subspace h;
  std::array<Subspace, 3> p;
  Subspace m;

  /// m is the orthogonal complement of h + p0 + p1 + p2. Throws
  /// std::invalid_argument if the given parts are not mutually orthogonal.
  static BlockSplitting make(LieAlgebra algebra, Subspace h, std::array<Subspace, 3> p,
                             double tol = kRankTol);
  std::array<int, 3> dims() const;
};

/// Ricci curvature Ric(A, A) for A in m at the f_i of a point:
///   sum_k |[A,e_k]_h|^2 + 1/4 |[A,e_k]_m|^2 + sum_i (1 - f_i^2/2) |[A,e_k]_{p_i}|^2
/// over an orthonormal basis e_k of m. Non-negative whenever every f_i <= sqrt 2.
/// Throws std::invalid_argument if A is not in m or some f_i lies outside [0, sqrt 2].
double ric_A(const BlockSplitting& split, const Vector& a, const std::array<double, 3>& f,
             double tol = kRankTol);

struct FunctionAudit {
  bool built = false;
  bool active = false;
  double max_second_derivative = 0.0;
  std::size_t nonnegative_second_derivative = 0;  ///< grid points with F'' >= 0
  double f_min = 0.0;                             ///< range of f_i = F_i / scale_i
  double f_max = 0.0;
  double slope_at_zero = 0.0;                     ///< f_i'(0)
  bool f_in_unit_interval = false;
  bool strictly_concave = false;
};

struct CurvatureReport {
  std::size_t grid_size = 0;
  double tol = 0.0;
  std::vector<RicciSample> samples;
  double min_ric_t = 0.0;
  std::array<std::optional<double>, 3> min_ric{};
  double uniform_lower_bound = 0.0;  ///< min over ric_t and every active ric_i
  bool nonnegative = false;          ///< every minimum >= -tol
  bool uniformly_positive = false;   ///< every minimum >= tol
  std::array<FunctionAudit, 3> functions;
  bool ordered = false;              ///< F_0 <= F_1 <= F_2 over built functions

  bool concave() const;
};

/// Samples the Ricci functions on t_k = k t_max / N, k = 1..N.
CurvatureReport verify_profile(const warp::WarpProfile& profile, std::size_t grid_size = 4096,
                               double tol = 1e-6);

}  // namespace psc
