#pragma once

#include "psc/warp_profile.hpp"

#include <cstddef>
#include <vector>

namespace psc {

/// Normalized diagonal Ricci curvatures R_ii / g_ii of the diagonal metric
/// dt^2 + sum_i g_i(t) dx_i^2, computed from its Christoffel symbols. Entry 0
/// is the t direction; `components` holds the jets of g_1, g_2, ...
std::vector<double> diagonal_metric_ricci(const std::vector<warp::Jet>& components);

/// Jet of F^2 from the jet of F.
warp::Jet squared(const warp::Jet& f);

struct DerivativeAudit {
  std::size_t points = 0;
  double max_first_error = 0.0;   ///< max |FD1 - F'| / (1 + |F'|)
  double max_second_error = 0.0;  ///< max |FD(F') - F''| / (1 + |F''|)
  double worst_t = 0.0;           ///< where the larger of the two occurred
  bool passed = false;
};

/// Comparison against the Christoffel-symbol Ricci of dt^2 + F_2^2 (flat d_2-torus).
/// Only meaningful when d_0 = d_1 = 0. ric_2 is compared only when d_2 = 1,
/// since for d_2 > 1 the bracket of the fiber adds (d_2 - 1)/F_2^2.
struct AbelianOracle {
  bool applicable = false;
  bool fiber_compared = false;
  std::size_t points = 0;
  double max_ric_t_error = 0.0;
  double max_ric_2_error = 0.0;
  bool passed = false;
};

struct OracleReport {
  DerivativeAudit derivatives;
  AbelianOracle abelian;
  double derivative_tol = 1e-5;
  double ricci_tol = 1e-7;

  bool passed() const { return derivatives.passed && (!abelian.applicable || abelian.passed); }
};

/// Central differences of F (against F') and of F' (against F'') on the
/// interior grid points t_k = k t_max / N, k = 1..N-1, plus the Christoffel
/// oracle on the same points. The profile must be C^2 (smoothed, or made of a
/// single analytic piece).
OracleReport fd_oracle(const warp::WarpProfile& profile, std::size_t grid_size);

}  // namespace psc
