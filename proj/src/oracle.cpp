#include "psc/oracle.hpp"

#include "psc/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace psc {

warp::Jet squared(const warp::Jet& f) {
  return {f.value * f.value, 2.0 * f.value * f.d1, 2.0 * (f.d1 * f.d1 + f.value * f.d2)};
}

std::vector<double> diagonal_metric_ricci(const std::vector<warp::Jet>& components) {
  const std::size_t n = components.size() + 1;
  std::vector<warp::Jet> g(n);
  g[0] = {1.0, 0.0, 0.0};
  for (std::size_t i = 1; i < n; ++i) {
    if (!(components[i - 1].value > 0.0))
      throw std::domain_error("diagonal_metric_ricci: metric must be positive definite");
    g[i] = components[i - 1];
  }

  // Only x^0 = t enters the metric, so d_l g_ab = delta_l0 g_ab'.
  auto idx = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  std::vector<double> gamma(n * n * n, 0.0);
  std::vector<double> dgamma(n * n * n, 0.0);  // d/dt of gamma
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double x = 0.0;
        double dx = 0.0;
        if (j == 0 && i == k) {
          x += g[i].d1;
          dx += g[i].d2;
        }
        if (k == 0 && i == j) {
          x += g[i].d1;
          dx += g[i].d2;
        }
        if (i == 0 && j == k) {
          x -= g[j].d1;
          dx -= g[j].d2;
        }
        const double inv = 1.0 / g[i].value;
        gamma[idx(i, j, k)] = 0.5 * inv * x;
        dgamma[idx(i, j, k)] = 0.5 * (inv * dx - g[i].d1 * inv * inv * x);
      }

  std::vector<double> out(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double r = dgamma[idx(0, j, j)];
    if (j == 0)
      for (std::size_t i = 0; i < n; ++i) r -= dgamma[idx(i, i, 0)];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t p = 0; p < n; ++p)
        r += gamma[idx(i, i, p)] * gamma[idx(p, j, j)] - gamma[idx(i, j, p)] * gamma[idx(p, i, j)];
    out[j] = r / g[j].value;
  }
  return out;
}

namespace {

// F'' is checked against a central difference of the analytic F' rather than a
// second difference of F: inside a smoothing window F'''' reaches ~1e7, where
// no step size brings a second difference of values below 1e-5 in double.
constexpr double kFirstStep = 1e-5;
constexpr double kSecondStep = 1e-6;

}  // namespace

OracleReport fd_oracle(const warp::WarpProfile& p, std::size_t grid_size) {
  if (grid_size < 2) throw std::invalid_argument("fd_oracle: grid size must be at least 2");
  OracleReport r;
  auto& audit = r.derivatives;
  auto& ab = r.abelian;
  ab.applicable = p.dims[0] == 0 && p.dims[1] == 0 && p.dims[2] > 0;
  ab.fiber_compared = ab.applicable && p.dims[2] == 1;

  double worst = 0.0;
  for (std::size_t k = 1; k < grid_size; ++k) {
    const double t = p.t_max * static_cast<double>(k) / static_cast<double>(grid_size);
    for (std::size_t i = 0; i < 3; ++i) {
      if (!p.built(i)) continue;
      const auto& f = p.functions[i];
      const warp::Jet at = f(t);
      const double h1 = std::min(kFirstStep, 0.5 * t);
      const double h2 = std::min(kSecondStep, 0.5 * t);
      const double fd1 = (f(t + h1).value - f(t - h1).value) / (2.0 * h1);
      const double fd2 = (f(t + h2).d1 - f(t - h2).d1) / (2.0 * h2);
      const double e1 = std::abs(fd1 - at.d1) / (1.0 + std::abs(at.d1));
      const double e2 = std::abs(fd2 - at.d2) / (1.0 + std::abs(at.d2));
      audit.max_first_error = std::max(audit.max_first_error, e1);
      audit.max_second_error = std::max(audit.max_second_error, e2);
      if (std::max(e1, e2) > worst) {
        worst = std::max(e1, e2);
        audit.worst_t = t;
      }
    }
    ++audit.points;

    if (ab.applicable) {
      const warp::ProfileJet jet = warp::eval_profile(p, t);
      const std::vector<warp::Jet> fibers(static_cast<std::size_t>(p.dims[2]), squared(jet[2]));
      const std::vector<double> ric = diagonal_metric_ricci(fibers);
      const RicciSample s = ric_functions(p, t);
      ab.max_ric_t_error = std::max(ab.max_ric_t_error, std::abs(s.ric_t - ric[0]));
      if (ab.fiber_compared)
        ab.max_ric_2_error = std::max(ab.max_ric_2_error, std::abs(*s.ric[2] - ric[1]));
      ++ab.points;
    }
  }
  audit.passed = audit.max_first_error <= r.derivative_tol && audit.max_second_error <= r.derivative_tol;
  ab.passed = ab.applicable && ab.max_ric_t_error <= r.ricci_tol && ab.max_ric_2_error <= r.ricci_tol;
  return r;
}

}  // namespace psc
