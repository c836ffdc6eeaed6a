#include "psc/torus_group.hpp"

#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>

namespace psc {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<std::int64_t> to_units(const Vector& v, std::int64_t den) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out[static_cast<std::size_t>(i)] =
        floor_mod(static_cast<std::int64_t>(std::llround(v[i] * static_cast<double>(den))), den);
  }
  return out;
}

}  // namespace

std::int64_t rational_denominator(double x, double tol, std::int64_t max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("torus coordinate is not finite");
  for (std::int64_t q = 1; q <= max_den; ++q) {
    const double scaled = x * static_cast<double>(q);
    if (std::abs(scaled - std::round(scaled)) <= tol * static_cast<double>(q)) return q;
  }
  throw std::invalid_argument("torus coordinate " + std::to_string(x) +
                              " is not a rational with denominator <= " + std::to_string(max_den));
}

std::int64_t common_denominator(const std::vector<Vector>& generators) {
  std::int64_t den = 1;
  for (const auto& g : generators)
    for (Eigen::Index i = 0; i < g.size(); ++i) den = std::lcm(den, rational_denominator(g[i]));
  return den;
}

std::set<std::vector<std::int64_t>> generated_subgroup(const std::vector<Vector>& generators,
                                                       std::size_t torus_dim,
                                                       std::int64_t extra_denominator,
                                                       std::int64_t* denominator_out) {
  for (const auto& g : generators) {
    if (static_cast<std::size_t>(g.size()) != torus_dim)
      throw DimensionMismatch("torus generator has wrong length");
  }
  const std::int64_t den = std::lcm(common_denominator(generators), extra_denominator);
  if (denominator_out) *denominator_out = den;

  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& g : generators) gens.push_back(to_units(g, den));

  std::set<std::vector<std::int64_t>> seen;
  std::deque<std::vector<std::int64_t>> queue;
  const std::vector<std::int64_t> zero(torus_dim, 0);
  seen.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      std::vector<std::int64_t> next(torus_dim);
      for (std::size_t i = 0; i < torus_dim; ++i) next[i] = floor_mod(cur[i] + g[i], den);
      if (seen.insert(next).second) {
        if (seen.size() > kMaxFiniteOrder)
          throw std::invalid_argument("finite subgroup too large to enumerate");
        queue.push_back(std::move(next));
      }
    }
  }
  return seen;
}

std::size_t subgroup_order(const std::vector<Vector>& generators, std::size_t torus_dim) {
  return generated_subgroup(generators, torus_dim, 1, nullptr).size();
}

TorusQuotient torus_quotient(const std::vector<Vector>& generators, std::size_t torus_dim) {
  const std::int64_t den = common_denominator(generators);
  const std::size_t m = torus_dim;

  // Columns generating D * (Z^m + F) inside Z^m.
  std::vector<std::vector<std::int64_t>> cols;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::int64_t> c(m, 0);
    c[i] = den;
    cols.push_back(std::move(c));
  }
  for (const auto& g : generators) cols.push_back(to_units(g, den));

  // Column-style Hermite reduction to a lower-triangular basis.
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = r + 1; c < cols.size(); ++c) {
      while (cols[c][r] != 0) {
        const std::int64_t q = cols[r][r] / cols[c][r];
        for (std::size_t i = 0; i < m; ++i) cols[r][i] -= q * cols[c][i];
        std::swap(cols[r], cols[c]);
      }
    }
    if (cols[r][r] < 0)
      for (auto& x : cols[r]) x = -x;
    if (cols[r][r] == 0) throw std::logic_error("torus lattice lost rank");
  }

  const auto mi = static_cast<Eigen::Index>(m);
  Matrix lattice(mi, mi);
  double det = 1.0;
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t i = 0; i < m; ++i)
      lattice(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          static_cast<double>(cols[c][i]);
    det *= static_cast<double>(cols[c][c]);
  }

  TorusQuotient out;
  out.linear = static_cast<double>(den) * lattice.inverse();
  out.order = static_cast<std::size_t>(
      std::llround(std::pow(static_cast<double>(den), static_cast<double>(m)) / det));
  return out;
}

Vector wrap_torus(const Vector& v, double tol) {
  Vector out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    double x = out[i] - std::floor(out[i]);
    if (x > 1.0 - tol || x < tol) x = 0.0;
    out[i] = x;
  }
  return out;
}

}  // namespace psc
