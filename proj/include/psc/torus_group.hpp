#pragma once

#include "psc/lie_algebra.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace psc {

/// A finite subset of the torus R^m / Z^m whose points all have coordinates
/// in (1/denominator) Z. Points are stored as integer residues mod denominator.
struct TorusLattice {
  std::int64_t denominator = 1;
  std::vector<std::vector<std::int64_t>> points;
};

/// Largest denominator accepted when reading torus coordinates as rationals.
inline constexpr std::int64_t kMaxTorusDenominator = 10000;
/// Largest finite subgroup we are willing to enumerate.
inline constexpr std::size_t kMaxFiniteOrder = 1u << 20;

/// Best rational approximation p/q of x with q <= max_den; throws
/// std::invalid_argument if no such approximation is within tol.
std::int64_t rational_denominator(double x, double tol = 1e-9,
                                  std::int64_t max_den = kMaxTorusDenominator);

/// The finite subgroup of R^m / Z^m generated by `generators` (each a
/// vector of length m). Returns the sorted set of elements in units of
/// 1/denominator, where the denominator is the lcm of those of the generators
/// and of `extra_denominator`.
std::set<std::vector<std::int64_t>> generated_subgroup(const std::vector<Vector>& generators,
                                                       std::size_t torus_dim,
                                                       std::int64_t extra_denominator,
                                                       std::int64_t* denominator_out);

/// Order of the subgroup generated by `generators`.
std::size_t subgroup_order(const std::vector<Vector>& generators, std::size_t torus_dim);

/// Common denominator of all generator coordinates.
std::int64_t common_denominator(const std::vector<Vector>& generators);

/// Re-coordinatization of R^m / Z^m onto (R^m / Z^m) / F for a finite
/// subgroup F: an invertible linear map A with A(Z^m + F) = Z^m.
struct TorusQuotient {
  Matrix linear;  ///< maps old torus coordinates to new ones
  std::size_t order = 1;  ///< |F|
};

TorusQuotient torus_quotient(const std::vector<Vector>& generators, std::size_t torus_dim);

/// Reduces coordinates into [0, 1), snapping values within tol of an integer to 0.
Vector wrap_torus(const Vector& v, double tol = 1e-9);

}  // namespace psc
