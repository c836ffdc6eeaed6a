#pragma once

#include "psc/lie_algebra.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace psc {

/// A closed subgroup at the fidelity the classification needs: the Lie algebra
/// of its identity component, its number of components, and (inside a torus
/// only) generators of its finite part in torus coordinates [0, 1)^m.
struct SubgroupDescriptor {
  Subspace algebra;
  int component_count = 1;
  std::vector<Vector> finite_generators;

  static SubgroupDescriptor trivial(std::size_t ambient_dim);
  static SubgroupDescriptor connected(Subspace algebra);
  /// Finite subgroup of a torus generated by `generators`; the component
  /// count is the order of the generated group.
  static SubgroupDescriptor finite(std::size_t torus_dim, std::vector<Vector> generators);

  bool is_trivial() const { return algebra.is_zero() && component_count == 1; }
  bool is_discrete() const { return algebra.is_zero(); }
};

enum class OrbitSpace { Circle, Interval, Line, Ray };

std::string_view to_string(OrbitSpace kind);
std::optional<OrbitSpace> orbit_space_from_string(std::string_view name);

/// M/G = S^1. `monodromy` is Ad_a for the gluing element a in N(H), if known.
struct CircleShape {
  std::optional<Matrix> monodromy;
};
/// M/G = [-1, 1] with singular isotropy K- and K+ at the endpoints.
struct IntervalShape {
  SubgroupDescriptor k_minus;
  SubgroupDescriptor k_plus;
};
/// M/G = R.
struct LineShape {};
/// M/G = [0, inf) with singular isotropy K over 0.
struct RayShape {
  SubgroupDescriptor k;
};

using DiagramShape = std::variant<CircleShape, IntervalShape, LineShape, RayShape>;

/// Group diagram of a cohomogeneity one manifold. G is connected and given by
/// its Lie algebra; H is the principal isotropy.
struct GroupDiagram {
  LieAlgebra group;
  SubgroupDescriptor principal;
  DiagramShape shape;

  OrbitSpace kind() const;
  /// dim G - dim H + 1.
  std::size_t manifold_dim() const;

  /// Non-principal isotropy groups with their role names ("K-", "K+", "K").
  std::vector<std::pair<std::string, const SubgroupDescriptor*>> singular_isotropy() const;
};

/// Homogeneous space G/H.
struct HomogeneousPair {
  LieAlgebra group;
  SubgroupDescriptor isotropy;

  /// dim G - dim H.
  std::size_t manifold_dim() const;
};

struct ValidationTolerances {
  double rank = kRankTol;
  double identity = kIdentityTol;
};

/// Outcome of the sphere-condition bookkeeping for one singular isotropy K.
struct IsotropyCheck {
  std::string role;
  int sphere_dim = 0;  ///< dim K - dim H
  bool recognized_z2 = false;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<IsotropyCheck> isotropy;
  std::optional<AlgebraReport> algebra;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const ValidationReport& report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

ValidationReport validate_diagram(const GroupDiagram& diagram, const ValidationTolerances& tol = {});
ValidationReport validate_pair(const HomogeneousPair& pair, const ValidationTolerances& tol = {});

/// Throws ValidationError when the report has violations.
void require_valid(const GroupDiagram& diagram, const ValidationTolerances& tol = {});
void require_valid(const HomogeneousPair& pair, const ValidationTolerances& tol = {});

/// Whether a zero-dimensional subgroup with two components, i.e. Z_2.
bool is_z2(const SubgroupDescriptor& k, std::size_t torus_dim);

/// Equality of two finite subgroups of the same torus, compared as generated
/// sets. Throws std::invalid_argument for positive-dimensional input.
bool finite_subgroups_equal(const SubgroupDescriptor& a, const SubgroupDescriptor& b,
                            std::size_t torus_dim);

}  // namespace psc
