#include "psc/diagram.hpp"

#include "psc/torus_group.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace psc {

SubgroupDescriptor SubgroupDescriptor::trivial(std::size_t ambient_dim) {
  return {Subspace(ambient_dim), 1, {}};
}

SubgroupDescriptor SubgroupDescriptor::connected(Subspace algebra) {
  return {std::move(algebra), 1, {}};
}

SubgroupDescriptor SubgroupDescriptor::finite(std::size_t torus_dim,
                                              std::vector<Vector> generators) {
  const auto order = subgroup_order(generators, torus_dim);
  return {Subspace(torus_dim), static_cast<int>(order), std::move(generators)};
}

std::string_view to_string(OrbitSpace kind) {
  switch (kind) {
    case OrbitSpace::Circle: return "circle";
    case OrbitSpace::Interval: return "interval";
    case OrbitSpace::Line: return "line";
    case OrbitSpace::Ray: return "ray";
  }
  return "unknown";
}

std::optional<OrbitSpace> orbit_space_from_string(std::string_view name) {
  if (name == "circle") return OrbitSpace::Circle;
  if (name == "interval") return OrbitSpace::Interval;
  if (name == "line") return OrbitSpace::Line;
  if (name == "ray") return OrbitSpace::Ray;
  return std::nullopt;
}

OrbitSpace GroupDiagram::kind() const {
  switch (shape.index()) {
    case 0: return OrbitSpace::Circle;
    case 1: return OrbitSpace::Interval;
    case 2: return OrbitSpace::Line;
    default: return OrbitSpace::Ray;
  }
}

std::size_t GroupDiagram::manifold_dim() const {
  return group.dim() - principal.algebra.dim() + 1;
}

std::vector<std::pair<std::string, const SubgroupDescriptor*>> GroupDiagram::singular_isotropy()
    const {
  std::vector<std::pair<std::string, const SubgroupDescriptor*>> out;
  if (const auto* interval = std::get_if<IntervalShape>(&shape)) {
    out.emplace_back("K-", &interval->k_minus);
    out.emplace_back("K+", &interval->k_plus);
  } else if (const auto* ray = std::get_if<RayShape>(&shape)) {
    out.emplace_back("K", &ray->k);
  }
  return out;
}

std::size_t HomogeneousPair::manifold_dim() const {
  return group.dim() - isotropy.algebra.dim();
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i];
  }
  return os.str();
}

ValidationError::ValidationError(const ValidationReport& report)
    : std::invalid_argument("invalid input: " + report.summary()), report_(report) {}

namespace {

void check_subgroup(const std::string& role, const SubgroupDescriptor& s, const LieAlgebra& g,
                    bool abelian, const ValidationTolerances& tol, ValidationReport& report) {
  auto fail = [&](const std::string& what) { report.violations.push_back(role + ": " + what); };
  if (s.algebra.ambient_dim() != g.dim()) {
    fail("Lie algebra lives in dimension " + std::to_string(s.algebra.ambient_dim()) +
         ", expected " + std::to_string(g.dim()));
    return;
  }
  if (s.component_count < 1) fail("component count must be positive");
  if (const double defect = subalgebra_defect(g, s.algebra); defect > tol.rank) {
    std::ostringstream os;
    os << "not closed under the bracket (defect " << defect << ")";
    fail(os.str());
  }
  if (s.finite_generators.empty()) return;
  if (!abelian) {
    fail("finite generators are only supported when G is a torus");
    return;
  }
  for (const auto& gen : s.finite_generators) {
    if (static_cast<std::size_t>(gen.size()) != g.dim()) {
      fail("finite generator has length " + std::to_string(gen.size()) + ", expected " +
           std::to_string(g.dim()));
      return;
    }
    for (Eigen::Index i = 0; i < gen.size(); ++i) {
      if (!(gen[i] >= 0.0 && gen[i] < 1.0)) {
        fail("finite generator entries must lie in [0, 1)");
        return;
      }
    }
  }
  try {
    const auto order = subgroup_order(s.finite_generators, g.dim());
    if (s.algebra.is_zero() && order != static_cast<std::size_t>(s.component_count)) {
      fail("generators span a group of order " + std::to_string(order) +
           " but component count is " + std::to_string(s.component_count));
    }
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

void check_group(const LieAlgebra& g, const ValidationTolerances& tol, ValidationReport& report) {
  report.algebra = validate_algebra(g, tol.identity);
  if (!report.algebra->passed()) {
    std::ostringstream os;
    os << "G is not a Lie algebra with ad-invariant Q (antisymmetry "
       << report.algebra->antisymmetry << ", Jacobi " << report.algebra->jacobi
       << ", ad-invariance " << report.algebra->ad_invariance << ")";
    report.violations.push_back(os.str());
    return;
  }
  try {
    (void)split_compact(g, tol.rank);
  } catch (const NotReductive& e) {
    report.violations.push_back(std::string("G: ") + e.what());
  }
}

void check_effective(const SubgroupDescriptor& h, bool abelian, ValidationReport& report) {
  // For abelian G the principal isotropy is normal and acts trivially.
  if (abelian && !h.is_trivial()) {
    report.violations.push_back(
        "H: G is abelian, so an effective action needs trivial principal isotropy");
  }
}

void check_singular(const std::string& role, const SubgroupDescriptor& k,
                    const SubgroupDescriptor& h, const LieAlgebra& g, bool abelian,
                    const ValidationTolerances& tol, ValidationReport& report) {
  check_subgroup(role, k, g, abelian, tol, report);
  if (k.algebra.ambient_dim() != g.dim() || h.algebra.ambient_dim() != g.dim()) return;

  IsotropyCheck check{role, static_cast<int>(k.algebra.dim()) - static_cast<int>(h.algebra.dim()),
                      false};
  if (!k.algebra.contains(h.algebra, tol.rank)) {
    report.violations.push_back(role + ": principal isotropy H is not contained in " + role);
  }
  if (check.sphere_dim < 0) {
    report.violations.push_back(role + ": dim " + role + " < dim H");
  } else if (check.sphere_dim == 0) {
    // K/H must be S^0: exactly two points.
    if (h.component_count <= 0 || k.component_count % h.component_count != 0 ||
        k.component_count / h.component_count != 2) {
      report.violations.push_back(role + "/H is zero-dimensional but does not have two elements");
    }
  }
  if (abelian && !h.finite_generators.empty() && k.is_discrete() &&
      !k.finite_generators.empty()) {
    try {
      std::int64_t den = 0;
      const auto den_all =
          std::lcm(common_denominator(h.finite_generators), common_denominator(k.finite_generators));
      const auto hs = generated_subgroup(h.finite_generators, g.dim(), den_all, &den);
      const auto ks = generated_subgroup(k.finite_generators, g.dim(), den_all, &den);
      for (const auto& x : hs)
        if (!ks.count(x)) {
          report.violations.push_back(role + ": finite part of H is not contained in " + role);
          break;
        }
    } catch (const std::invalid_argument&) {
      // Already reported by check_subgroup.
    }
  }
  check.recognized_z2 = h.is_trivial() && abelian && is_z2(k, g.dim());
  report.isotropy.push_back(check);
}

void check_monodromy(const Matrix& m, const GroupDiagram& d, const ValidationTolerances& tol,
                     ValidationReport& report) {
  const auto n = static_cast<Eigen::Index>(d.group.dim());
  if (m.rows() != n || m.cols() != n) {
    report.violations.push_back("monodromy must be a " + std::to_string(n) + "x" +
                                std::to_string(n) + " matrix");
    return;
  }
  const double orth = (m.transpose() * m - Matrix::Identity(n, n)).lpNorm<Eigen::Infinity>();
  if (orth > tol.rank) report.violations.push_back("monodromy does not preserve Q");
  for (std::size_t i = 0; i < d.principal.algebra.dim(); ++i) {
    if (!d.principal.algebra.contains(m * d.principal.algebra.basis_vector(i), tol.rank)) {
      report.violations.push_back("monodromy does not preserve the Lie algebra of H");
      break;
    }
  }
  double hom = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Vector ei = m.col(i);
      const Vector ej = m.col(j);
      const Vector lhs = m * d.group.bracket(d.group.basis_vector(static_cast<std::size_t>(i)),
                                             d.group.basis_vector(static_cast<std::size_t>(j)));
      hom = std::max(hom, (lhs - d.group.bracket(ei, ej)).norm());
    }
  if (hom > tol.rank) report.violations.push_back("monodromy is not a Lie algebra automorphism");
}

}  // namespace

ValidationReport validate_diagram(const GroupDiagram& d, const ValidationTolerances& tol) {
  ValidationReport report;
  check_group(d.group, tol, report);
  const bool abelian = report.ok() && is_abelian(d.group, tol.rank);
  check_subgroup("H", d.principal, d.group, abelian, tol, report);
  if (d.principal.algebra.ambient_dim() != d.group.dim()) return report;
  check_effective(d.principal, abelian, report);

  if (d.manifold_dim() < 2) {
    report.violations.push_back("manifold dimension dim G - dim H + 1 must be at least 2");
  }
  for (const auto& [role, k] : d.singular_isotropy())
    check_singular(role, *k, d.principal, d.group, abelian, tol, report);

  if (const auto* circle = std::get_if<CircleShape>(&d.shape); circle && circle->monodromy) {
    check_monodromy(*circle->monodromy, d, tol, report);
  }
  return report;
}

ValidationReport validate_pair(const HomogeneousPair& p, const ValidationTolerances& tol) {
  ValidationReport report;
  check_group(p.group, tol, report);
  const bool abelian = report.ok() && is_abelian(p.group, tol.rank);
  check_subgroup("H", p.isotropy, p.group, abelian, tol, report);
  if (p.isotropy.algebra.ambient_dim() != p.group.dim()) return report;
  check_effective(p.isotropy, abelian, report);
  if (p.manifold_dim() < 2) {
    report.violations.push_back("homogeneous space dimension dim G - dim H must be at least 2");
  }
  return report;
}

void require_valid(const GroupDiagram& diagram, const ValidationTolerances& tol) {
  if (auto report = validate_diagram(diagram, tol); !report.ok()) throw ValidationError(report);
}

void require_valid(const HomogeneousPair& pair, const ValidationTolerances& tol) {
  if (auto report = validate_pair(pair, tol); !report.ok()) throw ValidationError(report);
}

bool is_z2(const SubgroupDescriptor& k, std::size_t torus_dim) {
  if (!k.algebra.is_zero() || k.component_count != 2) return false;
  if (k.finite_generators.empty()) return true;
  try {
    return subgroup_order(k.finite_generators, torus_dim) == 2;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

bool finite_subgroups_equal(const SubgroupDescriptor& a, const SubgroupDescriptor& b,
                            std::size_t torus_dim) {
  if (!a.is_discrete() || !b.is_discrete()) {
    throw std::invalid_argument("finite_subgroups_equal: positive-dimensional subgroup");
  }
  auto described = [](const SubgroupDescriptor& s) {
    return s.component_count == 1 || !s.finite_generators.empty();
  };
  if (!described(a) || !described(b)) {
    throw std::invalid_argument("finite_subgroups_equal: subgroup has no torus generators");
  }
  const auto den =
      std::lcm(common_denominator(a.finite_generators), common_denominator(b.finite_generators));
  return generated_subgroup(a.finite_generators, torus_dim, den, nullptr) ==
         generated_subgroup(b.finite_generators, torus_dim, den, nullptr);
}

}  // namespace psc
