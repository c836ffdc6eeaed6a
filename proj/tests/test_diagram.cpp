#include "psc/catalog.hpp"
#include "psc/diagram.hpp"

#include <doctest.h>

using namespace psc;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

Subspace line(std::size_t n, const Vector& v) {
  return Subspace::span(n, Matrix(v));
}

bool mentions(const ValidationReport& r, const std::string& needle) {
  for (const auto& v : r.violations)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("every catalog diagram and pair validates") {
  for (const auto& item : catalog_items()) {
    CAPTURE(item.name);
    const auto entry = catalog_lookup(item.name);
    if (const auto* d = std::get_if<GroupDiagram>(&entry)) {
      const auto r = validate_diagram(*d);
      CHECK_MESSAGE(r.ok(), r.summary());
    } else if (const auto* p = std::get_if<HomogeneousPair>(&entry)) {
      const auto r = validate_pair(*p);
      CHECK_MESSAGE(r.ok(), r.summary());
    }
  }
}

TEST_CASE("manifold dimensions") {
  CHECK(catalog_diagram("diagram:t2-circle").manifold_dim() == 3);
  CHECK(catalog_diagram("diagram:su2-interval").manifold_dim() == 4);
  CHECK(catalog_diagram("diagram:su2-u1-ray").manifold_dim() == 3);
  CHECK(catalog_diagram("diagram:t1-line").manifold_dim() == 2);
  CHECK(catalog_pair("homogeneous:su2-u1").manifold_dim() == 2);
  CHECK(catalog_pair("homogeneous:t3").manifold_dim() == 3);
}

TEST_CASE("sphere condition: K/H zero-dimensional needs two elements") {
  GroupDiagram d = catalog_diagram("diagram:open-moebius");
  std::get<RayShape>(d.shape).k = SubgroupDescriptor::finite(1, {vec({1.0 / 3.0})});
  const auto r = validate_diagram(d);
  CHECK_FALSE(r.ok());
  CHECK(mentions(r, "two elements"));
}

TEST_CASE("H must lie in K") {
  GroupDiagram d = catalog_diagram("diagram:su2-u1-ray");
  std::get<RayShape>(d.shape).k = SubgroupDescriptor::connected(line(3, vec({1, 0, 0})));
  const auto r = validate_diagram(d);
  CHECK(mentions(r, "not contained"));
}

TEST_CASE("subgroups must be subalgebras") {
  Matrix m(3, 2);
  m << 1, 0, 0, 1, 0, 0;
  const HomogeneousPair p{su2_algebra(), SubgroupDescriptor::connected(Subspace::span(3, m))};
  const auto r = validate_pair(p);
  CHECK(mentions(r, "not closed"));
}

TEST_CASE("abelian G needs trivial principal isotropy") {
  GroupDiagram d = catalog_diagram("diagram:t2-circle");
  d.principal = SubgroupDescriptor::finite(2, {vec({0.5, 0.0})});
  CHECK(mentions(validate_diagram(d), "trivial principal isotropy"));
  const HomogeneousPair p{torus_algebra(2), SubgroupDescriptor::connected(line(2, vec({1, 0})))};
  CHECK(mentions(validate_pair(p), "trivial principal isotropy"));
}

TEST_CASE("finite generators") {
  GroupDiagram d = catalog_diagram("diagram:klein-bottle-x-s1");
  SUBCASE("entries outside [0, 1)") {
    std::get<IntervalShape>(d.shape).k_minus.finite_generators = {vec({1.5, 0.0})};
    CHECK(mentions(validate_diagram(d), "[0, 1)"));
  }
  SUBCASE("order disagrees with component count") {
    std::get<IntervalShape>(d.shape).k_minus.finite_generators = {vec({0.25, 0.0})};
    CHECK(mentions(validate_diagram(d), "order 4"));
  }
  SUBCASE("irrational coordinates") {
    std::get<IntervalShape>(d.shape).k_minus.finite_generators = {vec({0.41421356237, 0.0})};
    CHECK_FALSE(validate_diagram(d).ok());
  }
  SUBCASE("not allowed for non-abelian G") {
    GroupDiagram s = catalog_diagram("diagram:su2-ray");
    std::get<RayShape>(s.shape).k.finite_generators = {vec({0.5, 0.0, 0.0})};
    CHECK(mentions(validate_diagram(s), "only supported"));
  }
}

TEST_CASE("invalid algebra is reported first") {
  GroupDiagram d = catalog_diagram("diagram:su2-circle");
  d.group.set_constant(0, 1, 2, 1.1);
  const auto r = validate_diagram(d);
  CHECK_FALSE(r.ok());
  REQUIRE(r.algebra);
  CHECK_FALSE(r.algebra->passed());
  CHECK_THROWS_AS(require_valid(d), ValidationError);
}

TEST_CASE("dimension mismatch between G and a subgroup") {
  HomogeneousPair p{su2_algebra(), SubgroupDescriptor::trivial(2)};
  CHECK(mentions(validate_pair(p), "dimension"));
}

TEST_CASE("low-dimensional quotients are rejected") {
  const HomogeneousPair p{torus_algebra(1), SubgroupDescriptor::trivial(1)};
  CHECK(mentions(validate_pair(p), "at least 2"));
  const HomogeneousPair q{su2_algebra(), SubgroupDescriptor::connected(Subspace::full(3))};
  CHECK_FALSE(validate_pair(q).ok());
}

TEST_CASE("monodromy checks") {
  GroupDiagram d = catalog_diagram("diagram:su2-u1-circle-twisted");
  CHECK(validate_diagram(d).ok());
  SUBCASE("not orthogonal") {
    std::get<CircleShape>(d.shape).monodromy = 2.0 * Matrix::Identity(3, 3);
    CHECK(mentions(validate_diagram(d), "preserve Q"));
  }
  SUBCASE("does not preserve h") {
    Matrix swap = Matrix::Zero(3, 3);
    swap(0, 2) = swap(2, 0) = 1.0;
    swap(1, 1) = -1.0;
    std::get<CircleShape>(d.shape).monodromy = swap;
    CHECK(mentions(validate_diagram(d), "Lie algebra of H"));
  }
  SUBCASE("orientation reversing is not an automorphism of su2") {
    Matrix refl = Matrix::Identity(3, 3);
    refl(2, 2) = -1.0;
    std::get<CircleShape>(d.shape).monodromy = refl;
    CHECK(mentions(validate_diagram(d), "automorphism"));
  }
}

TEST_CASE("isotropy bookkeeping") {
  const auto r = validate_diagram(catalog_diagram("diagram:A-3mfd"));
  REQUIRE(r.isotropy.size() == 2);
  CHECK(r.isotropy[0].role == "K-");
  CHECK(r.isotropy[0].sphere_dim == 0);
  CHECK(r.isotropy[0].recognized_z2);
  const auto s = validate_diagram(catalog_diagram("diagram:su2-interval"));
  REQUIRE(s.isotropy.size() == 2);
  CHECK(s.isotropy[1].sphere_dim == 3);
  CHECK_FALSE(s.isotropy[1].recognized_z2);
}

TEST_CASE("Z2 recognition and equality of finite subgroups") {
  const auto a = SubgroupDescriptor::finite(2, {vec({0.5, 0.0})});
  const auto b = SubgroupDescriptor::finite(2, {vec({0.0, 0.5})});
  const auto c = SubgroupDescriptor::finite(2, {vec({0.5, 0.0}), vec({0.5, 0.0})});
  CHECK(is_z2(a, 2));
  CHECK(finite_subgroups_equal(a, c, 2));
  CHECK_FALSE(finite_subgroups_equal(a, b, 2));
  CHECK_FALSE(is_z2(SubgroupDescriptor::finite(2, {vec({0.5, 0.0}), vec({0.0, 0.5})}), 2));
  SubgroupDescriptor bare;
  bare.algebra = Subspace(2);
  bare.component_count = 2;
  CHECK(is_z2(bare, 2));
  CHECK_THROWS_AS(finite_subgroups_equal(bare, a, 2), std::invalid_argument);
  CHECK_THROWS_AS(
      finite_subgroups_equal(SubgroupDescriptor::connected(Subspace::full(2)), a, 2),
      std::invalid_argument);
}

TEST_CASE("orbit space names") {
  for (auto k : {OrbitSpace::Circle, OrbitSpace::Interval, OrbitSpace::Line, OrbitSpace::Ray})
    CHECK(orbit_space_from_string(to_string(k)) == k);
  CHECK_FALSE(orbit_space_from_string("disk"));
}
