#include "psc/catalog.hpp"

#include <functional>

namespace psc {

LieAlgebra torus_algebra(std::size_t k) { return LieAlgebra(k, "t" + std::to_string(k)); }

LieAlgebra su2_algebra() {
  LieAlgebra g(3, "su2");
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    const std::size_t k = (i + 2) % 3;
    g.set_constant(i, j, k, 1.0);
    g.set_constant(j, i, k, -1.0);
  }
  return g;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b, std::string label) {
  LieAlgebra out(a.dim() + b.dim(), std::move(label));
  for (const auto& c : a.nonzero_constants()) out.set_constant(c.i, c.j, c.k, c.value);
  const std::size_t s = a.dim();
  for (const auto& c : b.nonzero_constants()) out.set_constant(c.i + s, c.j + s, c.k + s, c.value);
  return out;
}

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

Subspace span_of(std::size_t n, std::initializer_list<Vector> vs) {
  Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(vs.size()));
  Eigen::Index c = 0;
  for (const auto& v : vs) m.col(c++) = v;
  return Subspace::span(n, m);
}

SubgroupDescriptor z2(std::initializer_list<double> generator) {
  return SubgroupDescriptor::finite(generator.size(), {vec(generator)});
}

GroupDiagram circle(LieAlgebra g, SubgroupDescriptor h, std::optional<Matrix> monodromy = {}) {
  return {std::move(g), std::move(h), CircleShape{std::move(monodromy)}};
}

GroupDiagram interval(LieAlgebra g, SubgroupDescriptor h, SubgroupDescriptor km,
                      SubgroupDescriptor kp) {
  return {std::move(g), std::move(h), IntervalShape{std::move(km), std::move(kp)}};
}

GroupDiagram line(LieAlgebra g, SubgroupDescriptor h) {
  return {std::move(g), std::move(h), LineShape{}};
}

GroupDiagram ray(LieAlgebra g, SubgroupDescriptor h, SubgroupDescriptor k) {
  return {std::move(g), std::move(h), RayShape{std::move(k)}};
}

struct Builder {
  std::string description;
  std::function<CatalogEntry()> build;
};

const std::vector<std::pair<std::string, Builder>>& registry() {
  static const std::vector<std::pair<std::string, Builder>> entries = [] {
    std::vector<std::pair<std::string, Builder>> r;
    for (std::size_t k = 1; k <= 4; ++k) {
      r.push_back({"t" + std::to_string(k),
                   {"abelian Lie algebra of the " + std::to_string(k) + "-torus",
                    [k] { return CatalogEntry{torus_algebra(k)}; }}});
    }
    r.push_back({"su2", {"su(2) with [e1,e2]=e3 cyclic", [] { return CatalogEntry{su2_algebra()}; }}});
    r.push_back({"so3",
                 {"so(3), same constants as su(2)",
                  [] { return CatalogEntry{su2_algebra().relabeled("so3")}; }}});
    for (std::size_t k = 1; k <= 3; ++k) {
      const std::string name = "su2+t" + std::to_string(k);
      r.push_back({name,
                   {"su(2) plus a central " + std::to_string(k) + "-torus",
                    [k, name] { return CatalogEntry{direct_sum(su2_algebra(), torus_algebra(k), name)}; }}});
    }
    r.push_back({"su2+su2",
                 {"su(2) + su(2) = so(4)",
                  [] { return CatalogEntry{direct_sum(su2_algebra(), su2_algebra(), "su2+su2")}; }}});

    r.push_back({"diagram:t2-circle",
                 {"(T^2, e) over a circle; the 3-torus",
                  [] {
                    return CatalogEntry{circle(torus_algebra(2), SubgroupDescriptor::trivial(2))};
                  }}});
    r.push_back({"diagram:klein-bottle-x-s1",
                 {"(T^2, e, Z2, Z2) with equal Z2 factors; Klein bottle times a circle",
                  [] {
                    return CatalogEntry{interval(torus_algebra(2), SubgroupDescriptor::trivial(2),
                                                 z2({0.5, 0.0}), z2({0.5, 0.0}))};
                  }}});
    r.push_back({"diagram:A-3mfd",
                 {"(T^2, e, Z2, Z2) with distinct Z2 factors; the flat manifold A",
                  [] {
                    return CatalogEntry{interval(torus_algebra(2), SubgroupDescriptor::trivial(2),
                                                 z2({0.5, 0.0}), z2({0.0, 0.5}))};
                  }}});
    r.push_back({"diagram:t1-line",
                 {"(T^1, e) over a line; S^1 x R",
                  [] { return CatalogEntry{line(torus_algebra(1), SubgroupDescriptor::trivial(1))}; }}});
    r.push_back({"diagram:open-moebius",
                 {"(T^1, e, Z2) over a ray; the open Moebius band",
                  [] {
                    return CatalogEntry{
                        ray(torus_algebra(1), SubgroupDescriptor::trivial(1), z2({0.5}))};
                  }}});
    r.push_back({"diagram:r2-rotation",
                 {"(T^1, e, T^1) over a ray; R^2 with the rotation action",
                  [] {
                    return CatalogEntry{ray(torus_algebra(1), SubgroupDescriptor::trivial(1),
                                            SubgroupDescriptor::connected(Subspace::full(1)))};
                  }}});
    r.push_back({"diagram:su2-interval",
                 {"(SU(2), e, SU(2), SU(2)) over an interval; S^4",
                  [] {
                    return CatalogEntry{interval(su2_algebra(), SubgroupDescriptor::trivial(3),
                                                 SubgroupDescriptor::connected(Subspace::full(3)),
                                                 SubgroupDescriptor::connected(Subspace::full(3)))};
                  }}});
    r.push_back({"diagram:su2-ray",
                 {"(SU(2), e, SU(2)) over a ray; R^4",
                  [] {
                    return CatalogEntry{ray(su2_algebra(), SubgroupDescriptor::trivial(3),
                                            SubgroupDescriptor::connected(Subspace::full(3)))};
                  }}});
    r.push_back({"diagram:su2-u1-ray",
                 {"(SU(2), U(1), SU(2)) over a ray; disk bundle over S^2 is R^3",
                  [] {
                    return CatalogEntry{
                        ray(su2_algebra(),
                            SubgroupDescriptor::connected(span_of(3, {vec({0, 0, 1})})),
                            SubgroupDescriptor::connected(Subspace::full(3)))};
                  }}});
    r.push_back({"diagram:su2-circle",
                 {"(SU(2), e) over a circle; S^3 x S^1",
                  [] { return CatalogEntry{circle(su2_algebra(), SubgroupDescriptor::trivial(3))}; }}});
    r.push_back({"diagram:su2-u1-circle-twisted",
                 {"(SU(2), U(1)) over a circle glued by a rotation by pi; S^2 bundle over S^1",
                  [] {
                    Matrix m = Matrix::Zero(3, 3);
                    m(0, 0) = 1.0;
                    m(1, 1) = -1.0;
                    m(2, 2) = -1.0;
                    return CatalogEntry{
                        circle(su2_algebra(),
                               SubgroupDescriptor::connected(span_of(3, {vec({0, 0, 1})})), m)};
                  }}});
    r.push_back({"diagram:t3-line",
                 {"(T^3, e) over a line; T^3 x R",
                  [] { return CatalogEntry{line(torus_algebra(3), SubgroupDescriptor::trivial(3))}; }}});
    r.push_back({"diagram:t3-A-x-s1",
                 {"(T^3, e, Z2, Z2) with distinct Z2 factors; A x S^1",
                  [] {
                    return CatalogEntry{interval(torus_algebra(3), SubgroupDescriptor::trivial(3),
                                                 z2({0.0, 0.5, 0.0}), z2({0.0, 0.0, 0.5}))};
                  }}});

    r.push_back({"homogeneous:t3",
                 {"T^3 / e; the 3-torus",
                  [] {
                    return CatalogEntry{HomogeneousPair{torus_algebra(3), SubgroupDescriptor::trivial(3)}};
                  }}});
    r.push_back({"homogeneous:su2-u1",
                 {"SU(2) / U(1); the 2-sphere",
                  [] {
                    return CatalogEntry{HomogeneousPair{
                        su2_algebra(), SubgroupDescriptor::connected(span_of(3, {vec({0, 0, 1})}))}};
                  }}});
    r.push_back({"homogeneous:su2",
                 {"SU(2) / e; the 3-sphere",
                  [] {
                    return CatalogEntry{HomogeneousPair{su2_algebra(), SubgroupDescriptor::trivial(3)}};
                  }}});
    r.push_back({"homogeneous:su2+t1-u1",
                 {"(SU(2) x T^1) / U(1); S^2 x S^1",
                  [] {
                    return CatalogEntry{HomogeneousPair{
                        direct_sum(su2_algebra(), torus_algebra(1), "su2+t1"),
                        SubgroupDescriptor::connected(span_of(4, {vec({0, 0, 1, 0})}))}};
                  }}});
    return r;
  }();
  return entries;
}

}  // namespace

const std::vector<CatalogItem>& catalog_items() {
  static const std::vector<CatalogItem> items = [] {
    std::vector<CatalogItem> out;
    for (const auto& [name, builder] : registry()) out.push_back({name, builder.description});
    return out;
  }();
  return items;
}

CatalogEntry catalog_lookup(std::string_view name) {
  for (const auto& [entry_name, builder] : registry())
    if (entry_name == name) return builder.build();
  throw UnknownCatalogEntry("unknown catalog entry '" + std::string(name) + "'");
}

LieAlgebra catalog_algebra(std::string_view name) {
  auto entry = catalog_lookup(name);
  if (auto* g = std::get_if<LieAlgebra>(&entry)) return std::move(*g);
  throw UnknownCatalogEntry("catalog entry '" + std::string(name) + "' is not a Lie algebra");
}

GroupDiagram catalog_diagram(std::string_view name) {
  auto entry = catalog_lookup(name);
  if (auto* d = std::get_if<GroupDiagram>(&entry)) return std::move(*d);
  throw UnknownCatalogEntry("catalog entry '" + std::string(name) + "' is not a group diagram");
}

HomogeneousPair catalog_pair(std::string_view name) {
  auto entry = catalog_lookup(name);
  if (auto* p = std::get_if<HomogeneousPair>(&entry)) return std::move(*p);
  throw UnknownCatalogEntry("catalog entry '" + std::string(name) + "' is not a homogeneous pair");
}

}  // namespace psc
