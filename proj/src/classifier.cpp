#include "psc/classifier.hpp"

#include "psc/torus_group.hpp"

#include <cmath>
#include <sstream>

namespace psc {

std::string_view to_string(FlatFamily family) {
  switch (family) {
    case FlatFamily::Torus: return "Torus";
    case FlatFamily::KleinTimesTorus: return "KleinTimesTorus";
    case FlatFamily::ATimesTorus: return "ATimesTorus";
    case FlatFamily::TorusTimesLine: return "TorusTimesLine";
    case FlatFamily::TorusTimesMoebius: return "TorusTimesMoebius";
  }
  return "unknown";
}

std::optional<FlatFamily> flat_family_from_string(std::string_view name) {
  for (auto f : {FlatFamily::Torus, FlatFamily::KleinTimesTorus, FlatFamily::ATimesTorus,
                 FlatFamily::TorusTimesLine, FlatFamily::TorusTimesMoebius})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

namespace {

std::string torus_factor(std::size_t k) {
  if (k == 0) return "";
  return " x T^" + std::to_string(k);
}

}  // namespace

std::string FlatType::name() const {
  switch (family) {
    case FlatFamily::Torus: return "T^" + std::to_string(n);
    case FlatFamily::KleinTimesTorus: return "K" + torus_factor(n - 2);
    case FlatFamily::ATimesTorus: return "A" + torus_factor(n - 3);
    case FlatFamily::TorusTimesLine: return "T^" + std::to_string(n - 1) + " x R";
    case FlatFamily::TorusTimesMoebius:
      return (n > 2 ? "T^" + std::to_string(n - 2) + " x " : std::string()) + "open Mb";
  }
  return "?";
}

double sec_lower_bound(const LieAlgebra& g, const Vector& x, const Vector& y, double tol) {
  if (std::abs(x.norm() - 1.0) > tol || std::abs(y.norm() - 1.0) > tol ||
      std::abs(x.dot(y)) > tol) {
    throw std::invalid_argument("sec_lower_bound: X and Y must be Q-orthonormal");
  }
  return 0.25 * g.bracket(x, y).squaredNorm();
}

std::optional<BracketWitness> first_bracket_witness(const LieAlgebra& g, const Subspace& space,
                                                    double tol) {
  for (std::size_t a = 0; a < space.dim(); ++a)
    for (std::size_t b = a + 1; b < space.dim(); ++b) {
      const Vector x = space.basis_vector(a);
      const Vector y = space.basis_vector(b);
      Vector br = g.bracket(x, y);
      if (br.norm() > tol) {
        BracketWitness w;
        w.x = x;
        w.y = y;
        w.sec_lower_bound = 0.25 * br.squaredNorm();
        w.bracket = std::move(br);
        return w;
      }
    }
  return std::nullopt;
}

ProofChain proof_chain(const HomogeneousPair& pair, double tol) {
  const auto& g = pair.group;
  const Subspace& h = pair.isotropy.algebra;
  const Subspace p = orthogonal_complement(g, h, tol);
  const Subspace z = center(g, tol);
  const Subspace derived = derived_subalgebra(g, tol);

  ProofChain chain;
  chain.p_h_bracket = max_bracket(g, p, h);
  for (std::size_t i = 0; i < p.dim(); ++i)
    chain.p_outside_center = std::max(chain.p_outside_center, z.residual(p.basis_vector(i)));
  for (std::size_t i = 0; i < derived.dim(); ++i)
    chain.derived_outside_h = std::max(chain.derived_outside_h, h.residual(derived.basis_vector(i)));
  return chain;
}

namespace {

std::vector<Statement> statements_all(bool psc) {
  std::vector<Statement> out;
  for (int id = 1; id <= 5; ++id) out.push_back({id, true, psc});
  return out;
}

std::vector<Statement> statements_ray(bool psc) {
  std::vector<Statement> out;
  for (int id = 1; id <= 3; ++id) out.push_back({id, true, psc});
  for (int id = 4; id <= 5; ++id) out.push_back({id, false, std::nullopt});
  return out;
}

void require_proof_chain(const HomogeneousPair& pair, double tol) {
  const ProofChain chain = proof_chain(pair, tol);
  if (!chain.holds(tol)) {
    std::ostringstream os;
    os << "[p,p] = 0 but the flatness argument fails: |[p,h]| = " << chain.p_h_bracket
       << ", dist(p, Z(g)) = " << chain.p_outside_center
       << ", dist([g,g], h) = " << chain.derived_outside_h;
    throw InternalConsistencyError(os.str());
  }
}

}  // namespace

Verdict classify_homogeneous(const HomogeneousPair& pair, double tol) {
  require_valid(pair, {tol, kIdentityTol});
  Verdict v;
  v.n = pair.manifold_dim();
  const Subspace p = orthogonal_complement(pair.group, pair.isotropy.algebra, tol);
  if (auto w = first_bracket_witness(pair.group, p, tol)) {
    w->space = "p";
    w->role = "H";
    v.psc = true;
    v.witness = std::move(*w);
  } else {
    require_proof_chain(pair, tol);
    v.psc = false;
    v.flat_type = FlatType{FlatFamily::Torus, v.n};
    if (pair.isotropy.component_count > 1) {
      v.notes.push_back("G/H is disconnected; each component is a torus");
    }
  }
  v.statements = statements_all(v.psc);
  return v;
}

FlatCriterion flat_criterion(const GroupDiagram& d, double tol) {
  FlatCriterion out;
  if (!is_abelian(d.group, tol)) {
    out.explanation = "G is not abelian";
    return out;
  }
  if (!d.principal.is_trivial()) {
    out.explanation = "principal isotropy H is not trivial";
    return out;
  }
  for (const auto& [role, k] : d.singular_isotropy()) {
    if (!is_z2(*k, d.group.dim())) {
      out.explanation = "singular isotropy " + role + " is not Z2";
      return out;
    }
  }
  out.flat = true;
  switch (d.kind()) {
    case OrbitSpace::Circle:
    case OrbitSpace::Line:
      out.explanation = "G abelian, H trivial; no singular orbits";
      break;
    case OrbitSpace::Interval:
      out.explanation = "G abelian, H trivial, K- and K+ are Z2";
      break;
    case OrbitSpace::Ray:
      out.explanation = "G abelian, H trivial, K is Z2";
      break;
  }
  return out;
}

namespace {

std::optional<Witness> cohom1_witness(const GroupDiagram& d, double tol) {
  const auto& g = d.group;
  const Subspace& h = d.principal.algebra;
  const auto singular = d.singular_isotropy();
  if (singular.empty()) {
    const Subspace p = orthogonal_complement(g, h, tol);
    if (auto w = first_bracket_witness(g, p, tol)) {
      w->space = "p";
      w->role = "H";
      return Witness{std::move(*w)};
    }
    return std::nullopt;
  }
  for (const auto& [role, k] : singular) {
    // p = k minus h; non-trivial p forces positive Ricci in the T direction.
    const std::size_t slice = k->algebra.dim() - h.dim();
    if (slice > 0) return Witness{SliceWitness{role, slice}};
  }
  for (const auto& [role, k] : singular) {
    const Subspace m = orthogonal_complement(g, k->algebra, tol);
    if (auto w = first_bracket_witness(g, m, tol)) {
      w->space = "m";
      w->role = role;
      return Witness{std::move(*w)};
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict classify_cohom1(const GroupDiagram& d, double tol) {
  require_valid(d, {tol, kIdentityTol});
  Verdict v;
  v.n = d.manifold_dim();
  const FlatCriterion flat = flat_criterion(d, tol);
  if (!flat.flat) {
    auto w = cohom1_witness(d, tol);
    if (!w) {
      throw InternalConsistencyError(
          "no curvature witness although the flat criterion fails (" + flat.explanation +
          "); the action is probably not effective");
    }
    v.psc = true;
    v.witness = std::move(*w);
  } else {
    v.psc = false;
    switch (d.kind()) {
      case OrbitSpace::Circle:
        v.flat_type = FlatType{FlatFamily::Torus, v.n};
        break;
      case OrbitSpace::Line:
        v.flat_type = FlatType{FlatFamily::TorusTimesLine, v.n};
        break;
      case OrbitSpace::Ray:
        v.flat_type = FlatType{FlatFamily::TorusTimesMoebius, v.n};
        break;
      case OrbitSpace::Interval: {
        const auto& iv = std::get<IntervalShape>(d.shape);
        const bool same = finite_subgroups_equal(iv.k_minus, iv.k_plus, d.group.dim());
        if (!same && v.n < 3) {
          throw InternalConsistencyError("distinct Z2 isotropy groups need dimension at least 3");
        }
        v.flat_type = FlatType{same ? FlatFamily::KleinTimesTorus : FlatFamily::ATimesTorus, v.n};
        break;
      }
    }
  }

  if (d.kind() == OrbitSpace::Ray) {
    v.statements = statements_ray(v.psc);
    v.notes.push_back(
        "statements 4 and 5 do not apply over a ray: R^n with the O(n) action is flat yet "
        "carries an invariant torpedo metric of uniformly positive scalar curvature");
    if (v.psc) {
      v.notes.push_back(
          "positive scalar curvature need not be uniformly positive here, "
          "e.g. T^(k-1) x R^2 with the T^k action");
    }
  } else {
    v.statements = statements_all(v.psc);
    if (d.kind() == OrbitSpace::Line && v.psc) {
      v.notes.push_back("a complete invariant PSC metric can be taken uniformly positive");
    }
  }
  return v;
}

GroupDiagram effective_reduction(const GroupDiagram& d, double tol) {
  if (!is_abelian(d.group, tol)) {
    throw std::invalid_argument("effective_reduction: G must be abelian");
  }
  if (d.principal.is_trivial()) return d;
  if (!d.principal.is_discrete()) {
    throw std::invalid_argument("effective_reduction: principal isotropy must be finite");
  }
  if (d.principal.finite_generators.empty()) {
    throw std::invalid_argument("effective_reduction: principal isotropy has no torus generators");
  }

  const std::size_t m = d.group.dim();
  const TorusQuotient q = torus_quotient(d.principal.finite_generators, m);

  auto reduce = [&](const SubgroupDescriptor& k) {
    SubgroupDescriptor out;
    Matrix mapped(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k.algebra.dim()));
    for (std::size_t i = 0; i < k.algebra.dim(); ++i)
      mapped.col(static_cast<Eigen::Index>(i)) = q.linear * k.algebra.basis_vector(i);
    out.algebra = Subspace::span(m, mapped, tol).canonical(tol);
    for (const auto& gen : k.finite_generators) {
      Vector image = wrap_torus(q.linear * gen);
      if (image.norm() > 0.0) out.finite_generators.push_back(std::move(image));
    }
    if (k.is_discrete()) {
      out.component_count = static_cast<int>(subgroup_order(out.finite_generators, m));
    } else {
      out.component_count = k.component_count;
    }
    return out;
  };

  GroupDiagram r;
  r.group = d.group;
  r.principal = SubgroupDescriptor::trivial(m);
  std::visit(
      [&](const auto& shape) {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, CircleShape>) {
          CircleShape c;
          if (shape.monodromy) c.monodromy = q.linear * *shape.monodromy * q.linear.inverse();
          r.shape = c;
        } else if constexpr (std::is_same_v<T, IntervalShape>) {
          r.shape = IntervalShape{reduce(shape.k_minus), reduce(shape.k_plus)};
        } else if constexpr (std::is_same_v<T, LineShape>) {
          r.shape = LineShape{};
        } else {
          r.shape = RayShape{reduce(shape.k)};
        }
      },
      d.shape);
  return r;
}

}  // namespace psc
