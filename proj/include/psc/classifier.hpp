#pragma once

#include "psc/diagram.hpp"
#include "psc/lie_algebra.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace psc {

/// Diffeomorphism types of the manifolds in this setting that carry no
/// invariant metric of positive scalar curvature.
enum class FlatFamily {
  Torus,              ///< T^n
  KleinTimesTorus,    ///< K x T^(n-2)
  ATimesTorus,        ///< A x T^(n-3), A = (Mb x S^1) glued to (S^1 x Mb)
  TorusTimesLine,     ///< T^(n-1) x R
  TorusTimesMoebius,  ///< T^(n-2) x open Moebius band
};

struct FlatType {
  FlatFamily family = FlatFamily::Torus;
  std::size_t n = 0;

  /// Human-readable name, e.g. "K x T^1".
  std::string name() const;
  friend bool operator==(const FlatType&, const FlatType&) = default;
};

std::string_view to_string(FlatFamily family);
std::optional<FlatFamily> flat_family_from_string(std::string_view name);

/// One of the five equivalent statements (1: admits PSC, 2: admits invariant
/// PSC, 3: not one of the flat types, 4: universal cover not Euclidean,
/// 5: no flat metric). `value` is empty when the statement is not applicable.
struct Statement {
  int id = 0;
  bool applicable = true;
  std::optional<bool> value;
};

/// Two orthonormal vectors of a reductive complement with non-zero bracket.
struct BracketWitness {
  std::string space;  ///< "p" (complement of h in g) or "m" (complement of k in g)
  std::string role;   ///< which isotropy the complement belongs to ("H", "K", "K-", "K+")
  Vector x;
  Vector y;
  Vector bracket;
  double sec_lower_bound = 0.0;
};

/// The slice complement p = k - h of a singular isotropy is non-trivial.
struct SliceWitness {
  std::string role;
  std::size_t dim = 0;
};

using Witness = std::variant<BracketWitness, SliceWitness>;

struct Verdict {
  bool psc = false;
  std::optional<FlatType> flat_type;
  std::size_t n = 0;
  std::vector<Statement> statements;
  std::optional<Witness> witness;
  std::vector<std::string> notes;
};

/// A step of the classification's internal reasoning failed; the input is
/// not what it claims to be (e.g. a non-effective action).
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// 1/4 |[X, Y]|^2 for Q-orthonormal X, Y: the lower bound for the sectional
/// curvature of G/H on horizontal planes. Throws std::invalid_argument if
/// X, Y are not orthonormal within tol.
double sec_lower_bound(const LieAlgebra& g, const Vector& x, const Vector& y, double tol = kRankTol);

/// Residuals of the flatness argument for G/H with [p, p] = 0.
struct ProofChain {
  double p_h_bracket = 0.0;     ///< max |[p, h]|
  double p_outside_center = 0.0;  ///< max distance of a basis vector of p from Z(g)
  double derived_outside_h = 0.0;  ///< max distance of a basis vector of [g, g] from h
  bool holds(double tol) const {
    return p_h_bracket <= tol && p_outside_center <= tol && derived_outside_h <= tol;
  }
};

ProofChain proof_chain(const HomogeneousPair& pair, double tol = kRankTol);

/// First basis pair (lexicographic) of `space` with non-zero bracket.
std::optional<BracketWitness> first_bracket_witness(const LieAlgebra& g, const Subspace& space,
                                                    double tol = kRankTol);

Verdict classify_homogeneous(const HomogeneousPair& pair, double tol = kRankTol);

struct FlatCriterion {
  bool flat = false;
  std::string explanation;
};

/// G abelian, H trivial and every singular isotropy Z_2 (vacuous for circle
/// and line diagrams).
FlatCriterion flat_criterion(const GroupDiagram& diagram, double tol = kRankTol);

/// Validates, then classifies. Throws ValidationError for invalid diagrams.
Verdict classify_cohom1(const GroupDiagram& diagram, double tol = kRankTol);

/// For abelian G with finite principal isotropy H, passes to the effective
/// action of G/H (again a torus, re-coordinatized). Identity if H is trivial.
GroupDiagram effective_reduction(const GroupDiagram& diagram, double tol = kRankTol);

}  // namespace psc
