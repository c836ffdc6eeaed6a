#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace psc {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Default cutoff for numerical rank decisions (subspace spans, null spaces).
inline constexpr double kRankTol = 1e-9;
/// Default tolerance for exact algebraic identities (Jacobi, ad-invariance).
inline constexpr double kIdentityTol = 1e-12;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the reductive splitting g = [g,g] + Z(g) cannot be formed.
class NotReductive : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// One non-zero structure constant: [e_i, e_j] has coefficient `value` on e_k.
struct StructureConstant {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  double value = 0.0;
};

/// A finite-dimensional real Lie algebra given by structure constants relative
/// to a basis that is orthonormal for the fixed inner product Q. Q is therefore
/// the identity matrix and never stored.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::size_t dim, std::string label);

  /// Entries are taken literally; no antisymmetric completion happens here.
  static LieAlgebra from_constants(std::size_t dim, std::string label,
                                   const std::vector<StructureConstant>& constants);

  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }

  double constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[index(i, j, k)];
  }
  void set_constant(std::size_t i, std::size_t j, std::size_t k, double value) {
    c_[index(i, j, k)] = value;
  }

  /// [X, Y] = sum_ij X_i Y_j [e_i, e_j].
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Matrix of ad_X in the orthonormal basis (column j is [X, e_j]).
  Matrix ad(const Vector& x) const;

  /// Non-zero structure constants in lexicographic (i, j, k) order.
  std::vector<StructureConstant> nonzero_constants() const;

  Vector basis_vector(std::size_t i) const;

  /// Returns a copy with a new label.
  LieAlgebra relabeled(std::string label) const;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * dim_ + j) * dim_ + k;
  }

  std::size_t dim_ = 0;
  std::string label_;
  std::vector<double> c_;
};

/// A linear subspace of a Lie algebra, stored as an orthonormal basis
/// (columns of `basis`). The ambient dimension is kept even when the
/// subspace is zero.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);

  /// Spans `vectors` (columns), orthonormalized by Gram-Schmidt in column order.
  /// Columns whose residual falls below `tol` are dropped.
  static Subspace span(std::size_t ambient_dim, const Matrix& vectors, double tol = kRankTol);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return static_cast<std::size_t>(basis_.cols()); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.col(static_cast<Eigen::Index>(i)); }

  Vector project(const Vector& v) const;
  /// Norm of the component of v orthogonal to this subspace.
  double residual(const Vector& v) const;
  bool contains(const Vector& v, double tol = kRankTol) const;
  bool contains(const Subspace& other, double tol = kRankTol) const;

  /// Re-expresses the basis by projecting e_1, e_2, ... in order and
  /// orthonormalizing, which gives a reproducible basis for a given space.
  Subspace canonical(double tol = kRankTol) const;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

struct AlgebraReport {
  double antisymmetry = 0.0;
  double jacobi = 0.0;
  double ad_invariance = 0.0;
  double tol = kIdentityTol;

  bool passed() const { return antisymmetry <= tol && jacobi <= tol && ad_invariance <= tol; }
};

/// Max violations of antisymmetry, Jacobi, and Q([X,Y],Z) = Q(X,[Y,Z]) over
/// all basis triples.
AlgebraReport validate_algebra(const LieAlgebra& algebra, double tol = kIdentityTol);

/// [g, g] with canonical orthonormal basis.
Subspace derived_subalgebra(const LieAlgebra& algebra, double tol = kRankTol);

/// Z(g): the kernel of X -> ad_X.
Subspace center(const LieAlgebra& algebra, double tol = kRankTol);

Subspace orthogonal_complement(const LieAlgebra& algebra, const Subspace& s,
                               double tol = kRankTol);

/// Orthogonal sum of subspaces (must be mutually orthogonal up to tol for
/// the result to have the summed dimension; otherwise the span is returned).
Subspace direct_sum(const std::vector<Subspace>& parts, double tol = kRankTol);

struct CompactSplitting {
  Subspace derived;
  Subspace center;
};

/// g = [g,g] + Z(g). Throws NotReductive if the dimensions do not add up or
/// the parts are not Q-orthogonal.
CompactSplitting split_compact(const LieAlgebra& algebra, double tol = kRankTol);

bool is_abelian(const LieAlgebra& algebra, double tol = kRankTol);

/// Max residual of [s_a, s_b] outside s over basis pairs.
double subalgebra_defect(const LieAlgebra& algebra, const Subspace& s);

/// Largest norm of [a, b] over basis vectors a of `left` and b of `right`.
double max_bracket(const LieAlgebra& algebra, const Subspace& left, const Subspace& right);

}  // namespace psc
