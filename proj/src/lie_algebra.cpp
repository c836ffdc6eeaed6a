#include "psc/lie_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace psc {

namespace {

void require_dim(const Vector& v, std::size_t dim, const char* what) {
  if (static_cast<std::size_t>(v.size()) != dim) {
    throw DimensionMismatch(std::string(what) + ": expected vector of length " +
                            std::to_string(dim) + ", got " + std::to_string(v.size()));
  }
}

}  // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::string label)
    : dim_(dim), label_(std::move(label)), c_(dim * dim * dim, 0.0) {
  if (dim == 0) throw std::invalid_argument("Lie algebra dimension must be positive");
}

LieAlgebra LieAlgebra::from_constants(std::size_t dim, std::string label,
                                      const std::vector<StructureConstant>& constants) {
  LieAlgebra algebra(dim, std::move(label));
  for (const auto& sc : constants) {
    if (sc.i >= dim || sc.j >= dim || sc.k >= dim) {
      throw DimensionMismatch("structure constant index out of range for dimension " +
                              std::to_string(dim));
    }
    algebra.set_constant(sc.i, sc.j, sc.k, sc.value);
  }
  return algebra;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  require_dim(x, dim_, "bracket");
  require_dim(y, dim_, "bracket");
  Vector out = Vector::Zero(static_cast<Eigen::Index>(dim_));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      const double w = x[i] * y[j];
      if (w == 0.0) continue;
      const double* row = &c_[index(i, j, 0)];
      for (std::size_t k = 0; k < dim_; ++k) out[k] += w * row[k];
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  require_dim(x, dim_, "ad");
  const auto n = static_cast<Eigen::Index>(dim_);
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t j = 0; j < dim_; ++j) {
    m.col(static_cast<Eigen::Index>(j)) = bracket(x, basis_vector(j));
  }
  return m;
}

std::vector<StructureConstant> LieAlgebra::nonzero_constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (const double v = constant(i, j, k); v != 0.0) out.push_back({i, j, k, v});
  return out;
}

Vector LieAlgebra::basis_vector(std::size_t i) const {
  Vector e = Vector::Zero(static_cast<Eigen::Index>(dim_));
  e[static_cast<Eigen::Index>(i)] = 1.0;
  return e;
}

LieAlgebra LieAlgebra::relabeled(std::string label) const {
  LieAlgebra copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

// --- Subspace ---------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(static_cast<Eigen::Index>(ambient_dim), 0) {}

Subspace Subspace::span(std::size_t ambient_dim, const Matrix& vectors, double tol) {
  if (vectors.cols() > 0 && static_cast<std::size_t>(vectors.rows()) != ambient_dim) {
    throw DimensionMismatch("subspace generators have " + std::to_string(vectors.rows()) +
                            " rows, ambient dimension is " + std::to_string(ambient_dim));
  }
  std::vector<Vector> kept;
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    Vector v = vectors.col(c);
    // Two passes of modified Gram-Schmidt keep the basis orthonormal to
    // machine precision even for nearly dependent input.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : kept) v -= q.dot(v) * q;
    const double norm = v.norm();
    if (norm > tol) kept.push_back(v / norm);
  }
  Subspace s(ambient_dim);
  s.basis_.resize(static_cast<Eigen::Index>(ambient_dim), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c) s.basis_.col(static_cast<Eigen::Index>(c)) = kept[c];
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  const auto n = static_cast<Eigen::Index>(ambient_dim);
  return span(ambient_dim, Matrix::Identity(n, n));
}

Vector Subspace::project(const Vector& v) const {
  require_dim(v, ambient_, "project");
  if (is_zero()) return Vector::Zero(v.size());
  return basis_ * (basis_.transpose() * v);
}

double Subspace::residual(const Vector& v) const { return (v - project(v)).norm(); }

bool Subspace::contains(const Vector& v, double tol) const { return residual(v) <= tol; }

bool Subspace::contains(const Subspace& other, double tol) const {
  if (other.ambient_dim() != ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i), tol)) return false;
  return true;
}

Subspace Subspace::canonical(double tol) const {
  if (is_zero()) return Subspace(ambient_);
  const Matrix projector = basis_ * basis_.transpose();
  Subspace s = span(ambient_, projector, tol);
  if (s.dim() != dim()) {
    // Projector columns lost rank at this tolerance; keep the original span.
    return *this;
  }
  return s;
}

// --- algebra operations -----------------------------------------------------

AlgebraReport validate_algebra(const LieAlgebra& algebra, double tol) {
  AlgebraReport report;
  report.tol = tol;
  const std::size_t n = algebra.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        report.antisymmetry = std::max(
            report.antisymmetry, std::abs(algebra.constant(i, j, k) + algebra.constant(j, i, k)));
        // Q([e_i,e_j],e_k) - Q(e_i,[e_j,e_k]) with Q the identity.
        report.ad_invariance = std::max(
            report.ad_invariance, std::abs(algebra.constant(i, j, k) - algebra.constant(j, k, i)));
      }

  std::vector<Vector> basis;
  basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) basis.push_back(algebra.basis_vector(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = algebra.bracket(basis[i], basis[j]);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector cyc = algebra.bracket(ij, basis[k]) +
                           algebra.bracket(algebra.bracket(basis[j], basis[k]), basis[i]) +
                           algebra.bracket(algebra.bracket(basis[k], basis[i]), basis[j]);
        report.jacobi = std::max(report.jacobi, cyc.lpNorm<Eigen::Infinity>());
      }
    }
  return report;
}

Subspace derived_subalgebra(const LieAlgebra& algebra, double tol) {
  const std::size_t n = algebra.dim();
  Matrix gens(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n * (n - 1) / 2));
  Eigen::Index col = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      gens.col(col++) = algebra.bracket(algebra.basis_vector(i), algebra.basis_vector(j));
  return Subspace::span(n, gens, tol).canonical(tol);
}

Subspace center(const LieAlgebra& algebra, double tol) {
  const std::size_t n = algebra.dim();
  const auto ni = static_cast<Eigen::Index>(n);
  // Row (j, k) of the stacked map X -> ([X, e_j])_k.
  Matrix stacked(ni * ni, ni);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        stacked(static_cast<Eigen::Index>(j * n + k), static_cast<Eigen::Index>(i)) =
            algebra.constant(i, j, k);

  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  std::vector<Eigen::Index> null_cols;
  for (Eigen::Index c = 0; c < ni; ++c) {
    if (c >= sigma.size() || sigma[c] <= tol) null_cols.push_back(c);
  }
  Matrix kernel(ni, static_cast<Eigen::Index>(null_cols.size()));
  for (std::size_t c = 0; c < null_cols.size(); ++c)
    kernel.col(static_cast<Eigen::Index>(c)) = svd.matrixV().col(null_cols[c]);
  return Subspace::span(n, kernel, tol).canonical(tol);
}

Subspace orthogonal_complement(const LieAlgebra& algebra, const Subspace& s, double tol) {
  const std::size_t n = algebra.dim();
  if (s.ambient_dim() != n) {
    throw DimensionMismatch("subspace ambient dimension " + std::to_string(s.ambient_dim()) +
                            " does not match algebra dimension " + std::to_string(n));
  }
  const auto ni = static_cast<Eigen::Index>(n);
  Matrix complement_projector = Matrix::Identity(ni, ni);
  if (!s.is_zero()) complement_projector -= s.basis() * s.basis().transpose();
  Subspace out = Subspace::span(n, complement_projector, tol);
  if (out.dim() + s.dim() != n) {
    throw std::logic_error("orthogonal complement lost rank; tolerance too coarse");
  }
  return out;
}

Subspace direct_sum(const std::vector<Subspace>& parts, double tol) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of no subspaces");
  const std::size_t n = parts.front().ambient_dim();
  Eigen::Index cols = 0;
  for (const auto& p : parts) {
    if (p.ambient_dim() != n) throw DimensionMismatch("direct_sum: ambient dimensions differ");
    cols += static_cast<Eigen::Index>(p.dim());
  }
  Matrix gens(static_cast<Eigen::Index>(n), cols);
  Eigen::Index col = 0;
  for (const auto& p : parts)
    for (std::size_t i = 0; i < p.dim(); ++i) gens.col(col++) = p.basis_vector(i);
  return Subspace::span(n, gens, tol);
}

CompactSplitting split_compact(const LieAlgebra& algebra, double tol) {
  CompactSplitting out{derived_subalgebra(algebra, tol), center(algebra, tol)};
  if (out.derived.dim() + out.center.dim() != algebra.dim()) {
    throw NotReductive("dim [g,g] + dim Z(g) = " +
                       std::to_string(out.derived.dim() + out.center.dim()) + " but dim g = " +
                       std::to_string(algebra.dim()) + "; algebra is not of compact type");
  }
  if (!out.derived.is_zero() && !out.center.is_zero()) {
    const double overlap =
        (out.derived.basis().transpose() * out.center.basis()).lpNorm<Eigen::Infinity>();
    if (overlap > tol) {
      throw NotReductive("[g,g] and Z(g) are not Q-orthogonal (overlap " +
                         std::to_string(overlap) + ")");
    }
  }
  return out;
}

bool is_abelian(const LieAlgebra& algebra, double tol) {
  return center(algebra, tol).dim() == algebra.dim();
}

double subalgebra_defect(const LieAlgebra& algebra, const Subspace& s) {
  double defect = 0.0;
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      defect = std::max(defect,
                        s.residual(algebra.bracket(s.basis_vector(a), s.basis_vector(b))));
  return defect;
}

double max_bracket(const LieAlgebra& algebra, const Subspace& left, const Subspace& right) {
  double best = 0.0;
  for (std::size_t a = 0; a < left.dim(); ++a)
    for (std::size_t b = 0; b < right.dim(); ++b)
      best = std::max(best,
                      algebra.bracket(left.basis_vector(a), right.basis_vector(b)).norm());
  return best;
}

}  // namespace psc
