#pragma once

#include <memory>
#include <utility>

#include "hermsymp/linalg.hpp"
#include "hermsymp/space.hpp"

namespace hermsymp {

template <typename Real>
class Lagrangian;

template <typename Real>
Lagrangian<Real> lagrangian_from_basis(SpacePtr<Real> space, const CMatrix<Real>& basis);

/// A Lagrangian subspace, stored as a gram-orthonormal basis together with the
/// unitary phi(W): ker(gamma - i) -> ker(gamma + i) whose graph it is. Only
/// lagrangian_from_basis creates instances, so every value is validated.
template <typename Real>
class Lagrangian {
 public:
  const SpacePtr<Real>& space() const { return space_; }
  const CMatrix<Real>& basis() const { return basis_; }
  const CMatrix<Real>& phi() const { return phi_; }
  Index dim() const { return basis_.cols(); }

 private:
  Lagrangian(SpacePtr<Real> space, CMatrix<Real> basis, CMatrix<Real> phi)
      : space_(std::move(space)), basis_(std::move(basis)), phi_(std::move(phi)) {}

  friend Lagrangian lagrangian_from_basis<Real>(SpacePtr<Real>, const CMatrix<Real>&);

  SpacePtr<Real> space_;
  CMatrix<Real> basis_;
  CMatrix<Real> phi_;
};

namespace detail {

// Components of gram-orthonormal columns in the +-i eigenbases.
template <typename Real>
std::pair<CMatrix<Real>, CMatrix<Real>> split_coordinates(const HermitianSymplecticSpace<Real>& space,
                                                          const CMatrix<Real>& basis) {
  const auto& split = space.splitting();
  const CMatrix<Real> gb = space.gram() * basis;
  return {split.plus_basis.adjoint() * gb, split.minus_basis.adjoint() * gb};
}

template <typename Real>
void require_same_space(const HermitianSymplecticSpace<Real>& a, const HermitianSymplecticSpace<Real>& b) {
  if (!a.same_structure(b)) throw ValidationError("Lagrangians live in different spaces");
}

}  // namespace detail

/// Validates that span(basis) is Lagrangian and returns it with a
/// gram-orthonormalized copy of the basis (columns processed in order).
template <typename Real>
Lagrangian<Real> lagrangian_from_basis(SpacePtr<Real> space, const CMatrix<Real>& basis) {
  if (!space) throw ValidationError("null space");
  const Tolerances& tol = space->tolerances();
  const Index n = space->dim();
  const Index k = space->half_dim();
  if (basis.rows() != n || basis.cols() != k) {
    throw ValidationError("Lagrangian basis must be " + std::to_string(n) + "x" + std::to_string(k) +
                          ", got " + std::to_string(basis.rows()) + "x" + std::to_string(basis.cols()));
  }
  if (k == 0) return Lagrangian<Real>(std::move(space), basis, CMatrix<Real>(0, 0));

  // Full column rank, judged on the column-normalized whitened basis.
  CMatrix<Real> whitened = space->whiten(basis);
  for (Index j = 0; j < k; ++j) {
    const Real norm = whitened.col(j).norm();
    if (norm == Real(0)) throw ValidationError("Lagrangian basis has a zero column");
    whitened.col(j) /= norm;
  }
  const auto rank = linalg::numerical_rank<Real>(whitened, tol.rank);
  if (rank.rank < k) throw ValidationError("Lagrangian basis is rank deficient");

  CMatrix<Real> ortho = gram_orthonormalize<Real>(space->gram(), basis, 0.0);
  if (ortho.cols() != k) throw ValidationError("Lagrangian basis is rank deficient");

  const Real omega_residual = (ortho.adjoint() * space->symplectic_matrix() * ortho).cwiseAbs().maxCoeff();
  if (omega_residual > static_cast<Real>(tol.alg)) {
    throw ValidationError("omega does not vanish on the subspace (max |omega| = " +
                          std::to_string(static_cast<double>(omega_residual)) + ")");
  }

  auto [plus, minus] = detail::split_coordinates(*space, ortho);
  Eigen::JacobiSVD<CMatrix<Real>> svd(plus);
  if (!(svd.singularValues().minCoeff() > static_cast<Real>(tol.rank))) {
    throw NotAGraph("projection onto the +i eigenspace is singular on the subspace");
  }
  // phi * plus = minus  <=>  plus^T phi^T = minus^T
  Eigen::PartialPivLU<CMatrix<Real>> lu(plus.transpose());
  CMatrix<Real> phi = lu.solve(minus.transpose()).transpose();
  return Lagrangian<Real>(std::move(space), std::move(ortho), std::move(phi));
}

/// The graph {x + U x : x in ker(gamma - i)} of a unitary U in the space's
/// eigenbases.
template <typename Real>
Lagrangian<Real> lagrangian_from_phi(SpacePtr<Real> space, const CMatrix<Real>& unitary) {
  const Index k = space->half_dim();
  if (unitary.rows() != k || unitary.cols() != k) throw ValidationError("phi must be k x k");
  const auto& split = space->splitting();
  CMatrix<Real> basis = split.plus_basis + split.minus_basis * unitary;
  return lagrangian_from_basis<Real>(std::move(space), basis);
}

template <typename Real>
const CMatrix<Real>& phi_of(const Lagrangian<Real>& w) {
  return w.phi();
}

/// gamma(W), which equals the orthogonal complement of W.
template <typename Real>
Lagrangian<Real> gamma_image(const Lagrangian<Real>& w) {
  return lagrangian_from_basis<Real>(w.space(), w.space()->gamma() * w.basis());
}

/// Gram-orthonormal basis of the gram-orthogonal complement of span(basis).
template <typename Real>
CMatrix<Real> orthogonal_complement(const HermitianSymplecticSpace<Real>& space, const CMatrix<Real>& basis) {
  const CMatrix<Real> q = linalg::column_span<Real>(space.whiten(basis), space.tolerances().rank);
  const CMatrix<Real> perp = linalg::null_space<Real>(q.adjoint(), space.tolerances().rank);
  return space.unwhiten(perp);
}

template <typename Real>
CMatrix<Real> orthogonal_complement(const Lagrangian<Real>& w) {
  return orthogonal_complement(*w.space(), w.basis());
}

/// sin of the largest principal angle between two subspaces of `space`
/// (1 if their dimensions differ).
template <typename Real>
Real subspace_distance(const HermitianSymplecticSpace<Real>& space, const CMatrix<Real>& a,
                       const CMatrix<Real>& b) {
  const double cutoff = space.tolerances().rank;
  return linalg::projector_distance<Real>(linalg::column_span<Real>(space.whiten(a), cutoff),
                                          linalg::column_span<Real>(space.whiten(b), cutoff));
}

template <typename Real>
bool subspace_equal(const Lagrangian<Real>& a, const Lagrangian<Real>& b) {
  detail::require_same_space(*a.space(), *b.space());
  return subspace_distance(*a.space(), a.basis(), b.basis()) < static_cast<Real>(a.space()->tolerances().rank);
}

struct IntersectionDim {
  Index dim = 0;
  bool ill_conditioned = false;
};

/// dim(V cap W) = 2k - rank[V | W], with both bases gram-orthonormal.
template <typename Real>
IntersectionDim intersection_dim(const Lagrangian<Real>& v, const Lagrangian<Real>& w) {
  detail::require_same_space(*v.space(), *w.space());
  const auto& space = *v.space();
  const Index k = space.half_dim();
  if (k == 0) return {};
  CMatrix<Real> stacked(space.dim(), 2 * k);
  stacked << v.basis(), w.basis();
  const auto info = linalg::numerical_rank<Real>(space.whiten(stacked), space.tolerances().rank);
  return {2 * k - info.rank, info.ill_conditioned};
}

}  // namespace hermsymp
