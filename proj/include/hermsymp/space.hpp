#pragma once

#include <memory>
#include <sstream>
#include <utility>

#include "hermsymp/linalg.hpp"
#include "hermsymp/types.hpp"

namespace hermsymp {

/// Measured residuals for the three defining properties of a Hermitian
/// symplectic space (H, <.,.>, gamma).
template <typename Real>
struct SpaceReport {
  Real gamma_square_residual = 0;  // ||gamma^2 + I||_F
  Real unitarity_residual = 0;     // ||gamma^dagger gamma - I||_F, dagger w.r.t. gram
  Index positive = 0;              // inertia of the form <x, i gamma y>
  Index negative = 0;
  bool gamma_square_ok = false;
  bool unitary_ok = false;
  bool signature_ok = false;

  bool passed() const { return gamma_square_ok && unitary_ok && signature_ok; }
  Index signature() const { return positive - negative; }
};

/// Checks the invariants of a candidate space given in coordinates.
///
/// Structural problems (non-square or mismatched arrays, odd dimension, a
/// gram matrix that is not Hermitian positive definite) throw
/// ValidationError. Failing invariants are reported, not thrown.
template <typename Real>
SpaceReport<Real> validate_space(const CMatrix<Real>& gram, const CMatrix<Real>& gamma,
                                 const Tolerances& tol = {}) {
  const Index n = gram.rows();
  if (gram.cols() != n || gamma.rows() != n || gamma.cols() != n) {
    throw ValidationError("gram and gamma must be square matrices of the same size");
  }
  if (n % 2 != 0) {
    throw ValidationError("dimension must be even, got " + std::to_string(n));
  }
  SpaceReport<Real> report;
  if (n == 0) {
    report.gamma_square_ok = report.unitary_ok = report.signature_ok = true;
    return report;
  }
  const Real scale = gram.norm();
  if ((gram - gram.adjoint()).norm() > static_cast<Real>(tol.alg) * scale) {
    throw ValidationError("gram matrix is not Hermitian");
  }
  const CMatrix<Real> herm = (gram + gram.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> gram_eig(herm, Eigen::EigenvaluesOnly);
  const auto& ev = gram_eig.eigenvalues();
  if (!(ev.minCoeff() > static_cast<Real>(tol.alg) * ev.maxCoeff())) {
    throw ValidationError("gram matrix is not positive definite");
  }

  const CMatrix<Real> id = CMatrix<Real>::Identity(n, n);
  report.gamma_square_residual = (gamma * gamma + id).norm();
  report.gamma_square_ok = report.gamma_square_residual < static_cast<Real>(tol.alg);

  // gamma^dagger = G^{-1} gamma^* G
  Eigen::LLT<CMatrix<Real>> llt(herm);
  const CMatrix<Real> adj = llt.solve(gamma.adjoint() * herm);
  report.unitarity_residual = (adj * gamma - id).norm();
  report.unitary_ok = report.unitarity_residual < static_cast<Real>(tol.alg);

  // Inertia of x^* G (i gamma) y, read off in whitened coordinates where the
  // form becomes L^{-1} (i G gamma) L^{-*}.
  const CMatrix<Real> form = Complex<Real>(0, 1) * herm * gamma;
  const CMatrix<Real> sym = (form + form.adjoint()) / Real(2);
  const CMatrix<Real> lower = llt.matrixL();
  const CMatrix<Real> left = lower.template triangularView<Eigen::Lower>().solve(sym);
  const CMatrix<Real> whitened =
      lower.template triangularView<Eigen::Lower>().solve(left.adjoint()).adjoint();
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> form_eig(
      (whitened + whitened.adjoint()) / Real(2), Eigen::EigenvaluesOnly);
  for (Index i = 0; i < n; ++i) {
    const Real lambda = form_eig.eigenvalues()(i);
    if (lambda > static_cast<Real>(tol.rank)) ++report.positive;
    if (lambda < -static_cast<Real>(tol.rank)) ++report.negative;
  }
  report.signature_ok = report.positive == n / 2 && report.negative == n / 2;
  return report;
}

/// Gram-orthonormal bases of the +i and -i eigenspaces of gamma.
template <typename Real>
struct EigenSplitting {
  CMatrix<Real> plus_basis;
  CMatrix<Real> minus_basis;
};

/// Modified Gram-Schmidt in the inner product x^* G y, two passes, columns in
/// input order. A column whose residual falls below `drop_cutoff` times its
/// original gram norm is dropped.
template <typename Real>
CMatrix<Real> gram_orthonormalize(const CMatrix<Real>& gram, const CMatrix<Real>& basis,
                                  double drop_cutoff) {
  const Index n = basis.rows();
  CMatrix<Real> out(n, basis.cols());
  Index kept = 0;
  for (Index j = 0; j < basis.cols(); ++j) {
    CVector<Real> v = basis.col(j);
    const Real original = std::sqrt(std::abs((v.adjoint() * gram * v)(0, 0)));
    if (original == Real(0)) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (Index i = 0; i < kept; ++i) {
        const Complex<Real> c = (out.col(i).adjoint() * gram * v)(0, 0);
        v -= c * out.col(i);
      }
    }
    const Real norm = std::sqrt(std::abs((v.adjoint() * gram * v)(0, 0)));
    if (norm <= static_cast<Real>(drop_cutoff) * original) continue;
    out.col(kept++) = v / norm;
  }
  return out.leftCols(kept);
}

namespace detail {

template <typename Real>
CMatrix<Real> eigenspace_basis(const CMatrix<Real>& gram, const CMatrix<Real>& gamma,
                               Complex<Real> eigenvalue, const Tolerances& tol) {
  const Index n = gram.rows();
  // Spectral projector onto ker(gamma - eigenvalue) for eigenvalue = +-i:
  // (I - eigenvalue * gamma) / 2 since gamma^2 = -I.
  const CMatrix<Real> projector =
      (CMatrix<Real>::Identity(n, n) - eigenvalue * gamma) / Real(2);
  CMatrix<Real> basis =
      gram_orthonormalize<Real>(gram, projector, std::sqrt(tol.rank));
  linalg::fix_column_phases(basis, tol.rank);
  return basis;
}

}  // namespace detail

/// A finite-dimensional Hermitian symplectic space in coordinates.
///
/// The gram matrix carries the inner product, so non-orthonormal coordinate
/// bases (such as the harmonic forms 1, dx, dy, dx^dy on a flat torus) are
/// represented directly. Construction validates the space and caches the
/// Cholesky factor and the +-i eigensplitting; the object is immutable.
template <typename Real>
class HermitianSymplecticSpace {
 public:
  using Scalar = Complex<Real>;
  using Matrix = CMatrix<Real>;

  HermitianSymplecticSpace(Matrix gram, Matrix gamma, const Tolerances& tol = {})
      : gram_(std::move(gram)), gamma_(std::move(gamma)), tol_(tol) {
    const SpaceReport<Real> report = validate_space<Real>(gram_, gamma_, tol_);
    if (!report.passed()) {
      std::ostringstream msg;
      msg << "not a Hermitian symplectic space:";
      if (!report.gamma_square_ok) msg << " gamma^2 != -I (residual " << report.gamma_square_residual << ")";
      if (!report.unitary_ok) msg << " gamma not unitary (residual " << report.unitarity_residual << ")";
      if (!report.signature_ok) msg << " signature of i*gamma is " << report.signature();
      throw ValidationError(msg.str());
    }
    gram_ = (gram_ + gram_.adjoint()).eval() / Real(2);
    if (dim() > 0) {
      Eigen::LLT<Matrix> llt(gram_);
      upper_ = llt.matrixU();
    }
    splitting_.plus_basis = detail::eigenspace_basis<Real>(gram_, gamma_, Scalar(0, 1), tol_);
    splitting_.minus_basis = detail::eigenspace_basis<Real>(gram_, gamma_, Scalar(0, -1), tol_);
    check_splitting();
  }

  Index dim() const { return gram_.rows(); }
  Index half_dim() const { return gram_.rows() / 2; }
  const Matrix& gram() const { return gram_; }
  const Matrix& gamma() const { return gamma_; }
  const Tolerances& tolerances() const { return tol_; }
  const EigenSplitting<Real>& splitting() const { return splitting_; }

  /// Matrix of omega(x, y) = <x, gamma y>, i.e. G * gamma.
  Matrix symplectic_matrix() const { return gram_ * gamma_; }

  Scalar inner(const CVector<Real>& x, const CVector<Real>& y) const {
    return (x.adjoint() * gram_ * y)(0, 0);
  }
  Scalar omega(const CVector<Real>& x, const CVector<Real>& y) const {
    return (x.adjoint() * gram_ * (gamma_ * y))(0, 0);
  }

  /// Coordinates in which the gram inner product becomes Euclidean: L^* x for
  /// G = L L^*.
  Matrix whiten(const Matrix& coords) const {
    if (dim() == 0) return coords;
    return upper_.template triangularView<Eigen::Upper>() * coords;
  }
  Matrix unwhiten(const Matrix& whitened) const {
    if (dim() == 0) return whitened;
    return upper_.template triangularView<Eigen::Upper>().solve(whitened);
  }

  bool same_structure(const HermitianSymplecticSpace& other) const {
    return this == &other || (gram_ == other.gram_ && gamma_ == other.gamma_);
  }

 private:
  void check_splitting() const {
    const Index k = half_dim();
    if (splitting_.plus_basis.cols() != k || splitting_.minus_basis.cols() != k) {
      throw SplittingFailure("could not separate the +-i eigenspaces of gamma");
    }
    if (k == 0) return;
    const Scalar i(0, 1);
    const Real plus_res = whiten(gamma_ * splitting_.plus_basis - i * splitting_.plus_basis).norm();
    const Real minus_res = whiten(gamma_ * splitting_.minus_basis + i * splitting_.minus_basis).norm();
    if (plus_res > static_cast<Real>(tol_.alg) || minus_res > static_cast<Real>(tol_.alg)) {
      throw SplittingFailure("eigenbasis residual exceeds tolerance");
    }
  }

  Matrix gram_;
  Matrix gamma_;
  Tolerances tol_;
  Matrix upper_;
  EigenSplitting<Real> splitting_;
};

template <typename Real>
using SpacePtr = std::shared_ptr<const HermitianSymplecticSpace<Real>>;

template <typename Real>
SpacePtr<Real> make_space(CMatrix<Real> gram, CMatrix<Real> gamma, const Tolerances& tol = {}) {
  return std::make_shared<const HermitianSymplecticSpace<Real>>(std::move(gram), std::move(gamma), tol);
}

template <typename Real>
const EigenSplitting<Real>& eigensplit(const HermitianSymplecticSpace<Real>& space) {
  return space.splitting();
}

/// C^{2k} with the Euclidean inner product and gamma = [[0, -I], [I, 0]].
template <typename Real>
SpacePtr<Real> standard_space(Index k, const Tolerances& tol = {}) {
  const Index n = 2 * k;
  CMatrix<Real> gamma = CMatrix<Real>::Zero(n, n);
  gamma.block(0, k, k, k) = -CMatrix<Real>::Identity(k, k);
  gamma.block(k, 0, k, k) = CMatrix<Real>::Identity(k, k);
  return make_space<Real>(CMatrix<Real>::Identity(n, n), std::move(gamma), tol);
}

/// Structure pulled back along an invertible change of coordinates T:
/// gram' = T^* G T, gamma' = T^{-1} gamma T. The new space is isomorphic to the
/// old one via x -> T x; if T preserves omega, both share the same omega.
template <typename Real>
SpacePtr<Real> pullback(const HermitianSymplecticSpace<Real>& space, const CMatrix<Real>& map) {
  const Index n = space.dim();
  if (map.rows() != n || map.cols() != n) {
    throw ValidationError("pullback map must be square of the space dimension");
  }
  Eigen::PartialPivLU<CMatrix<Real>> lu(map);
  CMatrix<Real> gram = map.adjoint() * space.gram() * map;
  CMatrix<Real> gamma = lu.solve(space.gamma() * map);
  return make_space<Real>(std::move(gram), std::move(gamma), space.tolerances());
}

}  // namespace hermsymp
