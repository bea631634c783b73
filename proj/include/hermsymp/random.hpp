#pragma once

// Random spaces, Lagrangians and omega-preserving maps for property checks.

#include <cmath>
#include <random>

#include "hermsymp/bordism.hpp"
#include "hermsymp/lagrangian.hpp"

namespace hermsymp::random {

using Engine = std::mt19937_64;

template <typename Real>
CMatrix<Real> gaussian_matrix(Index rows, Index cols, Engine& rng) {
  std::normal_distribution<double> normal;
  CMatrix<Real> m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i)
      m(i, j) = Complex<Real>(static_cast<Real>(normal(rng)), static_cast<Real>(normal(rng)));
  return m;
}

/// Haar-distributed unitary (QR of a Gaussian matrix with the phases of R
/// divided out).
template <typename Real>
CMatrix<Real> unitary(Index k, Engine& rng) {
  if (k == 0) return CMatrix<Real>(0, 0);
  Eigen::HouseholderQR<CMatrix<Real>> qr(gaussian_matrix<Real>(k, k, rng));
  CMatrix<Real> q = qr.householderQ();
  const CMatrix<Real> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Index j = 0; j < k; ++j) {
    const Real mag = std::abs(r(j, j));
    if (mag > Real(0)) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

/// Invertible map with singular values in [e^{-spread}, e^{spread}].
template <typename Real>
CMatrix<Real> well_conditioned(Index n, Engine& rng, double spread = 1.0) {
  std::uniform_real_distribution<double> uni(-spread, spread);
  CMatrix<Real> d = CMatrix<Real>::Zero(n, n);
  for (Index i = 0; i < n; ++i) d(i, i) = static_cast<Real>(std::exp(uni(rng)));
  return unitary<Real>(n, rng) * d * unitary<Real>(n, rng);
}

/// The standard structure on C^{2k} pulled back along a random
/// well-conditioned map.
template <typename Real>
SpacePtr<Real> space(Index k, Engine& rng, const Tolerances& tol = {}) {
  const auto base = standard_space<Real>(k, tol);
  if (k == 0) return base;
  return pullback(*base, well_conditioned<Real>(2 * k, rng));
}

template <typename Real>
Lagrangian<Real> lagrangian(const SpacePtr<Real>& sp, Engine& rng) {
  return lagrangian_from_phi<Real>(sp, unitary<Real>(sp->half_dim(), rng));
}

/// A Lagrangian W with dim(V cap W) == shared: phi(W) = phi(V) Q with Q having
/// eigenvalue 1 of multiplicity `shared` and other eigenvalues bounded away from 1.
template <typename Real>
Lagrangian<Real> lagrangian_meeting(const Lagrangian<Real>& v, Index shared, Engine& rng) {
  const Index k = v.space()->half_dim();
  std::uniform_real_distribution<double> angle(0.3, 2 * 3.141592653589793 - 0.3);
  CMatrix<Real> d = CMatrix<Real>::Zero(k, k);
  for (Index i = 0; i < k; ++i) {
    d(i, i) = i < shared ? Complex<Real>(1) : std::polar(Real(1), static_cast<Real>(angle(rng)));
  }
  const CMatrix<Real> r = unitary<Real>(k, rng);
  return lagrangian_from_phi<Real>(v.space(), CMatrix<Real>(v.phi() * r * d * r.adjoint()));
}

/// Cayley transform (I - X/2)^{-1}(I + X/2) of X = Omega^{-1} K with K
/// Hermitian of norm about `scale`; the result preserves
/// omega(x, y) = x^* Omega y.
template <typename Real>
CMatrix<Real> symplectic_map(const HermitianSymplecticSpace<Real>& sp, Engine& rng, double scale = 0.5) {
  const Index n = sp.dim();
  if (n == 0) return CMatrix<Real>(0, 0);
  const CMatrix<Real> g = gaussian_matrix<Real>(n, n, rng);
  const CMatrix<Real> herm = (g + g.adjoint()) * static_cast<Real>(scale / (4 * std::sqrt(double(n))));
  const CMatrix<Real> omega = sp.symplectic_matrix();
  const CMatrix<Real> x = omega.partialPivLu().solve(herm);
  const CMatrix<Real> id = CMatrix<Real>::Identity(n, n);
  return (id - x / Real(2)).partialPivLu().solve(id + x / Real(2));
}

/// A random Lagrangian relation H0 -> H1 (any Lagrangian of H0^- (+) H1).
template <typename Real>
BordismRelation<Real> relation(const SpacePtr<Real>& h0, const SpacePtr<Real>& h1, Engine& rng) {
  const auto product = product_space(*h0, *h1, true);
  return BordismRelation<Real>(h0, h1, lagrangian<Real>(product, rng).basis());
}

}  // namespace hermsymp::random
