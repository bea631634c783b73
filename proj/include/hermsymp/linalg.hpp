#pragma once

// Small dense helpers shared by the symplectic modules. Everything here works
// in Euclidean coordinates; callers whiten by the Cholesky factor of the gram
// matrix first when they need the gram inner product.

#include <algorithm>
#include <cmath>

#include "hermsymp/types.hpp"

namespace hermsymp::linalg {

template <typename Real>
struct RankInfo {
  Index rank = 0;
  bool ill_conditioned = false;  // a singular value sits within a decade of the cutoff
  RVector<Real> singular_values;
};

// Rank with an absolute singular-value cutoff. Inputs are expected to have
// columns of norm O(1).
template <typename Real>
RankInfo<Real> numerical_rank(const CMatrix<Real>& m, double cutoff) {
  RankInfo<Real> info;
  if (m.rows() == 0 || m.cols() == 0) {
    info.singular_values.resize(0);
    return info;
  }
  Eigen::JacobiSVD<CMatrix<Real>> svd(m);
  info.singular_values = svd.singularValues();
  const Real tol = static_cast<Real>(cutoff);
  for (Index i = 0; i < info.singular_values.size(); ++i) {
    const Real s = info.singular_values(i);
    if (s > tol) ++info.rank;
    if (s > tol / 10 && s < tol * 10) info.ill_conditioned = true;
  }
  return info;
}

// Orthonormal basis of the column space (left singular vectors above cutoff).
template <typename Real>
CMatrix<Real> column_span(const CMatrix<Real>& m, double cutoff) {
  if (m.rows() == 0 || m.cols() == 0) return CMatrix<Real>(m.rows(), 0);
  Eigen::JacobiSVD<CMatrix<Real>> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  Index r = 0;
  while (r < s.size() && s(r) > static_cast<Real>(cutoff)) ++r;
  return svd.matrixU().leftCols(r);
}

// Orthonormal basis of the null space (right singular vectors at or below
// cutoff, plus the directions beyond min(rows, cols)).
template <typename Real>
CMatrix<Real> null_space(const CMatrix<Real>& m, double cutoff) {
  const Index n = m.cols();
  if (n == 0) return CMatrix<Real>(0, 0);
  if (m.rows() == 0) return CMatrix<Real>::Identity(n, n);
  Eigen::JacobiSVD<CMatrix<Real>> svd(m, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Index r = 0;
  while (r < s.size() && s(r) > static_cast<Real>(cutoff)) ++r;
  return svd.matrixV().rightCols(n - r);
}

// sin of the largest principal angle between span(a) and span(b); both must
// have orthonormal columns. Returns 1 when the dimensions differ.
template <typename Real>
Real projector_distance(const CMatrix<Real>& a, const CMatrix<Real>& b) {
  if (a.cols() != b.cols()) return Real(1);
  if (a.cols() == 0) return Real(0);
  const CMatrix<Real> diff = a * a.adjoint() - b * b.adjoint();
  Eigen::JacobiSVD<CMatrix<Real>> svd(diff);
  return svd.singularValues()(0);
}

// Rotate each column so that its first coordinate of non-negligible size is
// real and positive.
template <typename Real>
void fix_column_phases(CMatrix<Real>& m, double relative_cutoff) {
  for (Index j = 0; j < m.cols(); ++j) {
    const Real scale = m.col(j).cwiseAbs().maxCoeff();
    if (scale == Real(0)) continue;
    for (Index i = 0; i < m.rows(); ++i) {
      const Real mag = std::abs(m(i, j));
      if (mag > static_cast<Real>(relative_cutoff) * scale) {
        m.col(j) *= std::conj(m(i, j)) / mag;
        m(i, j) = Complex<Real>(mag, Real(0));
        break;
      }
    }
  }
}

}  // namespace hermsymp::linalg
