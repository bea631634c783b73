#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "hermsymp/lagrangian.hpp"

namespace hermsymp {

/// arg(z) on the branch (-pi, pi], so that -1 - 0i maps to pi.
template <typename Real>
Real principal_arg(const Complex<Real>& z) {
  const Real a = std::arg(z);
  return a == -std::numbers::pi_v<Real> ? std::numbers::pi_v<Real> : a;
}

template <typename Real>
struct MInvariant {
  Real value = 0;
  Index intersection_dim = 0;  // number of eigenvalues excluded at -1
  std::vector<Complex<Real>> eigenvalues;  // of -phi(V) phi(W)^*, sorted by argument
};

/// The real invariant m(V, W): minus 1/(pi i) times the sum of log(lambda) over
/// the eigenvalues lambda != -1 of the unitary -phi(V) phi(W)^*, with the
/// branch arg in (-pi, pi].
///
/// Eigenvalues within tol.eig of -1 are excluded and their count must agree
/// with intersection_dim(V, W). An eigenvalue at distance (tol.eig,
/// 100 tol.eig) from -1 cannot be classified and raises EigenvalueAmbiguity.
template <typename Real>
MInvariant<Real> m_invariant(const Lagrangian<Real>& v, const Lagrangian<Real>& w) {
  detail::require_same_space(*v.space(), *w.space());
  const Tolerances& tol = v.space()->tolerances();
  MInvariant<Real> out;
  const Index k = v.space()->half_dim();
  if (k == 0) return out;

  const CMatrix<Real> u = -(v.phi() * w.phi().adjoint());
  Eigen::ComplexEigenSolver<CMatrix<Real>> solver(u, false);
  if (solver.info() != Eigen::Success) throw EigenvalueAmbiguity("eigen-solve did not converge");
  out.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + k);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            [](const Complex<Real>& a, const Complex<Real>& b) { return principal_arg(a) < principal_arg(b); });

  const Real near = static_cast<Real>(tol.eig);
  Real arg_sum = 0;
  Index excluded = 0;
  for (const auto& lambda : out.eigenvalues) {
    const Real gap = std::abs(lambda + Real(1));
    if (gap < near) {
      ++excluded;
    } else if (gap < 100 * near) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "eigenvalue at distance %.3g from -1 cannot be classified",
                    static_cast<double>(gap));
      throw EigenvalueAmbiguity(buf);
    } else {
      arg_sum += principal_arg(lambda);
    }
  }
  const IntersectionDim inter = intersection_dim(v, w);
  if (inter.dim != excluded) {
    throw IntersectionMismatch("excluded " + std::to_string(excluded) + " eigenvalues at -1 but dim(V cap W) = " +
                               std::to_string(inter.dim));
  }
  out.intersection_dim = excluded;
  // -(1/(pi i)) * i * arg = -arg / pi; the ln|lambda| terms vanish for a unitary.
  out.value = excluded == k ? Real(0) : -arg_sum / std::numbers::pi_v<Real>;
  return out;
}

template <typename Real>
Real m_value(const Lagrangian<Real>& v, const Lagrangian<Real>& w) {
  return m_invariant(v, w).value;
}

template <typename Real>
struct TripleIndex {
  std::int64_t value = 0;
  Real sum = 0;  // m(U,V) + m(V,W) + m(W,U) before rounding
};

/// Maslov triple index m(U,V) + m(V,W) + m(W,U), rounded to the nearest
/// integer; NonIntegerSum if the sum is farther than tol.integer from Z.
template <typename Real>
TripleIndex<Real> triple_index(const Lagrangian<Real>& u, const Lagrangian<Real>& v, const Lagrangian<Real>& w) {
  TripleIndex<Real> out;
  out.sum = m_value(u, v) + m_value(v, w) + m_value(w, u);
  const Real rounded = std::round(out.sum);
  if (std::abs(out.sum - rounded) > static_cast<Real>(u.space()->tolerances().integer)) {
    throw NonIntegerSum("triple index sum " + std::to_string(static_cast<double>(out.sum)) + " is not an integer");
  }
  out.value = static_cast<std::int64_t>(rounded);
  return out;
}

template <typename Real>
struct EtaCorrection {
  Real m_boundary = 0;       // m(WX, WY)
  std::int64_t integer = 0;  // sigma(VX, VY, gamma WY) - sigma(gamma VX, WX, WY)
  Real chain = 0;            // m(VX,VY) - m(gamma VX,WX) + m(gamma VY,WY) - m(WX,WY)
};

/// Finite-dimensional right-hand side of the cut-and-paste formula with
/// boundary conditions WX, WY in place of VX, VY. Checks that the m-chain
/// equals the difference of triple indices to within tol.integer.
template <typename Real>
EtaCorrection<Real> eta_correction_rhs(const Lagrangian<Real>& vx, const Lagrangian<Real>& vy,
                                       const Lagrangian<Real>& wx, const Lagrangian<Real>& wy) {
  const Lagrangian<Real> gvx = gamma_image(vx);
  const Lagrangian<Real> gvy = gamma_image(vy);
  const Lagrangian<Real> gwy = gamma_image(wy);

  EtaCorrection<Real> out;
  out.m_boundary = m_value(wx, wy);
  out.integer = triple_index(vx, vy, gwy).value - triple_index(gvx, wx, wy).value;
  out.chain = m_value(vx, vy) - m_value(gvx, wx) + m_value(gvy, wy) - out.m_boundary;
  if (std::abs(out.chain - static_cast<Real>(out.integer)) > static_cast<Real>(vx.space()->tolerances().integer)) {
    throw NonIntegerSum("m-chain " + std::to_string(static_cast<double>(out.chain)) +
                        " disagrees with the triple-index difference " + std::to_string(out.integer));
  }
  return out;
}

}  // namespace hermsymp
